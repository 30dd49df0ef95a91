from spack.package import *


class Silo(CMakePackage):
    """Silo is a library for reading and writing a wide variety of scientific
    data to binary, disk files."""

    homepage = "https://silo.llnl.gov"
    url = "https://github.com/LLNL/Silo/archive/refs/tags/4.11.1.tar.gz"

    maintainers("markcmiller86")
    license("BSD-3-Clause")

    version("4.11.1", sha256="49eddc00304aa4a19074b099559edbdcaa3532c98df32f99aa62b9ec3ea7cee2")

    variant("shared", default=True, description="Build shared libraries")
    variant("hdf5", default=True, description="Use the HDF5 for database I/O")
    variant("silex", default=False, description="Builds Silex, a GUI for viewing Silo files")
    variant("python", default=False, description="Build Python module")

    depends_on("c", type="build")
    depends_on("cxx", type="build")
    depends_on("cmake@3.12:", type="build")
    depends_on("hdf5@1.8:", when="+hdf5")
    depends_on("qt@5:", when="+silex")
    depends_on("python@3:", when="+python", type=("build", "link", "run"))
    depends_on("zlib-api")

    conflicts("+hdf5", when="@:4.10.2 ^hdf5@1.12:")

    def cmake_args(self):
        return [
            self.define_from_variant("SILO_ENABLE_SHARED", "shared"),
            self.define_from_variant("SILO_ENABLE_HDF5", "hdf5"),
            self.define_from_variant("SILO_ENABLE_SILEX", "silex"),
            self.define_from_variant("SILO_ENABLE_PYTHON_MODULE", "python"),
            self.define("SILO_ENABLE_TESTS", False),
        ]
