from spack.package import *


class Cabana(CMakePackage, CudaPackage, ROCmPackage):
    """The Exascale Co-Design Center for Particle Applications Toolkit."""

    homepage = "https://github.com/ECP-copa/Cabana"
    url = "https://github.com/ECP-copa/Cabana/archive/0.6.1.tar.gz"

    maintainers("junghans", "streeve")

    license("BSD-3-Clause")

    version("0.6.1", sha256="3d1ed6d3a0f7e168b5b2c734046f8f3c72d448b7ed1b14d6a9d060aca45cd29c")
    version("0.6.0", sha256="a88a3f80215998169cdbd37661c0c0af57e344af74306dcd2b61983d7c69e6e5")

    variant("shared", default=True, description="Build shared libraries")
    variant("mpi", default=True, description="Build with mpi support")
    variant("arborx", default=False, description="Build with ArborX support")
    variant("heffte", default=False, description="Build with heFFTe support")
    variant("hdf5", default=False, description="Build with HDF5 support")
    variant("examples", default=False, description="Build examples")

    depends_on("cxx", type="build")
    depends_on("cmake@3.16:", type="build")
    depends_on("kokkos@4:")
    depends_on("mpi", when="+mpi")
    depends_on("arborx", when="+arborx")
    depends_on("heffte@2.3.0", when="+heffte")
    depends_on("hdf5", when="+hdf5")

    conflicts("+rocm", when="+cuda")

    def cmake_args(self):
        options = [
            self.define_from_variant("BUILD_SHARED_LIBS", "shared"),
            self.define_from_variant("Cabana_REQUIRE_MPI", "mpi"),
            self.define_from_variant("Cabana_REQUIRE_ARBORX", "arborx"),
            self.define_from_variant("Cabana_REQUIRE_HEFFTE", "heffte"),
            self.define_from_variant("Cabana_REQUIRE_HDF5", "hdf5"),
            self.define_from_variant("Cabana_ENABLE_EXAMPLES", "examples"),
            self.define("Cabana_ENABLE_TESTING", False),
        ]
        return options
