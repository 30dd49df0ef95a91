from spack.package import *


class Heffte(CMakePackage, CudaPackage, ROCmPackage):
    """Highly Efficient FFT for Exascale."""

    homepage = "https://github.com/icl-utk-edu/heffte"
    url = "https://github.com/icl-utk-edu/heffte/archive/v2.4.0.tar.gz"

    maintainers("mkstoyanov")
    license("BSD-3-Clause")

    version("2.4.0", sha256="02310fb4f9688df02f7181667e61c3adb7e38baf79611d80919d47452ff7881d")
    version("2.3.0", sha256="63db8c9a8822211d23e29f7adf5aa88bb462c91d7a18c296c3ef3a06be8d6171")

    variant("shared", default=True, description="Builds with shared libraries")
    variant("fftw", default=False, description="Builds with support for FFTW backend")
    variant("mkl", default=False, description="Builds with support for MKL backend")
    variant("magma", default=False, description="Use helper methods from the UTK MAGMA library")
    variant("python", default=False, description="Install the Python bindings")
    variant("fortran", default=False, description="Install the Fortran modules")

    depends_on("cxx", type="build")
    depends_on("cmake@3.10:", type="build")
    depends_on("mpi")
    depends_on("fftw@3.3.8:", when="+fftw")
    depends_on("intel-oneapi-mkl", when="+mkl")
    depends_on("python@3.6:", when="+python", type=("build", "run"))
    depends_on("py-mpi4py", when="+python", type=("build", "run"))
    depends_on("magma@2.5.3:", when="+cuda+magma")

    conflicts("~fftw", when="~mkl~cuda~rocm")

    def cmake_args(self):
        return [
            self.define_from_variant("BUILD_SHARED_LIBS", "shared"),
            self.define_from_variant("Heffte_ENABLE_FFTW", "fftw"),
            self.define_from_variant("Heffte_ENABLE_MKL", "mkl"),
            self.define_from_variant("Heffte_ENABLE_MAGMA", "magma"),
            self.define_from_variant("Heffte_ENABLE_PYTHON", "python"),
            self.define_from_variant("Heffte_ENABLE_FORTRAN", "fortran"),
        ]
