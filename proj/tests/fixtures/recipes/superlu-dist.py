from spack.package import *


class SuperluDist(CMakePackage, CudaPackage, ROCmPackage):
    """A general purpose library for the direct solution of large, sparse,
    nonsymmetric systems of linear equations on high performance machines."""

    homepage = "https://crd-legacy.lbl.gov/~xiaoye/SuperLU/"
    url = "https://github.com/xiaoyeli/superlu_dist/archive/v8.2.1.tar.gz"

    maintainers("xiaoyeli")
    license("BSD-3-Clause-LBNL")

    version("8.2.1", sha256="b77d065cafa6bc1a1dcc15bf23fd854f54b05762b165badcffc195835ad2bddf")
    version("8.1.2", sha256="7b16c442bb01ea8b298c0aab9a2584aa4615d09786aac968cb2f3118c058206b")

    variant("int64", default=False, description="Build with 64 bit integers")
    variant("openmp", default=False, description="Build with OpenMP support")
    variant("shared", default=True, description="Build shared libraries")

    depends_on("c", type="build")
    depends_on("cxx", type="build")
    depends_on("fortran", type="build")
    depends_on("cmake@3.18.1:", type="build")
    depends_on("mpi")
    depends_on("blas")
    depends_on("lapack")
    depends_on("parmetis +int64", when="+int64")
    depends_on("parmetis ~int64", when="~int64")

    conflicts("+rocm", when="+cuda")

    def cmake_args(self):
        args = [
            "-DUSE_XSDK_DEFAULTS=YES",
            self.define_from_variant("enable_openmp", "openmp"),
            self.define_from_variant("BUILD_SHARED_LIBS", "shared"),
            self.define("enable_examples", False),
            self.define("enable_tests", False),
        ]
        return args
