from spack.package import *


class Googletest(CMakePackage):
    """Google test framework for C++. Also called gtest."""

    homepage = "https://github.com/google/googletest"
    url = "https://github.com/google/googletest/archive/refs/tags/v1.14.0.tar.gz"

    maintainers("sethrj")
    license("BSD-3-Clause")

    version("1.14.0", sha256="8ad598c73ad796e0d8280b082cebd82a630d73e73cd3c70057938a6501bba5d7")
    version("1.13.0", sha256="ad7fdba11ea011c1d925b3289cf4af2c66a352e18d4c7264392fead75e919363")

    variant("gmock", default=True, description="Build with gmock", when="@1.8:")
    variant("pthreads", default=True, description="Build multithreaded version with pthreads")
    variant("shared", default=True, description="Build shared libraries (DLLs)")

    depends_on("c", type="build")
    depends_on("cxx", type="build")
    depends_on("cmake@2.8.12:", type="build")

    def cmake_args(self):
        spec = self.spec
        args = [
            self.define_from_variant("BUILD_GMOCK", "gmock"),
            self.define_from_variant("BUILD_SHARED_LIBS", "shared"),
            self.define("gtest_disable_pthreads", spec.satisfies("~pthreads")),
        ]
        return args
