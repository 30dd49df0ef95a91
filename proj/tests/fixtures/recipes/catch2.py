from spack.package import *


class Catch2(CMakePackage):
    """Catch2 is a multi-paradigm test framework for C++, which also
    supports Objective-C and maybe C."""

    homepage = "https://github.com/catchorg/Catch2"
    url = "https://github.com/catchorg/Catch2/archive/refs/tags/v3.5.3.tar.gz"

    maintainers("ax3l")
    license("BSL-1.0")

    version("3.5.3", sha256="f89ab3cde114bbd0a5b18581af5af9a5c43090ddec25eb49d99b9e2a635b2dd7")
    version("2.13.10", sha256="d54a712b7b1d7708bc7a819a8e6e47b2fde9536f487b89ccbca295072a7d9943")

    variant("shared", default=False, description="Build shared library")

    depends_on("cxx", type="build")
    depends_on("cmake@3.16:", type="build", when="@3:")

    def cmake_args(self):
        return [
            self.define_from_variant("BUILD_SHARED_LIBS", "shared"),
            self.define("CATCH_BUILD_TESTING", False),
        ]
