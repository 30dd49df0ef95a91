from spack.package import *


class Spdlog(CMakePackage):
    """Very fast, header only, C++ logging library"""

    homepage = "https://github.com/gabime/spdlog"
    url = "https://github.com/gabime/spdlog/archive/v1.13.0.tar.gz"

    license("MIT")

    version("1.13.0", sha256="534f2ee1a4dcbeb22249856edfb2be76a1cf4f708a20b0ac2ed090ee24cfdbc9")
    version("1.12.0", sha256="4dccf2d10f410c1e2feaff89966bfc49a1abb29ef6f08246335b110e001e09a9")

    variant("shared", default=True, description="Build shared libraries")
    variant("fmt_external", default=False, description="Build using external fmt libraries")

    depends_on("cxx", type="build")
    depends_on("cmake@3.2:", type="build")
    depends_on("fmt@5.3:", when="+fmt_external")

    def cmake_args(self):
        return [
            self.define_from_variant("SPDLOG_BUILD_SHARED", "shared"),
            self.define_from_variant("SPDLOG_FMT_EXTERNAL", "fmt_external"),
            self.define("SPDLOG_BUILD_TESTS", False),
        ]
