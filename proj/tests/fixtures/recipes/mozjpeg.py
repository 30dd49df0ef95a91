from spack.package import *


class Mozjpeg(CMakePackage):
    """MozJPEG is a patched version of libjpeg-turbo which improves
    JPEG compression efficiency achieving higher visual quality and
    smaller file sizes at the same time."""

    homepage = "https://github.com/mozilla/mozjpeg"
    url = "https://github.com/mozilla/mozjpeg/archive/refs/tags/v4.1.5.tar.gz"

    license("BSD-3-Clause")

    version("4.1.5", sha256="d3164524960a8d8e0fd0fcc5e2d019b7e72138b4b270b2340a1e259e55310e27")

    variant("shared", default=True, description="Build shared libraries")
    variant("static", default=False, description="Build static libraries")

    depends_on("c", type="build")
    depends_on("cmake@2.8.12:", type="build")
    depends_on("yasm", type="build")
    depends_on("libpng")

    def cmake_args(self):
        return [
            self.define_from_variant("ENABLE_SHARED", "shared"),
            self.define_from_variant("ENABLE_STATIC", "static"),
            self.define("WITH_TURBOJPEG", True),
        ]
