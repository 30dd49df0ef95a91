from spack.package import *


class Eigen(CMakePackage):
    """Eigen is a C++ template library for linear algebra: matrices, vectors,
    numerical solvers, and related algorithms."""

    homepage = "https://eigen.tuxfamily.org/"
    url = "https://gitlab.com/libeigen/eigen/-/archive/3.4.0/eigen-3.4.0.tar.gz"

    license("MPL-2.0")

    version("3.4.0", sha256="8586084f71f9bde545ee7fa6d00288b264a2b7ac3607b974e54d13e7162c1c72")
    version("3.3.9", sha256="7985975b787340124786f092b3a07d594b2e9cd53bbfe5f3d9b1daee7d55f56f")

    depends_on("cxx", type="build")
    depends_on("cmake@3.5:", type="build")

    patch("fix-cmake-install.patch", when="@3.3.9")
