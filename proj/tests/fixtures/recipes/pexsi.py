from spack.package import *


class Pexsi(CMakePackage):
    """The PEXSI library is written in C++, and uses message passing interface
    (MPI) to parallelize the computation on distributed memory computing
    systems and achieve scalability on more than 10,000 processors."""

    homepage = "https://math.berkeley.edu/~linlin/pexsi/index.html"
    url = "https://bitbucket.org/berkeleylab/pexsi/downloads/pexsi_v2.0.0.tar.gz"

    license("BSD-3-Clause-LBNL")

    version("2.0.0", sha256="c5c83c2931b2bd0c68a462a49eeec983e78ff5e3eabc0a8a5cbca338e0c5bea5")
    version("1.2.0", sha256="8bfad6ec6866c6a29e1cc87fb1c17a39e7332b45026da699d21069b18e7b72b3")

    variant("openmp", default=False, description="Build with OpenMP support")
    variant("fortran", default=False, description="Builds the Fortran interface")

    depends_on("c", type="build")
    depends_on("cxx", type="build")
    depends_on("fortran", type="build", when="+fortran")
    depends_on("cmake@3.10:", type="build")
    depends_on("mpi")
    depends_on("parmetis")
    depends_on("superlu-dist@6.1:7", when="@1.2.0:")
    depends_on("blas")
    depends_on("lapack")

    def cmake_args(self):
        args = [
            self.define_from_variant("PEXSI_ENABLE_OPENMP", "openmp"),
            self.define_from_variant("PEXSI_ENABLE_FORTRAN", "fortran"),
        ]
        return args
