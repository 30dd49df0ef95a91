from spack.package import *


class Kokkos(CMakePackage, CudaPackage, ROCmPackage):
    """Kokkos implements a programming model in C++ for writing performance
    portable applications targeting all major HPC platforms."""

    homepage = "https://kokkos.org/"
    url = "https://github.com/kokkos/kokkos/archive/refs/tags/4.3.01.tar.gz"
    git = "https://github.com/kokkos/kokkos.git"

    maintainers("crtrott", "janciesko")

    license("Apache-2.0 WITH LLVM-exception")

    version("4.3.01", sha256="5998b7c732664d6b5e219ccc445cd3077f0d3968b581be63e7104bc17f7c0a6e")
    version("4.2.01", sha256="cbabbabba021d00923fb357d2e1b905dda3838bd03c885a6752062fe03c67964")

    variant("openmp", default=False, description="Build with OpenMP backend")
    variant("serial", default=True, description="Build with Serial backend")
    variant("threads", default=False, description="Build with C++ threads backend")
    variant("shared", default=True, description="Build shared libraries")
    variant("examples", default=False, description="Build examples")

    depends_on("cxx", type="build")
    depends_on("cmake@3.16:", type="build")

    with when("+cuda"):
        depends_on("cuda@11:")
        depends_on("kokkos-nvcc-wrapper", type="build")

    depends_on("hip@5.1:", when="+rocm")

    conflicts("+cuda", when="+rocm")
    conflicts("~serial", when="~openmp~threads~cuda")

    def cmake_args(self):
        args = [
            self.define_from_variant("Kokkos_ENABLE_OPENMP", "openmp"),
            self.define_from_variant("Kokkos_ENABLE_SERIAL", "serial"),
            self.define_from_variant("Kokkos_ENABLE_THREADS", "threads"),
            self.define_from_variant("BUILD_SHARED_LIBS", "shared"),
            self.define_from_variant("Kokkos_ENABLE_EXAMPLES", "examples"),
            self.define("Kokkos_ENABLE_TESTS", False),
        ]
        if self.spec.satisfies("+cuda"):
            args.append("-DKokkos_ENABLE_CUDA=ON")
        return args
