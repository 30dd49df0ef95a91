from spack.package import *


class Benchmark(CMakePackage):
    """A microbenchmark support library"""

    homepage = "https://github.com/google/benchmark"
    url = "https://github.com/google/benchmark/archive/v1.8.3.tar.gz"

    license("Apache-2.0")

    version("1.8.3", sha256="6bc180a57d23d4d9515519f92b0c83d61b05b5bab188961f36ac7b06b0d9e9ce")
    version("1.8.2", sha256="2aab2980d0376137f969d92848fbb68216abb07633034534fc8c65cc4e7a0e93")

    variant("performance_counters", default=True, description="Enable performance counters provided by libpfm")

    depends_on("c", type="build")
    depends_on("cxx", type="build")
    depends_on("cmake@3.10:", type="build")
    depends_on("libpfm4", when="+performance_counters", type=("build", "link"))

    def cmake_args(self):
        return [
            "-DBENCHMARK_ENABLE_TESTING=OFF",
            "-DBENCHMARK_ENABLE_GTEST_TESTS=OFF",
            self.define_from_variant("BENCHMARK_ENABLE_LIBPFM", "performance_counters"),
        ]
