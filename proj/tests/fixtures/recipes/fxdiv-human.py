class Fxdiv(CMakePackage):
    depends_on("c", type="build")
    depends_on("cxx", type="build")

    depends_on("cmake@3.5:", type="build")
    depends_on("python", type="build")

    def cmake_args(self):
        return [
            self.define("FXDIV_BUILD_TESTS", False),
            self.define("FXDIV_BUILD_BENCHMARKS", False),
        ]
