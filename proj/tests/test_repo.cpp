#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "spackgen/cmake_scan.hpp"
#include "spackgen/errors.hpp"
#include "spackgen/repo.hpp"
#include "spackgen/util.hpp"

using namespace spackgen;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("spackgen-test-" + hex64(fnv1a(std::to_string(::getpid()) +
                                               std::to_string(counter()++))));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

void put(const fs::path& p, const std::string& content) {
    write_file(p, content);
}

}  // namespace

TEST_CASE("cmake scanner handles quoting, comments, and nesting") {
    std::string src = R"(# top comment
cmake_minimum_required(VERSION 3.16)
project(Demo VERSION 1.2.3 LANGUAGES C CXX)  # trailing comment
find_package(MPI REQUIRED)
option(ENABLE_OPENMP "Use OpenMP
 spanning lines" OFF)
if(NOT (A AND B))
  find_package(ZLIB)
endif()
set(MY_FLAG ON CACHE BOOL "a cached flag")
#[[ bracket comment
find_package(Hidden)
]]
add_library(demo src/demo.c)
)";
    auto commands = scan_cmake(src);
    std::vector<std::string> names;
    for (const auto& c : commands) names.push_back(c.name);
    CHECK(std::count(names.begin(), names.end(), "find_package") == 2);
    CHECK(std::count(names.begin(), names.end(), "option") == 1);
    // the bracket-commented find_package(Hidden) must not appear
    for (const auto& c : commands)
        if (c.name == "find_package") CHECK(c.args[0] != "Hidden");

    for (const auto& c : commands) {
        if (c.name == "project") {
            REQUIRE(c.args.size() >= 6);
            CHECK(c.args[0] == "Demo");
            CHECK(c.args[2] == "1.2.3");
        }
        if (c.name == "option") {
            CHECK(c.args[0] == "ENABLE_OPENMP");
            CHECK(c.args[2] == "OFF");
        }
    }
}

TEST_CASE("extract_metadata on an MPI/OpenMP fixture") {
    TempDir repo;
    put(repo.path / "CMakeLists.txt", R"(cmake_minimum_required(VERSION 3.16)
project(Demo VERSION 2.0 LANGUAGES C CXX)
find_package(MPI REQUIRED)
find_package(OpenMP)
option(ENABLE_OPENMP "Enable OpenMP" OFF)
add_library(demo src/demo.c)
)");
    put(repo.path / "src" / "demo.c", "int main(){}\n");

    RepoMetadata meta = extract_metadata(repo.path);
    CHECK(meta.package_name == "demo");
    CHECK(meta.build_system == "cmake");
    CHECK(meta.dependency_hints.count("mpi") == 1);
    CHECK(meta.dependency_hints.count("cmake") == 1);
    CHECK(meta.dependency_hints.count("c") == 1);
    CHECK(meta.dependency_hints.count("cxx") == 1);
    CHECK(meta.build_options.count("enable_openmp") == 1);
    CHECK(meta.feature_hints.count("mpi") == 1);
    CHECK(meta.feature_hints.count("openmp") == 1);
    // OpenMP is not a package: no dependency hint for it
    CHECK(meta.dependency_hints.count("openmp") == 0);
    CHECK(meta.version_info.version_string == "2.0");
}

TEST_CASE("extract_metadata on a cabana-pd-like fixture") {
    TempDir repo;
    put(repo.path / "CMakeLists.txt", R"(cmake_minimum_required(VERSION 3.18)
project(CabanaPD LANGUAGES CXX C VERSION 0.4.0)
find_package(Cabana REQUIRED)
find_package(nlohmann_json REQUIRED)
find_package(GTest)
option(CabanaPD_ENABLE_TESTING "Build tests" OFF)
option(CabanaPD_ENABLE_HDF5 "Enable HDF5 output" ON)
option(CabanaPD_ENABLE_SILO "Enable SILO output" OFF)
)");
    RepoMetadata meta = extract_metadata(repo.path);
    CHECK(meta.package_name == "cabana-pd");
    for (const char* dep : {"cabana", "nlohmann-json", "googletest", "cmake", "cxx", "c"})
        CHECK(meta.dependency_hints.count(dep) == 1);
    for (const char* opt : {"hdf5", "silo", "tests"}) CHECK(meta.build_options.count(opt) == 1);
    CHECK(meta.feature_hints.count("tests") == 1);
}

TEST_CASE("no invented hints: every hint appears in the raw fragments") {
    TempDir repo;
    put(repo.path / "CMakeLists.txt", R"(cmake_minimum_required(VERSION 3.16)
project(Sample VERSION 1.0 LANGUAGES CXX)
find_package(HDF5 REQUIRED)
option(SAMPLE_WITH_BENCHMARKS "bench" OFF)
set(CMAKE_CXX_STANDARD 17)
)");
    RepoMetadata meta = extract_metadata(repo.path);
    auto appears = [&](const std::string& ident) {
        for (const auto& [path, excerpt] : meta.raw_fragments) {
            if (contains_ci(path, ident) || contains_ci(excerpt, ident)) return true;
        }
        return false;
    };
    for (const auto& d : meta.dependency_hints) {
        INFO("dependency hint: ", d);
        CHECK(appears(d));
    }
    for (const auto& o : meta.build_options) {
        INFO("build option: ", o);
        // stripped forms are substrings of the raw option text
        CHECK((appears(o) || appears("benchmarks")));
    }
    REQUIRE(!meta.language_requirements.empty());
    CHECK(meta.language_requirements[0].first == "cxx");
    CHECK(meta.language_requirements[0].second == "17");
}

TEST_CASE("empty directory raises NoBuildSystemError") {
    TempDir repo;
    CHECK_THROWS_AS(extract_metadata(repo.path), NoBuildSystemError);
}

TEST_CASE("extract_metadata is deterministic") {
    TempDir repo;
    put(repo.path / "CMakeLists.txt",
        "project(Det VERSION 1.0 LANGUAGES C)\nfind_package(ZLIB)\noption(DET_ENABLE_TESTS \"t\" ON)\n");
    put(repo.path / "cmake" / "extra.cmake", "find_package(CURL)\n");
    RepoMetadata a = extract_metadata(repo.path);
    RepoMetadata b = extract_metadata(repo.path);
    CHECK(a.dependency_hints == b.dependency_hints);
    CHECK(a.build_options == b.build_options);
    CHECK(a.tree.entries == b.tree.entries);
    CHECK(distill_rule_based(a, 4096).text == distill_rule_based(b, 4096).text);
}

TEST_CASE("map_tree basics") {
    TempDir repo;
    put(repo.path / "a.txt", "x");
    put(repo.path / "b.txt", "x");
    put(repo.path / "c.txt", "x");
    TreeMap t = map_tree(repo.path, 2, 100);
    CHECK(t.entries.size() == 3);
    CHECK(t.overflow_markers.empty());
    CHECK(std::is_sorted(t.entries.begin(), t.entries.end()));
}

TEST_CASE("map_tree respects the entry cap with overflow markers") {
    TempDir repo;
    for (int i = 0; i < 50; ++i)
        put(repo.path / "src" / ("file" + std::to_string(i) + ".c"), "x");
    TreeMap t = map_tree(repo.path, 4, 10);
    CHECK(t.entries.size() == 10);
    CHECK(!t.overflow_markers.empty());
}

TEST_CASE("map_tree respects the per-directory cap") {
    TempDir repo;
    for (int i = 0; i < 20; ++i) put(repo.path / ("f" + std::to_string(i)), "x");
    TreeMap t = map_tree(repo.path, 2, 1000, 5);
    CHECK(t.entries.size() == 5);
    REQUIRE(t.overflow_markers.size() == 1);
    CHECK(t.overflow_markers[0].find("+15 more") != std::string::npos);
}

TEST_CASE("map_tree terminates on symlink cycles") {
    TempDir repo;
    put(repo.path / "dir" / "file.txt", "x");
    std::error_code ec;
    fs::create_directory_symlink(repo.path, repo.path / "dir" / "loop", ec);
    if (ec) return;  // filesystem without symlink support
    TreeMap t = map_tree(repo.path, 10, 1000);
    CHECK(t.entries.size() >= 2);  // dir/, dir/file.txt, dir/loop/ listed, not followed
    for (const auto& e : t.entries) CHECK(e.find("loop/loop") == std::string::npos);
}

TEST_CASE("map_tree depth limit") {
    TempDir repo;
    put(repo.path / "a" / "b" / "c" / "d" / "deep.txt", "x");
    TreeMap t = map_tree(repo.path, 2, 1000);
    for (const auto& e : t.entries) {
        INFO("entry: ", e);
        CHECK(std::count(e.begin(), e.end(), '/') <= 2);
    }
}

TEST_CASE("rule-based distillation lists exactly the extracted identifiers") {
    RepoMetadata meta;
    meta.package_name = "demo";
    meta.dependency_hints = {"mpi", "zlib", "cmake"};
    meta.build_options = {"enable_x", "with_y"};
    DistilledMetadata d = distill_rule_based(meta, 4096);
    for (const char* ident : {"mpi", "zlib", "cmake", "enable_x", "with_y"})
        CHECK(d.text.find(ident) != std::string::npos);
    CHECK(d.token_estimate > 0);
    CHECK(d.source == DistillMode::rule_based);
}

TEST_CASE("distillation respects the character budget") {
    RepoMetadata meta;
    meta.package_name = "big";
    for (int i = 0; i < 20000; ++i)
        meta.dependency_hints.insert("dep-" + std::to_string(i));
    DistilledMetadata d = distill_rule_based(meta, 8192);
    CHECK(d.text.size() <= 8192);
    CHECK(d.text.find("[truncated]") != std::string::npos);
}

TEST_CASE("version sidecar loading") {
    TempDir dir;
    put(dir.path / "version.json",
        R"({"version": "1.4.2", "url": "https://example.com/p-1.4.2.tar.gz", "sha256": "deadbeef"})");
    VersionDecl v = load_version_sidecar(dir.path / "version.json");
    CHECK(v.version_string == "1.4.2");
    REQUIRE(v.source_url.has_value());
    CHECK(*v.source_url == "https://example.com/p-1.4.2.tar.gz");
    REQUIRE(v.checksum.has_value());
    CHECK(*v.checksum == "deadbeef");

    TempDir repo;
    put(repo.path / "CMakeLists.txt", "project(P VERSION 9.9)\n");
    AnalyzerOptions opts;
    opts.version_override = v;
    RepoMetadata meta = extract_metadata(repo.path, opts);
    CHECK(meta.version_info.version_string == "1.4.2");
    CHECK(meta.version_info.source_url.has_value());
}

TEST_CASE("option name stripping") {
    CHECK(strip_option_name("CabanaPD_ENABLE_HDF5", "CabanaPD") == "hdf5");
    CHECK(strip_option_name("CabanaPD_ENABLE_TESTING", "CabanaPD") == "tests");
    CHECK(strip_option_name("ENABLE_OPENMP", "") == "openmp");
    CHECK(strip_option_name("BUILD_SHARED_LIBS", "") == "shared_libs");
    CHECK(strip_option_name("WITH_BENCHMARKS", "demo") == "benchmarks");
}

TEST_CASE("dependency name normalization uses the alias table") {
    CHECK(normalize_dependency_name("GTest") == "googletest");
    CHECK(normalize_dependency_name("nlohmann_json") == "nlohmann-json");
    CHECK(normalize_dependency_name("Python3") == "python");
    CHECK(normalize_dependency_name("OpenMP").empty());
    CHECK(normalize_dependency_name("SomethingNew") == "somethingnew");
}
