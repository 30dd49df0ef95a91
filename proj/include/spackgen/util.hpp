#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace spackgen {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);

// Strips surrounding whitespace and collapses internal runs to one space.
// Case is preserved. Used for constraint/condition normalization.
std::string collapse_ws(std::string_view s);

bool contains_ci(std::string_view haystack, std::string_view needle);
bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

std::vector<std::string> split_lines(std::string_view text);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string join(const std::set<std::string>& parts, std::string_view sep);

// FNV-1a, stable across platforms; used for content hashes and cache keys.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ull);
std::string hex64(std::uint64_t v);

std::string read_file(const std::filesystem::path& path);            // throws IoError
void write_file(const std::filesystem::path& path, std::string_view content);

// "cabana-pd" -> "CabanaPd"; "fxdiv" -> "Fxdiv".
std::string pascal_case(std::string_view package_name);

// "CabanaPD" -> "cabana-pd"; "FXdiv" -> "fxdiv". Splits at lower->upper
// boundaries only, so runs of capitals stay together.
std::string spackify_name(std::string_view project_name);

// Rejection-sampled uniform integer in [0, n); deterministic for a given
// generator state on every platform (std::uniform_int_distribution is not).
template <typename Rng>
std::uint32_t bounded_uniform(Rng& rng, std::uint32_t n) {
    if (n <= 1) return 0;
    const std::uint32_t limit = UINT32_MAX - UINT32_MAX % n;
    std::uint32_t v;
    do {
        v = static_cast<std::uint32_t>(rng());
    } while (v >= limit);
    return v % n;
}

}  // namespace spackgen
