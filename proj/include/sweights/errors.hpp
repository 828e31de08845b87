#pragma once

#include <stdexcept>
#include <string>

namespace sweights {

// Thrown when an enumeration would exceed its configured cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Violated precondition on domain values (bad field, mismatched lengths, ...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed external input (JSON shape, digit strings, ...).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Hard ceilings; runtime overrides are clamped against these.
inline constexpr long long kHardMaxVectors = 1LL << 22;
inline constexpr long long kHardMaxGl = 100'000'000;

// Enumeration limits and knobs shared by library sweeps and the CLI.
struct Caps {
    long long max_vectors = 1LL << 20;
    long long max_gl = 10'000'000;
    unsigned seed = 0x5eedU;
    std::string cache_dir;  // empty: no on-disk catalog cache

    void clamp() {
        if (max_vectors > kHardMaxVectors) max_vectors = kHardMaxVectors;
        if (max_gl > kHardMaxGl) max_gl = kHardMaxGl;
    }
};

}  // namespace sweights
