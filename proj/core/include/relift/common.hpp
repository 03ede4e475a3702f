#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relift {

// Error hierarchy. Every failure carries a message with enough context to act on;
// callers that need the category catch the subtype.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    using Error::Error;
};

struct CompileError : Error {
    // lcrs_path: position of the offending node ("" = root), empty body for non-node errors.
    std::string lcrs_path;
    CompileError(const std::string& msg, std::string path = "")
        : Error(msg), lcrs_path(std::move(path)) {}
};

struct ExecError : Error {
    using Error::Error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct DataError : Error {
    using Error::Error;
};

// FNV-1a, the project-wide stable hash for vocab manifests and tree identity.
inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 14695981039346656037ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t fnv1a_list(const std::vector<std::string>& items) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const auto& s : items) {
        h = fnv1a(s, h);
        h ^= 0x1f;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::vector<std::string> split_ws(std::string_view text);

}  // namespace relift
