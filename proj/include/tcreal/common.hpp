#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tcreal {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Label = std::uint32_t;

inline constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

enum class GraphMode { simple, multi };

inline const char* to_string(GraphMode mode) { return mode == GraphMode::simple ? "simple" : "multi"; }

inline GraphMode parse_mode(const std::string& s) {
    if (s == "simple") return GraphMode::simple;
    if (s == "multi") return GraphMode::multi;
    throw std::invalid_argument("unknown mode: " + s);
}

// Caller violated a documented precondition.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Internal consistency check failed. Always a bug.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void ensure(bool ok, const char* what) {
    if (!ok) throw invariant_error(what);
}

}  // namespace tcreal
