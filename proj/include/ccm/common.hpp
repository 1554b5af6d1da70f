#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ccm {

inline constexpr const char* kVersion = "0.1.0";

// Bad arguments, violated preconditions, invalid configs. CLI exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input files; the message carries line/offset information.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A graph outside the support of a degree-indexed property (degree above K).
struct SupportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariant; always a bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Unordered node pair, stored with u < v.
struct Dyad {
  uint32_t u = 0;
  uint32_t v = 0;

  Dyad() = default;
  Dyad(uint32_t a, uint32_t b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw UsageError("dyad endpoints must differ: " + std::to_string(a));
  }
  bool operator==(const Dyad&) const = default;
};

inline int64_t num_dyads(int64_t n) { return n * (n - 1) / 2; }

// Triangular index of (u,v), u < v: dyads ordered (0,1),(0,2),(1,2),(0,3),...
inline int64_t dyad_index(const Dyad& d) {
  return static_cast<int64_t>(d.v) * (d.v - 1) / 2 + d.u;
}

inline Dyad dyad_from_index(int64_t idx) {
  // v is the largest integer with v(v-1)/2 <= idx.
  auto v = static_cast<int64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
  while (v * (v - 1) / 2 > idx) --v;
  while ((v + 1) * v / 2 <= idx) ++v;
  int64_t u = idx - v * (v - 1) / 2;
  return Dyad(static_cast<uint32_t>(u), static_cast<uint32_t>(v));
}

}  // namespace ccm
