#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <utility>

#include "rectdt/delaunay.hpp"
#include "rectdt/geometry.hpp"
#include "rectdt/rational.hpp"

namespace rectdt::test {

inline Rational q(std::string_view s) { return Rational::parse(s); }

inline Point pt(std::string_view x, std::string_view y) { return {q(x), q(y)}; }

inline PointSet pts(std::initializer_list<std::pair<const char*, const char*>> xy) {
  PointSet ps;
  for (const auto& [x, y] : xy) ps.points.push_back(pt(x, y));
  return ps;
}

/// xorshift64* stream, independent of the library's sampler so that
/// properties are exercised on inputs the library did not choose.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed * 0x9E3779B97F4A7C15ull + 0x2545F4914F6CDD1Dull) {
    if (s_ == 0) s_ = 1;
  }

  std::uint64_t next() {
    s_ ^= s_ >> 12;
    s_ ^= s_ << 25;
    s_ ^= s_ >> 27;
    return s_ * 0x2545F4914F6CDD1Dull;
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// k / den with 0 <= k < den.
  Rational grid(long den) { return Rational(static_cast<long>(below(static_cast<std::uint64_t>(den))), den); }

 private:
  std::uint64_t s_;
};

/// n points on a 2^20 grid in [0,1)^2, redrawn until general position holds.
inline PointSet random_points(Gen& g, std::size_t n, long den = 1L << 20) {
  for (;;) {
    PointSet ps;
    for (std::size_t i = 0; i < n; ++i) ps.points.push_back({g.grid(den), g.grid(den)});
    if (validate_general_position(ps).ok()) return ps;
  }
}

/// The three-point instances used throughout.
inline PointSet k3_set() { return pts({{"0", "0"}, {"3", "1"}, {"1", "2"}}); }
inline PointSet path_set() { return pts({{"0", "0"}, {"3", "1"}, {"1.5", "0.6"}}); }

}  // namespace rectdt::test
