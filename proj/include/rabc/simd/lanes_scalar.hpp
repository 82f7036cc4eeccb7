#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>

namespace rabc::simd {

//! One-wide lane. The reference implementation of the lane concept: every
//! operation here defines the rounding behaviour the wide lanes must match.
struct ScalarLane {
  static constexpr int width = 1;
  using mask_t = bool;
  using int_t = std::uint64_t;

  double v;

  static ScalarLane load(const double* p) { return {*p}; }
  static ScalarLane splat(double x) { return {x}; }
  void store(double* p) const { *p = v; }
};

inline ScalarLane operator+(ScalarLane a, ScalarLane b) { return {a.v + b.v}; }
inline ScalarLane operator-(ScalarLane a, ScalarLane b) { return {a.v - b.v}; }
inline ScalarLane operator*(ScalarLane a, ScalarLane b) { return {a.v * b.v}; }
inline ScalarLane operator/(ScalarLane a, ScalarLane b) { return {a.v / b.v}; }
inline ScalarLane neg(ScalarLane a) { return {-a.v}; }

// a*b + c, single rounding
inline ScalarLane fmadd(ScalarLane a, ScalarLane b, ScalarLane c) {
  return {std::fma(a.v, b.v, c.v)};
}
// c - a*b, single rounding
inline ScalarLane fnmadd(ScalarLane a, ScalarLane b, ScalarLane c) {
  return {std::fma(-a.v, b.v, c.v)};
}

inline ScalarLane sqrt(ScalarLane a) { return {std::sqrt(a.v)}; }
inline ScalarLane abs(ScalarLane a) { return {std::fabs(a.v)}; }
inline ScalarLane round_nearest(ScalarLane a) { return {std::nearbyint(a.v)}; }

inline bool cmp_le(ScalarLane a, ScalarLane b) { return a.v <= b.v; }
inline bool cmp_lt(ScalarLane a, ScalarLane b) { return a.v < b.v; }
inline bool cmp_ge(ScalarLane a, ScalarLane b) { return a.v >= b.v; }
inline bool cmp_gt(ScalarLane a, ScalarLane b) { return a.v > b.v; }

inline ScalarLane select(bool m, ScalarLane a, ScalarLane b) {
  return m ? a : b;
}
inline bool any(bool m) { return m; }
inline bool mask_or(bool a, bool b) { return a || b; }

//! Transfer the sign bit of `sgn` onto `mag`.
inline ScalarLane copy_sign(ScalarLane mag, ScalarLane sgn) {
  return {std::copysign(mag.v, sgn.v)};
}

inline std::uint64_t to_bits(ScalarLane a) {
  std::uint64_t r;
  std::memcpy(&r, &a.v, sizeof r);
  return r;
}
inline ScalarLane from_bits(std::uint64_t b) {
  double r;
  std::memcpy(&r, &b, sizeof r);
  return {r};
}
inline std::uint64_t shift_right(std::uint64_t a, int n) { return a >> n; }
inline std::uint64_t shift_left(std::uint64_t a, int n) { return a << n; }
inline std::uint64_t bit_and(std::uint64_t a, std::uint64_t b) { return a & b; }
inline std::uint64_t bit_or(std::uint64_t a, std::uint64_t b) { return a | b; }
inline std::uint64_t add_i64(std::uint64_t a, std::uint64_t b) { return a + b; }
inline std::uint64_t splat_i64(ScalarLane, std::uint64_t x) { return x; }

//! Integer-valued double with |x| < 2^31 to a 64-bit integer lane.
inline std::uint64_t to_int_inrange(ScalarLane a) {
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(a.v));
}
//! Exact small unsigned integer (< 2^52) to double.
inline ScalarLane uint_to_double(ScalarLane, std::uint64_t a) {
  return {static_cast<double>(a)};
}

}  // namespace rabc::simd
