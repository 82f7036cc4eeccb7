#pragma once

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cstdint>

namespace rabc::simd {

//! Four-wide AVX2 lane. Mirrors ScalarLane operation for operation; every
//! arithmetic step rounds exactly like the scalar reference.
struct Avx2Lane {
  static constexpr int width = 4;
  using mask_t = __m256d;
  using int_t = __m256i;

  __m256d v;

  static Avx2Lane load(const double* p) { return {_mm256_loadu_pd(p)}; }
  static Avx2Lane splat(double x) { return {_mm256_set1_pd(x)}; }
  void store(double* p) const { _mm256_storeu_pd(p, v); }
};

inline Avx2Lane operator+(Avx2Lane a, Avx2Lane b) {
  return {_mm256_add_pd(a.v, b.v)};
}
inline Avx2Lane operator-(Avx2Lane a, Avx2Lane b) {
  return {_mm256_sub_pd(a.v, b.v)};
}
inline Avx2Lane operator*(Avx2Lane a, Avx2Lane b) {
  return {_mm256_mul_pd(a.v, b.v)};
}
inline Avx2Lane operator/(Avx2Lane a, Avx2Lane b) {
  return {_mm256_div_pd(a.v, b.v)};
}
inline Avx2Lane neg(Avx2Lane a) {
  return {_mm256_xor_pd(a.v, _mm256_set1_pd(-0.0))};
}

inline Avx2Lane fmadd(Avx2Lane a, Avx2Lane b, Avx2Lane c) {
  return {_mm256_fmadd_pd(a.v, b.v, c.v)};
}
inline Avx2Lane fnmadd(Avx2Lane a, Avx2Lane b, Avx2Lane c) {
  return {_mm256_fnmadd_pd(a.v, b.v, c.v)};
}

inline Avx2Lane sqrt(Avx2Lane a) { return {_mm256_sqrt_pd(a.v)}; }
inline Avx2Lane abs(Avx2Lane a) {
  return {_mm256_andnot_pd(_mm256_set1_pd(-0.0), a.v)};
}
inline Avx2Lane round_nearest(Avx2Lane a) {
  return {_mm256_round_pd(a.v, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC)};
}

inline __m256d cmp_le(Avx2Lane a, Avx2Lane b) {
  return _mm256_cmp_pd(a.v, b.v, _CMP_LE_OQ);
}
inline __m256d cmp_lt(Avx2Lane a, Avx2Lane b) {
  return _mm256_cmp_pd(a.v, b.v, _CMP_LT_OQ);
}
inline __m256d cmp_ge(Avx2Lane a, Avx2Lane b) {
  return _mm256_cmp_pd(a.v, b.v, _CMP_GE_OQ);
}
inline __m256d cmp_gt(Avx2Lane a, Avx2Lane b) {
  return _mm256_cmp_pd(a.v, b.v, _CMP_GT_OQ);
}

inline Avx2Lane select(__m256d m, Avx2Lane a, Avx2Lane b) {
  return {_mm256_blendv_pd(b.v, a.v, m)};
}
inline bool any(__m256d m) { return _mm256_movemask_pd(m) != 0; }
inline __m256d mask_or(__m256d a, __m256d b) { return _mm256_or_pd(a, b); }

inline Avx2Lane copy_sign(Avx2Lane mag, Avx2Lane sgn) {
  const __m256d sign_bit = _mm256_set1_pd(-0.0);
  return {_mm256_or_pd(_mm256_andnot_pd(sign_bit, mag.v),
                       _mm256_and_pd(sign_bit, sgn.v))};
}

inline __m256i to_bits(Avx2Lane a) { return _mm256_castpd_si256(a.v); }
inline Avx2Lane from_bits(__m256i b) { return {_mm256_castsi256_pd(b)}; }
inline __m256i shift_right(__m256i a, int n) { return _mm256_srli_epi64(a, n); }
inline __m256i shift_left(__m256i a, int n) { return _mm256_slli_epi64(a, n); }
inline __m256i bit_and(__m256i a, __m256i b) {
  return _mm256_and_si256(a, b);
}
inline __m256i bit_or(__m256i a, __m256i b) { return _mm256_or_si256(a, b); }
inline __m256i add_i64(__m256i a, __m256i b) { return _mm256_add_epi64(a, b); }
inline __m256i splat_i64(Avx2Lane, std::uint64_t x) {
  return _mm256_set1_epi64x(static_cast<long long>(x));
}

inline __m256i to_int_inrange(Avx2Lane a) {
  return _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(a.v));
}
inline Avx2Lane uint_to_double(Avx2Lane, __m256i a) {
  // Exact for 0 <= a < 2^52: or in the exponent of 2^52, subtract 2^52.
  const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);
  __m256d x = _mm256_castsi256_pd(_mm256_or_si256(a, magic));
  return {_mm256_sub_pd(x, _mm256_set1_pd(4503599627370496.0))};
}

}  // namespace rabc::simd

#endif  // __AVX2__ && __FMA__
