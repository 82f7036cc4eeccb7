// Lane-generic math kernels. No include guard: each translation unit wraps
// one instantiation of this file in its own namespace by defining
// RABC_SIMD_TARGET_NS first, so code compiled for different instruction sets
// never shares linker symbols.
//
// Every kernel is written against the lane concept in lanes_scalar.hpp /
// lanes_avx2.hpp with explicit fmadd/fnmadd at each contraction point, so all
// instantiations produce bit-identical results lane for lane.

#ifndef RABC_SIMD_TARGET_NS
#error "define RABC_SIMD_TARGET_NS before including kernels_inl.hpp"
#endif

#include <cstddef>
#include <cstdint>
#include <limits>

#include "rabc/simd/lanes_scalar.hpp"

namespace rabc::simd {
namespace RABC_SIMD_TARGET_NS {

// ---------------------------------------------------------------------------
// exp: Cody-Waite reduction, degree-13 Taylor polynomial, two-step 2^n scale.
// Accurate to a couple of ulp over the normal range; underflows to 0 below
// log(DBL_MIN) (no subnormal outputs) and overflows to +inf above log(DBL_MAX).
// ---------------------------------------------------------------------------

template <class L>
inline L exp_lane(L x) {
  const L max_in = L::splat(709.782712893384);
  const L min_in = L::splat(-708.3964185322641);
  const auto too_hi = cmp_gt(x, max_in);
  const auto too_lo = cmp_lt(x, min_in);
  L xc = select(too_hi, max_in, select(too_lo, min_in, x));

  const L inv_ln2 = L::splat(1.4426950408889634074);
  const L ln2_hi = L::splat(6.93147180369123816490e-01);
  const L ln2_lo = L::splat(1.90821492927058770002e-10);
  L nd = round_nearest(xc * inv_ln2);
  L r = fnmadd(nd, ln2_hi, xc);
  r = fnmadd(nd, ln2_lo, r);

  L p = L::splat(1.0 / 6227020800.0);  // 1/13!
  p = fmadd(p, r, L::splat(1.0 / 479001600.0));
  p = fmadd(p, r, L::splat(1.0 / 39916800.0));
  p = fmadd(p, r, L::splat(1.0 / 3628800.0));
  p = fmadd(p, r, L::splat(1.0 / 362880.0));
  p = fmadd(p, r, L::splat(1.0 / 40320.0));
  p = fmadd(p, r, L::splat(1.0 / 5040.0));
  p = fmadd(p, r, L::splat(1.0 / 720.0));
  p = fmadd(p, r, L::splat(1.0 / 120.0));
  p = fmadd(p, r, L::splat(1.0 / 24.0));
  p = fmadd(p, r, L::splat(1.0 / 6.0));
  p = fmadd(p, r, L::splat(0.5));
  p = fmadd(p, r, L::splat(1.0));
  p = fmadd(p, r, L::splat(1.0));

  // 2^n = 2^n1 * 2^n2 with n1 = round(n/2); keeps both exponents in range.
  L nd1 = round_nearest(nd * L::splat(0.5));
  L nd2 = nd - nd1;
  const auto bias = splat_i64(L{}, 1023);
  L pow1 = from_bits(shift_left(add_i64(to_int_inrange(nd1), bias), 52));
  L pow2 = from_bits(shift_left(add_i64(to_int_inrange(nd2), bias), 52));
  L result = (p * pow1) * pow2;

  result = select(too_lo, L::splat(0.0), result);
  result =
      select(too_hi, L::splat(std::numeric_limits<double>::infinity()), result);
  return result;
}

// ---------------------------------------------------------------------------
// log for positive, finite, normal inputs (all this library ever feeds it).
// fdlibm-style: m in [sqrt(1/2), sqrt(2)), atanh series with the classic
// Lg1..Lg7 minimax coefficients.
// ---------------------------------------------------------------------------

template <class L>
inline L log_lane(L x) {
  const L ln2_hi = L::splat(6.93147180369123816490e-01);
  const L ln2_lo = L::splat(1.90821492927058770002e-10);

  auto bits = to_bits(x);
  L e = uint_to_double(L{}, shift_right(bits, 52)) - L::splat(1023.0);
  auto mant = bit_or(bit_and(bits, splat_i64(L{}, 0x000FFFFFFFFFFFFFULL)),
                     splat_i64(L{}, 0x3FF0000000000000ULL));
  L m = from_bits(mant);

  const auto fold = cmp_gt(m, L::splat(1.4142135623730951));
  m = select(fold, m * L::splat(0.5), m);
  e = select(fold, e + L::splat(1.0), e);

  L f = m - L::splat(1.0);
  L s = f / (f + L::splat(2.0));
  L z = s * s;

  L t = L::splat(1.479819860511658591e-01);
  t = fmadd(t, z, L::splat(1.531383769920937332e-01));
  t = fmadd(t, z, L::splat(1.818357216161805012e-01));
  t = fmadd(t, z, L::splat(2.222219843214978396e-01));
  t = fmadd(t, z, L::splat(2.857142874366239149e-01));
  t = fmadd(t, z, L::splat(3.999999999940941908e-01));
  t = fmadd(t, z, L::splat(6.666666666666735130e-01));
  L R = t * z;

  L hfsq = (f * f) * L::splat(0.5);
  L su = s * (hfsq + R);
  L w = fmadd(e, ln2_lo, su);
  return e * ln2_hi - ((hfsq - w) - f);
}

// ---------------------------------------------------------------------------
// Standard normal quantile, Wichura's AS 241 (PPND16), for p in (0,1).
// Central rational for |p-1/2| <= 0.425, two tail rationals in
// r = sqrt(-log(min(p,1-p))).
// ---------------------------------------------------------------------------

template <class L>
inline L normal_quantile_lane(L p) {
  L q = p - L::splat(0.5);

  L rc = fnmadd(q, q, L::splat(0.180625));
  L num = L::splat(2509.0809287301226727);
  num = fmadd(num, rc, L::splat(33430.575583588128105));
  num = fmadd(num, rc, L::splat(67265.770927008700853));
  num = fmadd(num, rc, L::splat(45921.953931549871457));
  num = fmadd(num, rc, L::splat(13731.693765509461125));
  num = fmadd(num, rc, L::splat(1971.5909503065514427));
  num = fmadd(num, rc, L::splat(133.14166789178437745));
  num = fmadd(num, rc, L::splat(3.387132872796366608));
  L den = L::splat(5226.495278852854561);
  den = fmadd(den, rc, L::splat(28729.085735721942674));
  den = fmadd(den, rc, L::splat(39307.89580009271061));
  den = fmadd(den, rc, L::splat(21213.794301586595867));
  den = fmadd(den, rc, L::splat(5394.1960214247511077));
  den = fmadd(den, rc, L::splat(687.1870074920579083));
  den = fmadd(den, rc, L::splat(42.313330701600911252));
  den = fmadd(den, rc, L::splat(1.0));
  L val = q * (num / den);

  const auto tail = cmp_gt(abs(q), L::splat(0.425));
  if (any(tail)) {
    // min(p, 1-p) taken from p directly; 0.5 - |q| would cancel away the
    // tail's relative precision.
    L r0 = select(cmp_lt(q, L::splat(0.0)), p, L::splat(1.0) - p);
    L rr = sqrt(neg(log_lane(r0)));

    L ra = rr - L::splat(1.6);
    L na = L::splat(7.7454501427834140764e-4);
    na = fmadd(na, ra, L::splat(0.0227238449892691845833));
    na = fmadd(na, ra, L::splat(0.24178072517745061177));
    na = fmadd(na, ra, L::splat(1.27045825245236838258));
    na = fmadd(na, ra, L::splat(3.64784832476320460504));
    na = fmadd(na, ra, L::splat(5.7694972214606914055));
    na = fmadd(na, ra, L::splat(4.6303378461565452959));
    na = fmadd(na, ra, L::splat(1.42343711074968357734));
    L da = L::splat(1.05075007164441684324e-9);
    da = fmadd(da, ra, L::splat(5.475938084995344946e-4));
    da = fmadd(da, ra, L::splat(0.0151986665636164571966));
    da = fmadd(da, ra, L::splat(0.14810397642748007459));
    da = fmadd(da, ra, L::splat(0.68976733498510000455));
    da = fmadd(da, ra, L::splat(1.6763848301838038494));
    da = fmadd(da, ra, L::splat(2.05319162663775882187));
    da = fmadd(da, ra, L::splat(1.0));

    L rb = rr - L::splat(5.0);
    L nb = L::splat(2.01033439929228813265e-7);
    nb = fmadd(nb, rb, L::splat(2.71155556874348757815e-5));
    nb = fmadd(nb, rb, L::splat(0.0012426609473880784386));
    nb = fmadd(nb, rb, L::splat(0.026532189526576123093));
    nb = fmadd(nb, rb, L::splat(0.29656057182850489123));
    nb = fmadd(nb, rb, L::splat(1.7848265399172913358));
    nb = fmadd(nb, rb, L::splat(5.4637849111641143699));
    nb = fmadd(nb, rb, L::splat(6.6579046435011037772));
    L db = L::splat(2.04426310338993978564e-15);
    db = fmadd(db, rb, L::splat(1.4215117583164458887e-7));
    db = fmadd(db, rb, L::splat(1.8463183175100546818e-5));
    db = fmadd(db, rb, L::splat(7.868691311456132591e-4));
    db = fmadd(db, rb, L::splat(0.0148753612908506148525));
    db = fmadd(db, rb, L::splat(0.13692988092273580531));
    db = fmadd(db, rb, L::splat(0.59983220655588793769));
    db = fmadd(db, rb, L::splat(1.0));

    const auto far = cmp_gt(rr, L::splat(5.0));
    L vt = select(far, nb / db, na / da);
    vt = copy_sign(vt, q);
    val = select(tail, vt, val);
  }
  return val;
}

// ---------------------------------------------------------------------------
// g-and-k quantile transform of standard normal deviates:
//   y = alpha + beta * [1 + 0.8 * tanh(gamma z / 2)] * (1 + z^2)^kappa * z,
// with tanh evaluated via exp(-|gamma z|) so large |gamma z| cannot overflow.
// ---------------------------------------------------------------------------

template <class L>
inline L gk_lane(L z, double alpha, double beta, double gamma, double kappa) {
  L w = L::splat(gamma) * z;
  L ew = exp_lane(neg(abs(w)));
  L t = copy_sign((L::splat(1.0) - ew) / (L::splat(1.0) + ew), w);
  L bracket = fmadd(L::splat(0.8), t, L::splat(1.0));
  L pw = exp_lane(L::splat(kappa) * log_lane(fmadd(z, z, L::splat(1.0))));
  L scale = (L::splat(beta) * bracket) * pw;
  return fmadd(scale, z, L::splat(alpha));
}

// ---------------------------------------------------------------------------
// Array drivers. Wide main loop, ScalarLane remainder (instantiated in this
// same namespace, so remainder code always matches the reference bits).
// ---------------------------------------------------------------------------

template <class L>
inline void exp_array(const double* in, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + L::width <= n; i += L::width) exp_lane(L::load(in + i)).store(out + i);
  for (; i < n; ++i) exp_lane(ScalarLane::load(in + i)).store(out + i);
}

template <class L>
inline void log_array(const double* in, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + L::width <= n; i += L::width) log_lane(L::load(in + i)).store(out + i);
  for (; i < n; ++i) log_lane(ScalarLane::load(in + i)).store(out + i);
}

template <class L>
inline void normal_quantile_array(const double* in, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + L::width <= n; i += L::width)
    normal_quantile_lane(L::load(in + i)).store(out + i);
  for (; i < n; ++i) normal_quantile_lane(ScalarLane::load(in + i)).store(out + i);
}

template <class L>
inline void gk_array(const double* in, double* out, std::size_t n, double alpha,
                     double beta, double gamma, double kappa) {
  std::size_t i = 0;
  for (; i + L::width <= n; i += L::width)
    gk_lane(L::load(in + i), alpha, beta, gamma, kappa).store(out + i);
  for (; i < n; ++i)
    gk_lane(ScalarLane::load(in + i), alpha, beta, gamma, kappa).store(out + i);
}

//! Row-wise weighted squared distance sum_j w[j] * (s[i,j] - c[j])^2 for a
//! column-major matrix (column j starts at s + j*col_stride).
template <class L>
inline void weighted_sqdist_cm_array(const double* s, std::size_t rows,
                                     std::size_t cols, std::size_t col_stride,
                                     const double* center, const double* w,
                                     double* out) {
  std::size_t i = 0;
  for (; i + L::width <= rows; i += L::width) {
    L acc = L::splat(0.0);
    for (std::size_t j = 0; j < cols; ++j) {
      L d = L::load(s + j * col_stride + i) - L::splat(center[j]);
      L t = L::splat(w[j]) * d;
      acc = fmadd(t, d, acc);
    }
    acc.store(out + i);
  }
  for (; i < rows; ++i) {
    ScalarLane acc = ScalarLane::splat(0.0);
    for (std::size_t j = 0; j < cols; ++j) {
      ScalarLane d =
          ScalarLane::load(s + j * col_stride + i) - ScalarLane::splat(center[j]);
      ScalarLane t = ScalarLane::splat(w[j]) * d;
      acc = fmadd(t, d, acc);
    }
    acc.store(out + i);
  }
}

}  // namespace RABC_SIMD_TARGET_NS
}  // namespace rabc::simd
