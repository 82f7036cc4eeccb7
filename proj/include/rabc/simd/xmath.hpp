#pragma once

// Scalar entry points for the lane-generic kernels. These are the reference
// implementations the SIMD batch paths are equivalence-tested against, and
// the ones used wherever single values are needed (RNG draws, spot
// evaluations). Do not include this header from SIMD translation units.

#define RABC_SIMD_TARGET_NS base
#include "rabc/simd/kernels_inl.hpp"
#undef RABC_SIMD_TARGET_NS

namespace rabc::xmath {

inline double exp(double x) {
  return simd::base::exp_lane(simd::ScalarLane{x}).v;
}

//! Natural log for positive normal finite inputs.
inline double log(double x) {
  return simd::base::log_lane(simd::ScalarLane{x}).v;
}

//! Standard normal quantile (AS 241), p in (0,1). No domain check.
inline double normal_quantile(double p) {
  return simd::base::normal_quantile_lane(simd::ScalarLane{p}).v;
}

//! g-and-k quantile transform of a standard normal deviate z.
inline double gk_value(double z, double alpha, double beta, double gamma,
                       double kappa) {
  return simd::base::gk_lane(simd::ScalarLane{z}, alpha, beta, gamma, kappa).v;
}

}  // namespace rabc::xmath
