#pragma once

#include <cstddef>
#include <span>

// Batch math over arrays, dispatched at runtime to the best available
// instruction set (see rabc::simd::active()). All levels return bit-identical
// results, so seeded pipelines do not depend on the dispatch decision.
// Elementwise functions allow in == out.

namespace rabc::batch {

void exp(std::span<const double> x, std::span<double> out);
void log(std::span<const double> x, std::span<double> out);

//! AS 241 standard normal quantile, elementwise; inputs must lie in (0,1).
void normal_quantile(std::span<const double> p, std::span<double> out);

//! g-and-k quantile transform applied to standard normal deviates.
void gk_transform(std::span<const double> z, double alpha, double beta,
                  double gamma, double kappa, std::span<double> out);

//! out[i] = sum_j weights[j] * (s[i + j*col_stride] - center[j])^2 for a
//! column-major rows x cols matrix.
void weighted_sqdist_colmajor(const double* s, std::size_t rows,
                              std::size_t cols, std::size_t col_stride,
                              const double* center, const double* weights,
                              double* out);

namespace detail {

struct Impl {
  void (*exp_array)(const double*, double*, std::size_t);
  void (*log_array)(const double*, double*, std::size_t);
  void (*normal_quantile_array)(const double*, double*, std::size_t);
  void (*gk_array)(const double*, double*, std::size_t, double, double, double,
                   double);
  void (*weighted_sqdist_cm)(const double*, std::size_t, std::size_t,
                             std::size_t, const double*, const double*,
                             double*);
};

const Impl* scalar_impl();
const Impl* avx2_impl();  // nullptr when not compiled in

}  // namespace detail

}  // namespace rabc::batch
