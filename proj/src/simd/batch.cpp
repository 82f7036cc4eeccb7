#include "rabc/simd/batch.hpp"

#include <cassert>

#include "rabc/simd/dispatch.hpp"

namespace rabc::batch {

namespace {

const detail::Impl& impl() {
  if (simd::active() == simd::Level::avx2) {
    const detail::Impl* p = detail::avx2_impl();
    if (p) return *p;
  }
  return *detail::scalar_impl();
}

}  // namespace

void exp(std::span<const double> x, std::span<double> out) {
  assert(x.size() == out.size());
  impl().exp_array(x.data(), out.data(), x.size());
}

void log(std::span<const double> x, std::span<double> out) {
  assert(x.size() == out.size());
  impl().log_array(x.data(), out.data(), x.size());
}

void normal_quantile(std::span<const double> p, std::span<double> out) {
  assert(p.size() == out.size());
  impl().normal_quantile_array(p.data(), out.data(), p.size());
}

void gk_transform(std::span<const double> z, double alpha, double beta,
                  double gamma, double kappa, std::span<double> out) {
  assert(z.size() == out.size());
  impl().gk_array(z.data(), out.data(), z.size(), alpha, beta, gamma, kappa);
}

void weighted_sqdist_colmajor(const double* s, std::size_t rows,
                              std::size_t cols, std::size_t col_stride,
                              const double* center, const double* weights,
                              double* out) {
  impl().weighted_sqdist_cm(s, rows, cols, col_stride, center, weights, out);
}

}  // namespace rabc::batch
