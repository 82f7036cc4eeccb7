#include "rabc/simd/batch.hpp"
#include "rabc/simd/xmath.hpp"

namespace rabc::batch::detail {

namespace {

using rabc::simd::ScalarLane;
namespace k = rabc::simd::base;

void exp_array(const double* in, double* out, std::size_t n) {
  k::exp_array<ScalarLane>(in, out, n);
}
void log_array(const double* in, double* out, std::size_t n) {
  k::log_array<ScalarLane>(in, out, n);
}
void normal_quantile_array(const double* in, double* out, std::size_t n) {
  k::normal_quantile_array<ScalarLane>(in, out, n);
}
void gk_array(const double* in, double* out, std::size_t n, double a, double b,
              double g, double kk) {
  k::gk_array<ScalarLane>(in, out, n, a, b, g, kk);
}
void weighted_sqdist_cm(const double* s, std::size_t rows, std::size_t cols,
                        std::size_t stride, const double* center,
                        const double* w, double* out) {
  k::weighted_sqdist_cm_array<ScalarLane>(s, rows, cols, stride, center, w, out);
}

const Impl kImpl = {&exp_array, &log_array, &normal_quantile_array, &gk_array,
                    &weighted_sqdist_cm};

}  // namespace

const Impl* scalar_impl() { return &kImpl; }

}  // namespace rabc::batch::detail
