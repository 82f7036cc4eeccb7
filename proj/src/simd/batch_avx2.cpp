// Compiled with -mavx2 -mfma on x86 targets. Everything here lives in the
// avx2tu kernel namespace so no symbol can be merged with baseline-compiled
// instantiations; nothing in this TU runs unless dispatch selected avx2.

#include "rabc/simd/batch.hpp"

#if defined(RABC_HAVE_AVX2_TU) && defined(__AVX2__) && defined(__FMA__)

#include "rabc/simd/lanes_avx2.hpp"

#define RABC_SIMD_TARGET_NS avx2tu
#include "rabc/simd/kernels_inl.hpp"
#undef RABC_SIMD_TARGET_NS

namespace rabc::batch::detail {

namespace {

using rabc::simd::Avx2Lane;
namespace k = rabc::simd::avx2tu;

void exp_array(const double* in, double* out, std::size_t n) {
  k::exp_array<Avx2Lane>(in, out, n);
}
void log_array(const double* in, double* out, std::size_t n) {
  k::log_array<Avx2Lane>(in, out, n);
}
void normal_quantile_array(const double* in, double* out, std::size_t n) {
  k::normal_quantile_array<Avx2Lane>(in, out, n);
}
void gk_array(const double* in, double* out, std::size_t n, double a, double b,
              double g, double kk) {
  k::gk_array<Avx2Lane>(in, out, n, a, b, g, kk);
}
void weighted_sqdist_cm(const double* s, std::size_t rows, std::size_t cols,
                        std::size_t stride, const double* center,
                        const double* w, double* out) {
  k::weighted_sqdist_cm_array<Avx2Lane>(s, rows, cols, stride, center, w, out);
}

const Impl kImpl = {&exp_array, &log_array, &normal_quantile_array, &gk_array,
                    &weighted_sqdist_cm};

}  // namespace

const Impl* avx2_impl() { return &kImpl; }

}  // namespace rabc::batch::detail

#else

namespace rabc::batch::detail {
const Impl* avx2_impl() { return nullptr; }
}  // namespace rabc::batch::detail

#endif
