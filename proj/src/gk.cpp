#include "rabc/gk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rabc/simd/batch.hpp"
#include "rabc/simd/xmath.hpp"

namespace rabc {

bool GkParams::valid() const {
  return std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(gamma) &&
         std::isfinite(kappa) && beta > 0.0 && kappa > -0.5;
}

double gk_quantile(double x, const GkParams& params) {
  if (!params.valid()) {
    throw std::invalid_argument(
        "gk_quantile: parameters require beta > 0, kappa > -0.5, all finite");
  }
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("gk_quantile: x must lie in (0,1)");
  }
  const double z = xmath::normal_quantile(x);
  return xmath::gk_value(z, params.alpha, params.beta, params.gamma,
                         params.kappa);
}

void gk_sample(const GkParams& params, std::uint64_t seed,
               std::span<double> out) {
  if (!params.valid()) {
    throw std::invalid_argument("gk_sample: invalid parameters");
  }
  Rng rng(seed);
  rng.fill_unit(out);
  batch::normal_quantile(out, out);
  batch::gk_transform(out, params.alpha, params.beta, params.gamma,
                      params.kappa, out);
}

std::vector<double> gk_sample(const GkParams& params, std::uint64_t seed,
                              std::size_t n) {
  std::vector<double> out(n);
  gk_sample(params, seed, out);
  return out;
}

SummaryVec quantile_summaries(std::span<const double> data, int d) {
  const std::size_t m = data.size();
  if (m == 0) throw std::invalid_argument("quantile_summaries: empty dataset");
  if (d < 1) throw std::invalid_argument("quantile_summaries: d must be >= 1");
  if (static_cast<std::size_t>(d) > m) {
    throw std::invalid_argument("quantile_summaries: d exceeds dataset size");
  }
  std::vector<double> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end());

  SummaryVec out(d);
  for (int k = 1; k <= d; ++k) {
    const double level = static_cast<double>(k) / (d + 1);
    const double h = level * static_cast<double>(m - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    const double frac = h - static_cast<double>(lo);
    const std::size_t hi = std::min(lo + 1, m - 1);
    out[k - 1] = sorted[lo] + frac * (sorted[hi] - sorted[lo]);
  }
  return out;
}

GkModel::GkModel(int n, int summary_dim, double prior_low, double prior_high)
    : n_(n), summary_dim_(summary_dim), lo_(prior_low), hi_(prior_high) {
  if (n < 1) throw std::invalid_argument("GkModel: n must be >= 1");
  if (summary_dim < 1 || summary_dim > n) {
    throw std::invalid_argument("GkModel: summary_dim must be in [1, n]");
  }
  if (!(prior_high > prior_low)) {
    throw std::invalid_argument("GkModel: prior box is empty");
  }
}

GkParams GkModel::params_from(const ParamVec& theta) {
  return GkParams{theta[0], theta[1], theta[2], theta[3]};
}

double GkModel::prior_density(const ParamVec& theta) const {
  for (int i = 0; i < 4; ++i) {
    if (!(theta[i] >= lo_ && theta[i] <= hi_)) return 0.0;
  }
  // Inside the box the simulator must also be defined.
  if (!params_from(theta).valid()) return 0.0;
  const double width = hi_ - lo_;
  return 1.0 / (width * width * width * width);
}

double GkModel::prior_log_density(const ParamVec& theta) const {
  const double p = prior_density(theta);
  return p > 0.0 ? std::log(p) : -std::numeric_limits<double>::infinity();
}

ParamVec GkModel::prior_sample(Rng& rng) const {
  ParamVec theta(4);
  for (int i = 0; i < 4; ++i) theta[i] = lo_ + (hi_ - lo_) * rng.next_unit();
  return theta;
}

void GkModel::simulate(const ParamVec& theta, std::uint64_t seed,
                       std::span<double> out) const {
  gk_sample(params_from(theta), seed, out);
}

SummaryVec GkModel::summarize(std::span<const double> data) const {
  return quantile_summaries(data, summary_dim_);
}

}  // namespace rabc
