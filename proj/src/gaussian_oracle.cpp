#include "rabc/gaussian_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rabc {

double Posterior1::sd() const { return std::sqrt(var); }

double GaussianOracle::a_n() const { return std::sqrt(static_cast<double>(n)); }

double GaussianOracle::summary_var() const {
  return obs_noise_var / static_cast<double>(n);
}

Posterior1 GaussianOracle::true_posterior(double s_obs) const {
  const double precision = 1.0 / prior_var + 1.0 / summary_var();
  const double var = 1.0 / precision;
  const double mean = var * (prior_mean / prior_var + s_obs / summary_var());
  return {mean, var};
}

Posterior1 GaussianOracle::abc_posterior(double s_obs, double epsilon) const {
  if (!(epsilon >= 0.0)) {
    throw std::invalid_argument("abc_posterior: epsilon must be >= 0");
  }
  const double like_var = summary_var() + epsilon * epsilon;
  const double precision = 1.0 / prior_var + 1.0 / like_var;
  const double var = 1.0 / precision;
  const double mean = var * (prior_mean / prior_var + s_obs / like_var);
  return {mean, var};
}

void gaussian_sample(const GaussianOracle& oracle, double theta,
                     std::uint64_t seed, std::span<double> out) {
  Rng rng(seed);
  rng.fill_normal(out);
  const double sd = std::sqrt(oracle.obs_noise_var);
  for (double& y : out) y = theta + sd * y;
}

GaussianOracleModel::GaussianOracleModel(const GaussianOracle& oracle)
    : oracle_(oracle) {
  if (!(oracle.prior_var > 0.0) || !(oracle.obs_noise_var > 0.0) ||
      oracle.n < 1) {
    throw std::invalid_argument(
        "GaussianOracleModel: prior_var > 0, obs_noise_var > 0, n >= 1");
  }
}

double GaussianOracleModel::prior_log_density(const ParamVec& theta) const {
  const double d = theta[0] - oracle_.prior_mean;
  return -0.5 * (d * d / oracle_.prior_var +
                 std::log(2.0 * std::numbers::pi * oracle_.prior_var));
}

ParamVec GaussianOracleModel::prior_sample(Rng& rng) const {
  ParamVec theta(1);
  theta[0] =
      oracle_.prior_mean + std::sqrt(oracle_.prior_var) * rng.next_normal();
  return theta;
}

void GaussianOracleModel::simulate(const ParamVec& theta, std::uint64_t seed,
                                   std::span<double> out) const {
  gaussian_sample(oracle_, theta[0], seed, out);
}

SummaryVec GaussianOracleModel::summarize(std::span<const double> data) const {
  double sum = 0.0;
  for (double y : data) sum += y;
  SummaryVec s(1);
  s[0] = sum / static_cast<double>(data.size());
  return s;
}

SummaryVec GaussianOracleModel::simulate_summary(
    const ParamVec& theta, std::uint64_t seed,
    std::vector<double>& scratch) const {
  // Chunked variant of simulate + summarize: same draw order, same
  // left-to-right accumulation, so the result is bit-identical while only
  // touching a small buffer.
  constexpr std::size_t kChunk = 8192;
  const std::size_t n = static_cast<std::size_t>(oracle_.n);
  scratch.resize(std::min(kChunk, n));
  Rng rng(seed);
  const double sd = std::sqrt(oracle_.obs_noise_var);
  double sum = 0.0;
  std::size_t done = 0;
  while (done < n) {
    const std::size_t len = std::min(kChunk, n - done);
    std::span<double> chunk(scratch.data(), len);
    rng.fill_normal(chunk);
    for (double z : chunk) sum += theta[0] + sd * z;
    done += len;
  }
  SummaryVec s(1);
  s[0] = sum / static_cast<double>(n);
  return s;
}

std::optional<ExactPosterior> GaussianOracleModel::exact_posterior(
    const SummaryVec& s_obs) const {
  const Posterior1 post = oracle_.true_posterior(s_obs[0]);
  ExactPosterior out;
  out.mean = ParamVec::Constant(1, post.mean);
  out.cov = Eigen::MatrixXd::Constant(1, 1, post.var);
  return out;
}

}  // namespace rabc
