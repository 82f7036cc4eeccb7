#pragma once

#include <cstdint>
#include <span>

#include "rabc/model.hpp"

namespace rabc {

struct Posterior1 {
  double mean = 0.0;
  double var = 0.0;
  double sd() const;
};

//! Conjugate normal test model: theta ~ N(prior_mean, prior_var), data are n
//! i.i.d. N(theta, obs_noise_var) draws, summary is the sample mean. Every
//! quantity in the summary CLT is available in closed form:
//! s(theta) = theta, Ds = 1, A = obs_noise_var, a_n = sqrt(n),
//! I = Ds^2/A, beta0 = I^{-1} Ds / A.
struct GaussianOracle {
  double prior_mean = 0.0;
  double prior_var = 1.0;
  double obs_noise_var = 1.0;
  int n = 100;

  double a_n() const;
  double s_limit(double theta) const { return theta; }
  double ds() const { return 1.0; }
  double noise() const { return obs_noise_var; }
  double info() const { return ds() * ds() / obs_noise_var; }
  double beta0() const { return ds() / (info() * obs_noise_var); }
  //! Variance of the summary given theta: obs_noise_var / n.
  double summary_var() const;

  //! Exact posterior given the observed summary.
  Posterior1 true_posterior(double s_obs) const;

  //! Exact ABC posterior for the Gaussian kernel with identity scaling:
  //! the kernel convolves the summary density, N(s_obs; theta,
  //! summary_var + eps^2). eps = 0 recovers true_posterior.
  Posterior1 abc_posterior(double s_obs, double epsilon) const;
};

//! n i.i.d. N(theta, obs_noise_var) draws; pure in (theta, seed).
void gaussian_sample(const GaussianOracle& oracle, double theta,
                     std::uint64_t seed, std::span<double> out);

class GaussianOracleModel final : public Model {
 public:
  explicit GaussianOracleModel(const GaussianOracle& oracle);

  std::string name() const override { return "gaussian"; }
  int param_dim() const override { return 1; }
  int summary_dim() const override { return 1; }
  int data_size() const override { return oracle_.n; }

  double prior_log_density(const ParamVec& theta) const override;
  ParamVec prior_sample(Rng& rng) const override;

  void simulate(const ParamVec& theta, std::uint64_t seed,
                std::span<double> out) const override;
  SummaryVec summarize(std::span<const double> data) const override;
  SummaryVec simulate_summary(const ParamVec& theta, std::uint64_t seed,
                              std::vector<double>& scratch) const override;

  std::optional<ExactPosterior> exact_posterior(
      const SummaryVec& s_obs) const override;

  const GaussianOracle& oracle() const { return oracle_; }

 private:
  GaussianOracle oracle_;
};

}  // namespace rabc
