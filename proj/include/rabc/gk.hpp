#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rabc/model.hpp"

namespace rabc {

//! Parameters of the g-and-k distribution: location, scale, skewness and
//! kurtosis controls. The quantile function is strictly increasing when
//! beta > 0 and kappa > -0.5 (with the 0.8 skewness factor).
struct GkParams {
  double alpha = 0.0;
  double beta = 1.0;
  double gamma = 0.0;
  double kappa = 0.0;

  bool valid() const;
};

//! Quantile function F^{-1}(x) for x in (0,1). Throws std::domain_error for
//! x outside (0,1) and std::invalid_argument for invalid parameters.
double gk_quantile(double x, const GkParams& params);

//! n i.i.d. draws by transforming standard normal deviates; pure in
//! (params, seed).
void gk_sample(const GkParams& params, std::uint64_t seed,
               std::span<double> out);
std::vector<double> gk_sample(const GkParams& params, std::uint64_t seed,
                              std::size_t n);

//! Empirical quantiles at levels k/(d+1), k = 1..d, with linear interpolation
//! between order statistics (type-7). Throws on empty data or d < 1.
SummaryVec quantile_summaries(std::span<const double> data, int d);

//! g-and-k model with an independent uniform box prior on all four
//! parameters and evenly spaced quantile summaries.
class GkModel final : public Model {
 public:
  GkModel(int n, int summary_dim = 19, double prior_low = 0.0,
          double prior_high = 10.0);

  std::string name() const override { return "gk"; }
  int param_dim() const override { return 4; }
  int summary_dim() const override { return summary_dim_; }
  int data_size() const override { return n_; }

  double prior_log_density(const ParamVec& theta) const override;
  double prior_density(const ParamVec& theta) const override;
  ParamVec prior_sample(Rng& rng) const override;

  void simulate(const ParamVec& theta, std::uint64_t seed,
                std::span<double> out) const override;
  SummaryVec summarize(std::span<const double> data) const override;

  double prior_low() const { return lo_; }
  double prior_high() const { return hi_; }

  static GkParams params_from(const ParamVec& theta);

 private:
  int n_;
  int summary_dim_;
  double lo_, hi_;
};

}  // namespace rabc
