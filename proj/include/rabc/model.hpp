#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rabc/rng.hpp"

namespace rabc {

using ParamVec = Eigen::VectorXd;
using SummaryVec = Eigen::VectorXd;

struct ExactPosterior {
  ParamVec mean;
  Eigen::MatrixXd cov;
  ParamVec sd() const { return cov.diagonal().cwiseSqrt(); }
};

//! A simulator-based model: prior over theta, a pure (theta, seed) -> dataset
//! map, and a summary map. Everything is deterministic given the seed, so
//! draws can be re-simulated from their index-derived seeds at any time.
class Model {
 public:
  virtual ~Model() = default;

  virtual std::string name() const = 0;
  virtual int param_dim() const = 0;
  virtual int summary_dim() const = 0;
  virtual int data_size() const = 0;

  //! log prior density; -inf outside the support.
  virtual double prior_log_density(const ParamVec& theta) const = 0;
  virtual double prior_density(const ParamVec& theta) const;
  virtual ParamVec prior_sample(Rng& rng) const = 0;
  bool in_support(const ParamVec& theta) const {
    return prior_density(theta) > 0.0;
  }

  //! Fill out (size data_size()) with a dataset simulated at theta.
  virtual void simulate(const ParamVec& theta, std::uint64_t seed,
                        std::span<double> out) const = 0;
  virtual SummaryVec summarize(std::span<const double> data) const = 0;

  //! simulate + summarize with a reusable scratch buffer. Overrides must
  //! produce bit-identical results to the default path.
  virtual SummaryVec simulate_summary(const ParamVec& theta, std::uint64_t seed,
                                      std::vector<double>& scratch) const;

  //! Closed-form posterior given the summary, when the model has one.
  virtual std::optional<ExactPosterior> exact_posterior(
      const SummaryVec& s_obs) const;
};

}  // namespace rabc
