#pragma once

#include <Eigen/Dense>

#include "rabc/model.hpp"

namespace rabc {

//! Parameter proposal distribution: either the model prior or a multivariate
//! normal location-scale family.
class Proposal {
 public:
  enum class Base { prior, gaussian };

  static Proposal prior();
  static Proposal gaussian(ParamVec mean, Eigen::MatrixXd cov);
  //! Normal proposal with mean center + offset and covariance c^2 * cov.
  static Proposal location_scale(const ParamVec& center,
                                 const Eigen::MatrixXd& cov, double c,
                                 const ParamVec& offset);

  Base base() const { return base_; }
  const ParamVec& mean() const { return mean_; }
  const Eigen::MatrixXd& cov() const { return cov_; }

  ParamVec sample(const Model& model, Rng& rng) const;
  double log_density(const Model& model, const ParamVec& theta) const;

  //! log pi(theta) - log q(theta); exactly 0 for the prior proposal.
  double importance_log_weight(const Model& model, const ParamVec& theta) const;

 private:
  Proposal() = default;

  Base base_ = Base::prior;
  ParamVec mean_;
  Eigen::MatrixXd cov_;
  Eigen::MatrixXd chol_l_;
  double log_norm_ = 0.0;
};

}  // namespace rabc
