#include "rabc/proposal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rabc {

Proposal Proposal::prior() {
  Proposal p;
  p.base_ = Base::prior;
  return p;
}

Proposal Proposal::gaussian(ParamVec mean, Eigen::MatrixXd cov) {
  if (cov.rows() != cov.cols() || cov.rows() != mean.size()) {
    throw std::invalid_argument("Proposal: mean/cov dimension mismatch");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("Proposal: covariance must be positive definite");
  }
  Proposal p;
  p.base_ = Base::gaussian;
  p.mean_ = std::move(mean);
  p.cov_ = std::move(cov);
  p.chol_l_ = llt.matrixL();
  double log_det = 0.0;
  for (int i = 0; i < p.chol_l_.rows(); ++i) {
    log_det += 2.0 * std::log(p.chol_l_(i, i));
  }
  p.log_norm_ = -0.5 * (static_cast<double>(p.mean_.size()) *
                            std::log(2.0 * std::numbers::pi) +
                        log_det);
  return p;
}

Proposal Proposal::location_scale(const ParamVec& center,
                                  const Eigen::MatrixXd& cov, double c,
                                  const ParamVec& offset) {
  if (!(c > 0.0)) {
    throw std::invalid_argument("Proposal: inflation factor must be positive");
  }
  if (offset.size() != center.size()) {
    throw std::invalid_argument("Proposal: offset dimension mismatch");
  }
  return gaussian(center + offset, (c * c) * cov);
}

ParamVec Proposal::sample(const Model& model, Rng& rng) const {
  if (base_ == Base::prior) return model.prior_sample(rng);
  ParamVec z(mean_.size());
  for (int i = 0; i < z.size(); ++i) z[i] = rng.next_normal();
  return mean_ + chol_l_ * z;
}

double Proposal::log_density(const Model& model, const ParamVec& theta) const {
  if (base_ == Base::prior) return model.prior_log_density(theta);
  const Eigen::VectorXd u =
      chol_l_.triangularView<Eigen::Lower>().solve(theta - mean_);
  return log_norm_ - 0.5 * u.squaredNorm();
}

double Proposal::importance_log_weight(const Model& model,
                                       const ParamVec& theta) const {
  if (base_ == Base::prior) return 0.0;
  return model.prior_log_density(theta) - log_density(model, theta);
}

}  // namespace rabc
