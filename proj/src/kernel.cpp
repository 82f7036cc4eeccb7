#include "rabc/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rabc/simd/batch.hpp"
#include "rabc/simd/xmath.hpp"

namespace rabc {

KernelFamily kernel_family_from_string(std::string_view text) {
  if (text == "gaussian") return KernelFamily::gaussian;
  if (text == "uniform") return KernelFamily::uniform;
  if (text == "epanechnikov") return KernelFamily::epanechnikov;
  throw std::invalid_argument("unknown kernel family: " + std::string(text));
}

std::string_view to_string(KernelFamily family) {
  switch (family) {
    case KernelFamily::gaussian:
      return "gaussian";
    case KernelFamily::uniform:
      return "uniform";
    case KernelFamily::epanechnikov:
      return "epanechnikov";
  }
  return "?";
}

KernelSpec::KernelSpec(KernelFamily family, int dim, double epsilon)
    : family_(family), dim_(dim), epsilon_(epsilon) {
  if (dim < 1) throw std::invalid_argument("KernelSpec: dim must be >= 1");
  set_epsilon(epsilon);
}

KernelSpec KernelSpec::identity(KernelFamily family, int dim, double epsilon) {
  KernelSpec k(family, dim, epsilon);
  k.diagonal_ = true;
  k.diag_ = Eigen::VectorXd::Ones(dim);
  return k;
}

KernelSpec KernelSpec::diagonal(KernelFamily family, Eigen::VectorXd weights,
                                double epsilon) {
  KernelSpec k(family, static_cast<int>(weights.size()), epsilon);
  for (int i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0.0) || !std::isfinite(weights[i])) {
      throw std::invalid_argument(
          "KernelSpec::diagonal: weights must be finite and >= 0");
    }
  }
  k.diagonal_ = true;
  k.diag_ = std::move(weights);
  return k;
}

KernelSpec KernelSpec::general(KernelFamily family,
                               const Eigen::MatrixXd& lambda, double epsilon) {
  if (lambda.rows() != lambda.cols()) {
    throw std::invalid_argument("KernelSpec::general: Lambda must be square");
  }
  if (!lambda.isApprox(lambda.transpose(), 1e-12)) {
    throw std::invalid_argument("KernelSpec::general: Lambda must be symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(lambda);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument(
        "KernelSpec::general: Lambda must be positive definite");
  }
  KernelSpec k(family, static_cast<int>(lambda.rows()), epsilon);
  k.diagonal_ = false;
  k.chol_l_ = llt.matrixL();
  return k;
}

void KernelSpec::set_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("KernelSpec: epsilon must be positive");
  }
  epsilon_ = epsilon;
}

double KernelSpec::profile(double t) const {
  switch (family_) {
    case KernelFamily::gaussian:
      return xmath::exp(-0.5 * (t * t));
    case KernelFamily::uniform:
      return t <= 1.0 ? 1.0 : 0.0;
    case KernelFamily::epanechnikov: {
      const double v = 1.0 - t * t;
      return v > 0.0 ? v : 0.0;
    }
  }
  return 0.0;
}

double KernelSpec::eval(const Eigen::VectorXd& v) const {
  return profile(lambda_norm_of(v));
}

double KernelSpec::lambda_norm_of(const Eigen::VectorXd& v) const {
  if (v.size() != dim_) {
    throw std::invalid_argument("KernelSpec: dimension mismatch");
  }
  if (diagonal_) {
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(dim_);
    double out = 0.0;
    batch::weighted_sqdist_colmajor(v.data(), 1, static_cast<std::size_t>(dim_),
                                    1, zero.data(), diag_.data(), &out);
    return std::sqrt(out);
  }
  return (chol_l_.transpose() * v).norm();
}

double KernelSpec::lambda_norm(const SummaryVec& s,
                               const SummaryVec& s_obs) const {
  if (s.size() != dim_ || s_obs.size() != dim_) {
    throw std::invalid_argument("KernelSpec: dimension mismatch");
  }
  if (diagonal_) {
    double out = 0.0;
    batch::weighted_sqdist_colmajor(s.data(), 1, static_cast<std::size_t>(dim_),
                                    1, s_obs.data(), diag_.data(), &out);
    return std::sqrt(out);
  }
  return (chol_l_.transpose() * (s - s_obs)).norm();
}

double KernelSpec::scaled_distance(const SummaryVec& s,
                                   const SummaryVec& s_obs) const {
  return lambda_norm(s, s_obs) / epsilon_;
}

Eigen::VectorXd KernelSpec::lambda_norms(const Eigen::MatrixXd& summaries,
                                         const SummaryVec& s_obs) const {
  if (summaries.cols() != dim_ || s_obs.size() != dim_) {
    throw std::invalid_argument("KernelSpec: dimension mismatch");
  }
  const auto m = summaries.rows();
  Eigen::VectorXd out(m);
  if (m == 0) return out;
  if (diagonal_) {
    batch::weighted_sqdist_colmajor(
        summaries.data(), static_cast<std::size_t>(m),
        static_cast<std::size_t>(dim_), static_cast<std::size_t>(m),
        s_obs.data(), diag_.data(), out.data());
    for (auto i = 0; i < m; ++i) out[i] = std::sqrt(out[i]);
    return out;
  }
  Eigen::MatrixXd centered = summaries.rowwise() - s_obs.transpose();
  out = (centered * chol_l_).rowwise().norm();
  return out;
}

Eigen::VectorXd KernelSpec::acceptance_probabilities(
    const Eigen::VectorXd& norms, double epsilon) const {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("KernelSpec: epsilon must be positive");
  }
  const auto m = norms.size();
  Eigen::VectorXd out(m);
  const double inv_eps = 1.0 / epsilon;
  switch (family_) {
    case KernelFamily::gaussian: {
      for (auto i = 0; i < m; ++i) {
        const double t = norms[i] * inv_eps;
        out[i] = -0.5 * (t * t);
      }
      batch::exp(std::span<const double>(out.data(), out.size()),
                 std::span<double>(out.data(), out.size()));
      break;
    }
    case KernelFamily::uniform:
      for (auto i = 0; i < m; ++i) out[i] = norms[i] * inv_eps <= 1.0 ? 1.0 : 0.0;
      break;
    case KernelFamily::epanechnikov:
      for (auto i = 0; i < m; ++i) {
        const double t = norms[i] * inv_eps;
        const double v = 1.0 - t * t;
        out[i] = v > 0.0 ? v : 0.0;
      }
      break;
  }
  return out;
}

Eigen::VectorXd KernelSpec::standardized_weights(
    const Eigen::MatrixXd& pilot_summaries) {
  const auto m = pilot_summaries.rows();
  if (m < 2) {
    throw std::invalid_argument(
        "standardized_weights: need at least 2 pilot draws");
  }
  const Eigen::RowVectorXd mean = pilot_summaries.colwise().mean();
  Eigen::VectorXd weights(pilot_summaries.cols());
  for (int j = 0; j < pilot_summaries.cols(); ++j) {
    const double var =
        (pilot_summaries.col(j).array() - mean[j]).square().sum() /
        static_cast<double>(m - 1);
    weights[j] = (std::isfinite(var) && var > 0.0) ? 1.0 / var : 0.0;
  }
  return weights;
}

double bandwidth_from_proportion(std::span<const double> distances, double q) {
  if (distances.empty()) {
    throw std::invalid_argument("bandwidth_from_proportion: empty distances");
  }
  if (!(q > 0.0 && q <= 1.0)) {
    throw std::invalid_argument("bandwidth_from_proportion: q must be in (0,1]");
  }
  const std::size_t n = distances.size();
  std::size_t k = static_cast<std::size_t>(
      std::ceil(q * static_cast<double>(n)));
  k = std::clamp<std::size_t>(k, 1, n);
  std::vector<double> work(distances.begin(), distances.end());
  std::nth_element(work.begin(), work.begin() + (k - 1), work.end());
  return work[k - 1];
}

}  // namespace rabc
