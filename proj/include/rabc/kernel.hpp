#pragma once

#include <Eigen/Dense>
#include <span>
#include <string_view>

#include "rabc/model.hpp"

namespace rabc {

//! Acceptance kernels: symmetric, max 1 at the origin, nonincreasing in the
//! scaled norm ||v||_Lambda.
enum class KernelFamily { gaussian, uniform, epanechnikov };

KernelFamily kernel_family_from_string(std::string_view text);
std::string_view to_string(KernelFamily family);

class KernelSpec {
 public:
  //! Lambda = identity.
  static KernelSpec identity(KernelFamily family, int dim,
                             double epsilon = 1.0);
  //! Lambda = diag(weights); weights must be positive (0 drops a coordinate).
  static KernelSpec diagonal(KernelFamily family, Eigen::VectorXd weights,
                             double epsilon = 1.0);
  //! General symmetric positive-definite Lambda; throws if not PD.
  static KernelSpec general(KernelFamily family, const Eigen::MatrixXd& lambda,
                            double epsilon = 1.0);

  KernelFamily family() const { return family_; }
  int dim() const { return dim_; }
  double epsilon() const { return epsilon_; }
  void set_epsilon(double epsilon);

  //! Radial profile: the kernel value at ||v||_Lambda = t, t >= 0.
  double profile(double t) const;

  //! K(v) for an already epsilon-scaled difference v.
  double eval(const Eigen::VectorXd& v) const;

  //! ||v||_Lambda without bandwidth scaling.
  double lambda_norm_of(const Eigen::VectorXd& v) const;
  double lambda_norm(const SummaryVec& s, const SummaryVec& s_obs) const;

  //! ||(s - s_obs)/epsilon||_Lambda.
  double scaled_distance(const SummaryVec& s, const SummaryVec& s_obs) const;

  //! Batch ||s_i - s_obs||_Lambda over the rows of a column-major matrix.
  Eigen::VectorXd lambda_norms(const Eigen::MatrixXd& summaries,
                               const SummaryVec& s_obs) const;

  //! profile(dist_i / epsilon) over precomputed Lambda-norms.
  Eigen::VectorXd acceptance_probabilities(const Eigen::VectorXd& lambda_norms,
                                           double epsilon) const;

  bool diagonal_lambda() const { return diagonal_; }
  const Eigen::VectorXd& diag_weights() const { return diag_; }

  //! diag weights 1/sd_j^2 from pilot summaries (rows = pilot draws).
  //! Coordinates with zero spread get weight 0.
  static Eigen::VectorXd standardized_weights(
      const Eigen::MatrixXd& pilot_summaries);

 private:
  KernelSpec(KernelFamily family, int dim, double epsilon);

  KernelFamily family_;
  int dim_;
  double epsilon_;
  bool diagonal_ = true;
  Eigen::VectorXd diag_;     // diagonal weights when diagonal_
  Eigen::MatrixXd chol_l_;   // Lambda = L L^T when general
};

//! The ceil(q*N)-th smallest distance: with a uniform kernel this accepts a
//! proportion q of the sample. Throws on empty input or q outside (0,1].
double bandwidth_from_proportion(std::span<const double> distances, double q);

}  // namespace rabc
