#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string_view>

#include "rabc/kernel.hpp"
#include "rabc/model.hpp"
#include "rabc/proposal.hpp"

namespace rabc {

//! bernoulli: accept draw i with probability K{(s_i - s_obs)/eps}.
//! threshold: accept iff ||s_i - s_obs||_Lambda <= eps (the uniform kernel;
//! used when the bandwidth is set by acceptance proportion).
enum class AcceptMode { bernoulli, threshold };

AcceptMode accept_mode_from_string(std::string_view text);
std::string_view to_string(AcceptMode mode);

struct SamplerOptions {
  int threads = 1;
  //! Fixed block size of the index partition; results never depend on the
  //! worker count, only on the partition.
  std::size_t block = 4096;
};

//! Accepted draws of one ABC run. Row i of theta/summary belongs together
//! with distance/kernel_value/weight entry i; rows keep proposal index order.
struct AbcRun {
  Eigen::MatrixXd theta;         // m x p
  Eigen::MatrixXd summary;       // m x d
  Eigen::VectorXd distance;      // ||s_i - s_obs||_Lambda (no eps scaling)
  Eigen::VectorXd kernel_value;  // in (0,1]
  Eigen::VectorXd weight;        // pi(theta)/q(theta); exactly 1 under prior
  std::size_t n_proposed = 0;
  double p_acc_hat = 0.0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;

  std::size_t accepted() const { return static_cast<std::size_t>(theta.rows()); }
  bool empty() const { return theta.rows() == 0; }
};

//! All N draws of a proposal sweep, kept for re-thresholding: bandwidth
//! selection by proportion reuses one simulation pool across many q.
struct SimulationPool {
  Eigen::MatrixXd theta;       // N x p
  Eigen::MatrixXd summary;     // N x d
  Eigen::VectorXd distance;    // N
  Eigen::VectorXd log_weight;  // N; -inf marks draws outside the prior support
  SummaryVec s_obs;
  std::uint64_t seed = 0;

  std::size_t size() const { return static_cast<std::size_t>(theta.rows()); }
};

//! One rejection/importance-sampling sweep of N proposals.
//! Draw i derives its own generator from hash(seed, i); output is a pure
//! function of (arguments, seed) for any thread count. Zero acceptances
//! return an empty run, not an error.
AbcRun run_rejection(const Model& model, const KernelSpec& kernel,
                     const SummaryVec& s_obs, const Proposal& proposal,
                     std::size_t n_proposals, AcceptMode mode,
                     std::uint64_t seed, const SamplerOptions& opts = {});

//! Like run_rejection but stops after target_accepted acceptances (scanning
//! indices in order, capped at max_proposals).
AbcRun run_until_accepted(const Model& model, const KernelSpec& kernel,
                          const SummaryVec& s_obs, const Proposal& proposal,
                          std::size_t target_accepted,
                          std::size_t max_proposals, AcceptMode mode,
                          std::uint64_t seed);

//! Simulate N draws and keep everything (no acceptance step).
SimulationPool simulate_pool(const Model& model, const KernelSpec& kernel,
                             const SummaryVec& s_obs, const Proposal& proposal,
                             std::size_t n_proposals, std::uint64_t seed,
                             const SamplerOptions& opts = {});

//! Threshold-accept pool draws at distance <= epsilon. kernel_value is the
//! indicator (threshold acceptance is the uniform kernel).
AbcRun threshold_pool(const SimulationPool& pool, double epsilon);

//! Pick epsilon as the ceil(qN)-th smallest pool distance, then threshold.
AbcRun rethreshold_by_proportion(const SimulationPool& pool, double q);

struct PaccEstimate {
  double value = 0.0;
  double se = 0.0;
};

//! Acceptance-probability estimate with its binomial standard error.
PaccEstimate estimate_pacc(const AbcRun& run);

struct MomentEstimate {
  ParamVec mean;
  Eigen::MatrixXd cov;
  double ess = 0.0;

  ParamVec sd() const { return cov.diagonal().cwiseSqrt(); }
};

//! Self-normalized weighted mean/covariance and effective sample size.
//! Throws std::runtime_error with fewer than 2 draws.
MomentEstimate posterior_estimates(const Eigen::MatrixXd& draws,
                                   const Eigen::VectorXd& weights,
                                   bool use_weights);
MomentEstimate posterior_estimates(const AbcRun& run, bool use_weights = true);

}  // namespace rabc
