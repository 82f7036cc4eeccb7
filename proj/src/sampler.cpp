#include "rabc/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "rabc/parallel.hpp"

namespace rabc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

//! One proposal draw: theta, summary, Lambda-distance, log weight. Draws
//! outside the prior support are not simulated; they carry weight 0 and an
//! infinite distance so no acceptance rule can keep them.
struct DrawBuffers {
  std::vector<double> scratch;
  SummaryVec summary;
};

struct DrawResult {
  ParamVec theta;
  SummaryVec summary;
  double distance = std::numeric_limits<double>::infinity();
  double log_weight = kNegInf;
  bool simulable = false;
};

DrawResult make_draw(const Model& model, const KernelSpec& kernel,
                     const SummaryVec& s_obs, const Proposal& proposal,
                     Rng& rng, DrawBuffers& buf) {
  DrawResult out;
  out.theta = proposal.sample(model, rng);
  out.log_weight = proposal.importance_log_weight(model, out.theta);
  if (out.log_weight == kNegInf && !model.in_support(out.theta)) {
    out.summary = SummaryVec::Constant(model.summary_dim(),
                                       std::numeric_limits<double>::quiet_NaN());
    return out;
  }
  const std::uint64_t sim_seed = rng.next_u64();
  out.summary = model.simulate_summary(out.theta, sim_seed, buf.scratch);
  out.distance = kernel.lambda_norm(out.summary, s_obs);
  out.simulable = true;
  return out;
}

void check_inputs(const Model& model, const KernelSpec& kernel,
                  const SummaryVec& s_obs) {
  if (kernel.dim() != model.summary_dim() ||
      s_obs.size() != model.summary_dim()) {
    throw std::invalid_argument("sampler: summary dimension mismatch");
  }
}

struct BlockAccum {
  std::vector<double> theta, summary, distance, kval, weight;
  std::size_t count = 0;
};

}  // namespace

AcceptMode accept_mode_from_string(std::string_view text) {
  if (text == "bernoulli") return AcceptMode::bernoulli;
  if (text == "threshold") return AcceptMode::threshold;
  throw std::invalid_argument("unknown accept mode: " + std::string(text));
}

std::string_view to_string(AcceptMode mode) {
  return mode == AcceptMode::bernoulli ? "bernoulli" : "threshold";
}

AbcRun run_rejection(const Model& model, const KernelSpec& kernel,
                     const SummaryVec& s_obs, const Proposal& proposal,
                     std::size_t n_proposals, AcceptMode mode,
                     std::uint64_t seed, const SamplerOptions& opts) {
  check_inputs(model, kernel, s_obs);
  if (n_proposals < 1) {
    throw std::invalid_argument("run_rejection: need at least one proposal");
  }
  const int p = model.param_dim();
  const int d = model.summary_dim();
  const double eps = kernel.epsilon();

  const std::size_t block = std::max<std::size_t>(1, opts.block);
  const std::size_t nblocks = (n_proposals + block - 1) / block;
  std::vector<BlockAccum> blocks(nblocks);

  parallel_for(
      n_proposals, opts.threads,
      [&](std::size_t lo, std::size_t hi) {
        DrawBuffers buf;
        BlockAccum& acc = blocks[lo / block];
        for (std::size_t i = lo; i < hi; ++i) {
          DrawResult draw =
              make_draw(model, kernel, s_obs, proposal, seed, i, buf);
          bool accept = false;
          double kval = 0.0;
          if (draw.simulable) {
            if (mode == AcceptMode::bernoulli) {
              // The acceptance variate comes from the same per-draw stream,
              // after theta and the dataset; re-derive it here.
              Rng rng(derive_seed(seed, i));
              proposal.sample(model, rng);  // advance past theta draws
              rng.next_u64();               // past the dataset seed
              kval = kernel.profile(draw.distance / eps);
              accept = rng.next_unit() < kval;
            } else {
              accept = draw.distance <= eps;
              kval = 1.0;
            }
          }
          if (accept) {
            for (int j = 0; j < p; ++j) acc.theta.push_back(draw.theta[j]);
            for (int j = 0; j < d; ++j) acc.summary.push_back(draw.summary[j]);
            acc.distance.push_back(draw.distance);
            acc.kval.push_back(kval);
            acc.weight.push_back(std::exp(draw.log_weight));
            ++acc.count;
          }
        }
      },
      block);

  std::size_t total = 0;
  for (const auto& b : blocks) total += b.count;

  AbcRun run;
  run.theta.resize(total, p);
  run.summary.resize(total, d);
  run.distance.resize(total);
  run.kernel_value.resize(total);
  run.weight.resize(total);
  std::size_t row = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.count; ++r, ++row) {
      for (int j = 0; j < p; ++j) run.theta(row, j) = b.theta[r * p + j];
      for (int j = 0; j < d; ++j) run.summary(row, j) = b.summary[r * d + j];
      run.distance[row] = b.distance[r];
      run.kernel_value[row] = b.kval[r];
      run.weight[row] = b.weight[r];
    }
  }
  run.n_proposed = n_proposals;
  run.p_acc_hat = static_cast<double>(total) / static_cast<double>(n_proposals);
  run.epsilon = eps;
  run.seed = seed;
  return run;
}

AbcRun run_until_accepted(const Model& model, const KernelSpec& kernel,
                          const SummaryVec& s_obs, const Proposal& proposal,
                          std::size_t target_accepted,
                          std::size_t max_proposals, AcceptMode mode,
                          std::uint64_t seed) {
  check_inputs(model, kernel, s_obs);
  if (target_accepted < 1) {
    throw std::invalid_argument("run_until_accepted: target must be >= 1");
  }
  const int p = model.param_dim();
  const int d = model.summary_dim();
  const double eps = kernel.epsilon();

  BlockAccum acc;
  DrawBuffers buf;
  std::size_t i = 0;
  for (; i < max_proposals && acc.count < target_accepted; ++i) {
    DrawResult draw = make_draw(model, kernel, s_obs, proposal, seed, i, buf);
    bool accept = false;
    double kval = 0.0;
    if (draw.simulable) {
      if (mode == AcceptMode::bernoulli) {
        Rng rng(derive_seed(seed, i));
        proposal.sample(model, rng);
        rng.next_u64();
        kval = kernel.profile(draw.distance / eps);
        accept = rng.next_unit() < kval;
      } else {
        accept = draw.distance <= eps;
        kval = 1.0;
      }
    }
    if (accept) {
      for (int j = 0; j < p; ++j) acc.theta.push_back(draw.theta[j]);
      for (int j = 0; j < d; ++j) acc.summary.push_back(draw.summary[j]);
      acc.distance.push_back(draw.distance);
      acc.kval.push_back(kval);
      acc.weight.push_back(std::exp(draw.log_weight));
      ++acc.count;
    }
  }

  AbcRun run;
  run.theta.resize(acc.count, p);
  run.summary.resize(acc.count, d);
  run.distance.resize(acc.count);
  run.kernel_value.resize(acc.count);
  run.weight.resize(acc.count);
  for (std::size_t r = 0; r < acc.count; ++r) {
    for (int j = 0; j < p; ++j) run.theta(r, j) = acc.theta[r * p + j];
    for (int j = 0; j < d; ++j) run.summary(r, j) = acc.summary[r * d + j];
    run.distance[r] = acc.distance[r];
    run.kernel_value[r] = acc.kval[r];
    run.weight[r] = acc.weight[r];
  }
  run.n_proposed = i;
  run.p_acc_hat =
      i > 0 ? static_cast<double>(acc.count) / static_cast<double>(i) : 0.0;
  run.epsilon = eps;
  run.seed = seed;
  return run;
}

SimulationPool simulate_pool(const Model& model, const KernelSpec& kernel,
                             const SummaryVec& s_obs, const Proposal& proposal,
                             std::size_t n_proposals, std::uint64_t seed,
                             const SamplerOptions& opts) {
  check_inputs(model, kernel, s_obs);
  const int p = model.param_dim();
  const int d = model.summary_dim();

  SimulationPool pool;
  pool.theta.resize(n_proposals, p);
  pool.summary.resize(n_proposals, d);
  pool.distance.resize(n_proposals);
  pool.log_weight.resize(n_proposals);
  pool.s_obs = s_obs;
  pool.seed = seed;

  parallel_for(
      n_proposals, opts.threads,
      [&](std::size_t lo, std::size_t hi) {
        DrawBuffers buf;
        for (std::size_t i = lo; i < hi; ++i) {
          DrawResult draw =
              make_draw(model, kernel, s_obs, proposal, seed, i, buf);
          for (int j = 0; j < p; ++j) pool.theta(i, j) = draw.theta[j];
          for (int j = 0; j < d; ++j) pool.summary(i, j) = draw.summary[j];
          pool.distance[i] = draw.distance;
          pool.log_weight[i] = draw.log_weight;
        }
      },
      opts.block);
  return pool;
}

AbcRun threshold_pool(const SimulationPool& pool, double epsilon) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("threshold_pool: epsilon must be positive");
  }
  const auto n = pool.size();
  const int p = static_cast<int>(pool.theta.cols());
  const int d = static_cast<int>(pool.summary.cols());

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (pool.distance[i] <= epsilon) keep.push_back(i);
  }

  AbcRun run;
  const std::size_t m = keep.size();
  run.theta.resize(m, p);
  run.summary.resize(m, d);
  run.distance.resize(m);
  run.kernel_value.resize(m);
  run.weight.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t i = keep[r];
    run.theta.row(r) = pool.theta.row(i);
    run.summary.row(r) = pool.summary.row(i);
    run.distance[r] = pool.distance[i];
    run.kernel_value[r] = 1.0;
    run.weight[r] = std::exp(pool.log_weight[i]);
  }
  run.n_proposed = n;
  run.p_acc_hat = n > 0 ? static_cast<double>(m) / static_cast<double>(n) : 0.0;
  run.epsilon = epsilon;
  run.seed = pool.seed;
  return run;
}

AbcRun rethreshold_by_proportion(const SimulationPool& pool, double q) {
  const double eps = bandwidth_from_proportion(
      std::span<const double>(pool.distance.data(),
                              static_cast<std::size_t>(pool.distance.size())),
      q);
  return threshold_pool(pool, eps);
}

PaccEstimate estimate_pacc(const AbcRun& run) {
  PaccEstimate est;
  est.value = run.p_acc_hat;
  if (run.n_proposed > 0) {
    est.se = std::sqrt(est.value * (1.0 - est.value) /
                       static_cast<double>(run.n_proposed));
  }
  return est;
}

MomentEstimate posterior_estimates(const Eigen::MatrixXd& draws,
                                   const Eigen::VectorXd& weights,
                                   bool use_weights) {
  const auto m = draws.rows();
  if (m < 2) {
    throw std::runtime_error(
        "posterior_estimates: need at least 2 accepted draws");
  }
  const int p = static_cast<int>(draws.cols());

  Eigen::VectorXd w;
  if (use_weights) {
    if (weights.size() != m) {
      throw std::invalid_argument("posterior_estimates: weight size mismatch");
    }
    w = weights;
  } else {
    w = Eigen::VectorXd::Ones(m);
  }
  const double wsum = w.sum();
  if (!(wsum > 0.0) || !std::isfinite(wsum)) {
    throw std::runtime_error(
        "posterior_estimates: weights must be finite with positive sum");
  }

  MomentEstimate est;
  est.mean = (draws.transpose() * w) / wsum;
  Eigen::MatrixXd centered = draws.rowwise() - est.mean.transpose();
  est.cov = (centered.transpose() * w.asDiagonal() * centered) / wsum;
  est.ess = wsum * wsum / w.squaredNorm();
  (void)p;
  return est;
}

MomentEstimate posterior_estimates(const AbcRun& run, bool use_weights) {
  return posterior_estimates(run.theta, run.weight, use_weights);
}

}  // namespace rabc
