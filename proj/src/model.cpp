#include "rabc/model.hpp"

#include <cmath>

namespace rabc {

double Model::prior_density(const ParamVec& theta) const {
  const double lp = prior_log_density(theta);
  return std::isfinite(lp) ? std::exp(lp) : 0.0;
}

SummaryVec Model::simulate_summary(const ParamVec& theta, std::uint64_t seed,
                                   std::vector<double>& scratch) const {
  scratch.resize(static_cast<std::size_t>(data_size()));
  simulate(theta, seed, scratch);
  return summarize(scratch);
}

std::optional<ExactPosterior> Model::exact_posterior(const SummaryVec&) const {
  return std::nullopt;
}

}  // namespace rabc
