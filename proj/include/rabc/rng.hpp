#pragma once

#include <cstdint>
#include <span>

#include "rabc/simd/batch.hpp"
#include "rabc/simd/xmath.hpp"

namespace rabc {

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

//! Derive an independent stream seed from (key, index). Used to give every
//! proposal index its own generator, which makes sampler output independent
//! of execution order and worker count.
inline std::uint64_t derive_seed(std::uint64_t key, std::uint64_t index) noexcept {
  return detail::mix64(key + 0x9e3779b97f4a7c15ULL * (index + 1));
}

//! splitmix64 counter generator. Cheap, splittable, and reproducible across
//! platforms; normal deviates come from the AS 241 inverse CDF so the whole
//! simulation path is a pure function of the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next_u64() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return detail::mix64(state_);
  }

  //! Uniform on the open interval (0,1); never returns 0 or 1.
  double next_unit() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double next_normal() noexcept { return xmath::normal_quantile(next_unit()); }

  void fill_unit(std::span<double> out) noexcept {
    for (double& x : out) x = next_unit();
  }

  //! Standard normal deviates via the batch inverse CDF.
  void fill_normal(std::span<double> out) noexcept {
    fill_unit(out);
    batch::normal_quantile(out, out);
  }

 private:
  std::uint64_t state_;
};

}  // namespace rabc
