#pragma once

#include <string_view>

namespace rabc::simd {

//! Instruction-set level used by the batch kernels. All levels produce
//! bit-identical results; the level only affects throughput.
enum class Level { scalar = 0, avx2 = 1 };

//! Highest level supported by the executing CPU.
Level detect();

bool supported(Level level);

//! Currently active level. Defaults to detect() on first use.
Level active();

//! Override the active level. Throws std::invalid_argument if the CPU does
//! not support it.
void set_level(Level level);

std::string_view name(Level level);

//! Parse "scalar" | "avx2" | "auto"; throws std::invalid_argument otherwise.
Level level_from_string(std::string_view text);

}  // namespace rabc::simd
