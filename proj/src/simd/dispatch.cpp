#include "rabc/simd/dispatch.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

#include "rabc/simd/batch.hpp"

namespace rabc::simd {

namespace {

Level detect_impl() {
#if defined(__x86_64__) || defined(__i386__)
  if (rabc::batch::detail::avx2_impl() != nullptr &&
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return Level::avx2;
  }
#endif
  return Level::scalar;
}

std::atomic<int>& level_state() {
  static std::atomic<int> state{-1};
  return state;
}

}  // namespace

Level detect() {
  static const Level detected = detect_impl();
  return detected;
}

bool supported(Level level) {
  return level == Level::scalar || detect() == Level::avx2;
}

Level active() {
  int cur = level_state().load(std::memory_order_relaxed);
  if (cur < 0) {
    cur = static_cast<int>(detect());
    level_state().store(cur, std::memory_order_relaxed);
  }
  return static_cast<Level>(cur);
}

void set_level(Level level) {
  if (!supported(level)) {
    throw std::invalid_argument("simd level " + std::string(name(level)) +
                                " not supported on this CPU");
  }
  level_state().store(static_cast<int>(level), std::memory_order_relaxed);
}

std::string_view name(Level level) {
  switch (level) {
    case Level::avx2:
      return "avx2";
    case Level::scalar:
    default:
      return "scalar";
  }
}

Level level_from_string(std::string_view text) {
  if (text == "scalar") return Level::scalar;
  if (text == "avx2") return Level::avx2;
  if (text == "auto") return detect();
  throw std::invalid_argument("unknown simd level: " + std::string(text));
}

}  // namespace rabc::simd
