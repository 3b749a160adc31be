#pragma once

#include <cmath>
#include <cstdint>

namespace rualloc {

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Counter-based splittable generator. Streams are keyed by
/// (seed, scenario id, stream id), so workers can draw independently and the
/// whole experiment stays reproducible regardless of evaluation order.
/// Output is platform-independent (no libstdc++ distribution objects).
class SplitRng {
 public:
  SplitRng() = default;
  explicit SplitRng(std::uint64_t key) : key_(key) {}

  static SplitRng keyed(std::uint64_t seed, std::uint64_t scenario_id, std::uint64_t stream_id) {
    std::uint64_t k = detail::mix64(seed);
    k = detail::mix64(k ^ (0x8f1bbcdcbfa53e0bULL * (scenario_id + 1)));
    k = detail::mix64(k ^ (0xd6e8feb86659fd93ULL * (stream_id + 1)));
    return SplitRng(k);
  }

  std::uint64_t next_u64() {
    counter_ += 0x9e3779b97f4a7c15ULL;
    return detail::mix64(key_ ^ counter_);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi], inclusive.
  int next_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const auto wide = static_cast<unsigned __int128>(next_u64()) * span;
    return lo + static_cast<int>(wide >> 64);
  }

  /// Unit-mean exponential draw (fading power |h|^2).
  double next_exp() { return -std::log1p(-next_double()); }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace rualloc
