#pragma once

#include <bit>
#include <cstdint>
#include <string_view>
#include <vector>

namespace kcolor {

// Deterministic splittable random stream. A stream is identified by a key
// derived from (seed, label, index); substreams are derived from the parent
// key alone, never from consumed state. This lets the planner hand disjoint
// streams to parallel jobs and merge results in a fixed order, so output is
// a function of the seed and not of thread scheduling.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : key_(mix(seed ^ kGolden)), state_(key_) {}

  // Child stream for the job named (label, index). Independent of how much
  // of this stream has been consumed.
  SplitRng stream(std::string_view label, std::uint64_t index) const {
    std::uint64_t h = key_;
    for (unsigned char c : label) h = mix(h ^ c);
    return SplitRng(mix(h ^ index), Derived{});
  }

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix(state_);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform in [0, bound); unbiased via rejection on the masked draw.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    for (;;) {
      const std::uint64_t r = next_u64() & mask;
      if (r < bound) return r;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  struct Derived {};
  SplitRng(std::uint64_t key, Derived) : key_(key), state_(key) {}

  // splitmix64 finalizer.
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  std::uint64_t key_;    // identity of this stream, fixed at creation
  std::uint64_t state_;  // advances as values are drawn
};

}  // namespace kcolor
