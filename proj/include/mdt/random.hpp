#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace mdt {

// mt19937_64 has a fully specified output sequence; the standard
// distributions do not, so draws go through these helpers to keep generated
// graphs identical across standard libraries.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

inline std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

template <typename T>
void shuffle(Rng& rng, std::span<T> items) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

}  // namespace mdt
