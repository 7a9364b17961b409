// Copyright (c) 2026 The rissec Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace rissec {

/*
 * Reproducible substreams.
 *
 * Every random draw in the simulator comes from a RandomStream addressed by
 * (seed, substream index). Streams are never shared: each Monte-Carlo trial
 * gets its own, derived from the cell seed and the trial index, so results
 * do not depend on how trials are scheduled across workers. Equal
 * (seed, index) pairs always reproduce the identical draw sequence.
 */

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Child seed for substream `index` of `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index ^ 0xd1b54a32d192ed03ULL));
}

/// FNV-1a; stable across platforms, used to fold names into seeds.
constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t substream)
      : seed_(seed), substream_(substream), engine_(derive_seed(seed, substream)) {}

  double normal() { return normal_(engine_); }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * unit_(engine_);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t substream() const { return substream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t substream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

}  // namespace rissec
