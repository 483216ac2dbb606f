// Copyright 2026 The corrdetect Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CORRDETECT_RNG_H_
#define CORRDETECT_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace corrdetect {

// SplitMix64 finalizer. Used to turn (master seed, counters...) tuples into
// independent stream seeds.
constexpr uint64_t MixBits(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives a child seed from a master seed and a path of counters. The result
// depends only on the values, so work items can be scheduled in any order.
inline uint64_t DeriveSeed(uint64_t master, std::initializer_list<uint64_t> path) {
  uint64_t h = MixBits(master);
  for (uint64_t component : path) h = MixBits(h ^ MixBits(component));
  return h;
}

// Random stream with platform-independent derived draws. The engine is the
// standard 64-bit Mersenne Twister (its output sequence is fixed by the C++
// standard); the distributions below are implemented here rather than taken
// from <random>, whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // p <= 0 never fires, p >= 1 always fires.
  bool Bernoulli(double p) { return Uniform01() < p; }

  // Uniform integer in [0, bound). bound must be positive.
  uint64_t UniformBelow(uint64_t bound) {
    const uint64_t limit = (~uint64_t{0}) - (~uint64_t{0}) % bound;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      const size_t j = UniformBelow(i);
      std::swap(items[i - 1], items[j]);
    }
  }

  // k distinct values from [0, n), uniformly, in draw order (partial
  // Fisher-Yates).
  std::vector<int> SampleWithoutReplacement(int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
      const int j = i + static_cast<int>(UniformBelow(n - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
  }

  std::vector<int> Permutation(int n) {
    return SampleWithoutReplacement(n, n);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace corrdetect

#endif  // CORRDETECT_RNG_H_
