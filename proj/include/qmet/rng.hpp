// Copyright 2026 The qmet developers
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

#pragma once

#include <cstdint>
#include <random>

namespace qmet {

/// splitmix64 finalizer (Steele, Lea & Flood). Used to spread seeds and to
/// derive independent per-stream seeds from one master seed.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Deterministic seed for stream `stream` of a master seed. Streams derived
/// this way can be consumed in any order (or in parallel) with identical
/// results.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master + stream * 0x9E3779B97F4A7C15ull);
}

/// All stochastic code uses std::mt19937_64: the algorithm is fully specified
/// by the standard, so a fixed seed reproduces bit-identical sequences.
inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

/// Uniform double in [0, 1) from the top 53 bits of one engine draw; spelled
/// out (instead of std::uniform_real_distribution) so that the mapping from
/// engine output to variates is pinned down.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace qmet
