// Copyright 2026 The qcsearch Authors
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

#include "qcsearch/tensor.hpp"

namespace qcsearch {

/// Identifies a reproducible random stream. Trial t of an experiment seeded
/// with s uses RngSeed{s, t}; draws never depend on execution order.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  /// Independent sub-stream, e.g. one per restart or per purpose.
  RngSeed child(std::uint64_t tag) const;

  friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

using Engine = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seeds a Mersenne Twister from the hashed (seed, stream) pair.
Engine make_engine(const RngSeed& rng);

/// Haar-random pure state: normalized vector of i.i.d. complex Gaussians.
StateVector haar_random_state(int n, const RngSeed& rng);

/// Haar-random unitary: Ginibre matrix, QR, columns rephased by
/// diag(R)/|diag(R)|.
UnitaryMatrix haar_random_unitary(int n, const RngSeed& rng);

}  // namespace qcsearch
