// Copyright 2026 The pwlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PWLAB_RANDOM_HPP
#define PWLAB_RANDOM_HPP

#include <cstdint>
#include <random>

#include "pwlab/linalg.hpp"

namespace pwlab {

/// All sampling goes through this engine so a seed fixes every draw.
using Rng = std::mt19937_64;

/// SplitMix64 mix of (base, stream); gives independent-looking seeds for
/// sub-draws of one seeded run.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng &rng);

/// Haar-distributed d x d unitary: QR of a complex Gaussian matrix with the
/// phases of R's diagonal folded back into Q.
Matrix haar_unitary(Eigen::Index d, Rng &rng);

Vector random_unit_vector(Eigen::Index d, Rng &rng);

}  // namespace pwlab

#endif  // PWLAB_RANDOM_HPP
