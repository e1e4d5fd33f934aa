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

#ifndef PWLAB_CLOCK_HPP
#define PWLAB_CLOCK_HPP

#include "pwlab/linalg.hpp"

namespace pwlab {

/// Cyclic clock with ticks tau in Z_n and the generalized Pauli pair
/// X_n|tau> = |tau+1>, Z_n|tau> = omega^tau |tau>, omega = e^{2 pi i / n}.
class DiscreteClock {
   public:
    explicit DiscreteClock(int ticks);

    int ticks() const noexcept { return ticks_; }
    Complex omega() const;
    /// omega^k, evaluated directly as exp(2 pi i k / n).
    Complex root(long k) const;

    friend bool operator==(const DiscreteClock &, const DiscreteClock &) = default;

   private:
    int ticks_;
};

/// Permutation matrix tau -> tau + 1 mod n.
Matrix shift_op(const DiscreteClock &clock);
/// diag(omega^0, ..., omega^{n-1}).
Matrix clock_op(const DiscreteClock &clock);
/// diag(0, 1, ..., n-1).
Matrix time_op(const DiscreteClock &clock);

/// Basis ket |tau> of the clock.
Vector tick(const DiscreteClock &clock, int tau);

}  // namespace pwlab

#endif  // PWLAB_CLOCK_HPP
