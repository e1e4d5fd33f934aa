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

#include "pwlab/clock.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pwlab {

DiscreteClock::DiscreteClock(int ticks) : ticks_(ticks) {
    if (ticks < 1) throw Error(ErrorKind::BadDimension, "a clock needs at least one tick, got " + std::to_string(ticks));
}

Complex DiscreteClock::omega() const { return root(1); }

Complex DiscreteClock::root(long k) const {
    const long r = ((k % ticks_) + ticks_) % ticks_;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(ticks_);
    return std::polar(1.0, angle);
}

Matrix shift_op(const DiscreteClock &clock) {
    const int n = clock.ticks();
    Matrix x = Matrix::Zero(n, n);
    for (int tau = 0; tau < n; ++tau) x((tau + 1) % n, tau) = 1.0;
    return x;
}

Matrix clock_op(const DiscreteClock &clock) {
    const int n = clock.ticks();
    Matrix z = Matrix::Zero(n, n);
    for (int tau = 0; tau < n; ++tau) z(tau, tau) = clock.root(tau);
    return z;
}

Matrix time_op(const DiscreteClock &clock) {
    const int n = clock.ticks();
    Matrix t = Matrix::Zero(n, n);
    for (int tau = 0; tau < n; ++tau) t(tau, tau) = static_cast<double>(tau);
    return t;
}

Vector tick(const DiscreteClock &clock, int tau) {
    if (tau < 0 || tau >= clock.ticks()) throw Error(ErrorKind::IndexOutOfRange, "clock reading out of range");
    Vector v = Vector::Zero(clock.ticks());
    v(tau) = 1.0;
    return v;
}

}  // namespace pwlab
