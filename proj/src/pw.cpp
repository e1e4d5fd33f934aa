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

#include "pwlab/pw.hpp"

#include <cmath>
#include <string>

#include "pwlab/random.hpp"

namespace pwlab {

namespace {

void require_unit(const Vector &v, Eigen::Index dim, const char *what) {
    if (v.size() != dim) {
        throw Error(ErrorKind::BadDimension, std::string(what) + " has dimension " + std::to_string(v.size()) +
                                                 ", expected " + std::to_string(dim));
    }
    if (std::abs(v.norm() - 1.0) > kNormTol) throw Error(ErrorKind::NotNormalized, std::string(what) + " is not a unit vector");
}

}  // namespace

PWSystem::PWSystem(DiscreteClock clock, int dim_r, RestLaw law)
    : clock_(clock), dim_r_(dim_r), law_(std::move(law)) {
    if (dim_r < 1) throw Error(ErrorKind::BadDimension, "rest dimension must be positive");
    if (const auto *fixed = std::get_if<FixedLaw>(&law_)) {
        if (fixed->step.rows() != dim_r || fixed->step.cols() != dim_r) {
            throw Error(ErrorKind::BadDimension, "rest step does not match dim_r");
        }
        if (!is_unitary(fixed->step)) throw Error(ErrorKind::NotUnitary, "rest step is not unitary");
        const Matrix cycle = unitary_power(fixed->step, clock_.ticks());
        if (max_abs(cycle - Matrix::Identity(dim_r, dim_r)) > kUnitaryTol) {
            throw Error(ErrorKind::NotCyclic, "rest step does not satisfy U_r^n = I");
        }
    } else {
        const auto &seq = std::get<SequenceLaw>(law_);
        if (seq.window() != clock_.ticks()) {
            throw Error(ErrorKind::LengthMismatch, "sequence law needs exactly ticks-1 steps");
        }
        for (const Matrix &step : seq.steps) {
            if (step.rows() != dim_r || step.cols() != dim_r) throw Error(ErrorKind::BadDimension, "step does not match dim_r");
            if (!is_unitary(step)) throw Error(ErrorKind::NotUnitary, "sequence step is not unitary");
        }
    }
}

PWSystem PWSystem::fixed(int ticks, const Matrix &rest_step) {
    return PWSystem(DiscreteClock(ticks), static_cast<int>(rest_step.rows()), FixedLaw{rest_step});
}

PWSystem PWSystem::trivial(int ticks, int dim_r) { return fixed(ticks, Matrix::Identity(dim_r, dim_r)); }

const Matrix &PWSystem::rest_step() const {
    if (const auto *fixed = std::get_if<FixedLaw>(&law_)) return fixed->step;
    throw Error(ErrorKind::NotCyclic, "system has a tau-dependent law");
}

Matrix PWSystem::rest_step(int tau) const {
    if (const auto *fixed = std::get_if<FixedLaw>(&law_)) return fixed->step;
    const auto &seq = std::get<SequenceLaw>(law_);
    if (tau < 0 || tau >= static_cast<int>(seq.steps.size())) {
        throw Error(ErrorKind::IndexOutOfRange, "no step U_r(tau+1, tau) at tau = " + std::to_string(tau));
    }
    return seq.steps[static_cast<std::size_t>(tau)];
}

Matrix PWSystem::rest_propagator(int tau) const {
    if (tau < 0) throw Error(ErrorKind::IndexOutOfRange, "negative clock reading");
    if (const auto *fixed = std::get_if<FixedLaw>(&law_)) return unitary_power(fixed->step, tau);
    Matrix u = Matrix::Identity(dim_r_, dim_r_);
    for (int t = 0; t < tau; ++t) u = rest_step(t) * u;
    return u;
}

Matrix PWSystem::total_evolution() const {
    if (const auto *fixed = std::get_if<FixedLaw>(&law_)) return kron(shift_op(clock_), fixed->step);
    const int n = ticks();
    const int d = dim_r_;
    Matrix u = Matrix::Zero(dim(), dim());
    for (int tau = 0; tau + 1 < n; ++tau) u.block((tau + 1) * d, tau * d, d, d) = rest_step(tau);
    u.block(0, (n - 1) * d, d, d) = Matrix::Identity(d, d);
    return u;
}

History evolve_history(const PWSystem &sys, const Vector &psi0) {
    require_unit(psi0, sys.dim_r(), "initial rest state");
    History h;
    h.dim_r = sys.dim_r();
    h.states.reserve(static_cast<std::size_t>(sys.ticks()));
    h.states.push_back(psi0);
    for (int tau = 0; tau + 1 < sys.ticks(); ++tau) h.states.push_back(sys.rest_step(tau) * h.states.back());
    return h;
}

TimelessState assemble_timeless(const History &history) {
    const int n = history.ticks();
    const int d = history.dim_r;
    if (n < 1 || d < 1) throw Error(ErrorKind::InvalidHistory, "empty history");
    TimelessState psi{n, d, Vector::Zero(static_cast<Eigen::Index>(n) * d)};
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int tau = 0; tau < n; ++tau) {
        const Vector &s = history.states[static_cast<std::size_t>(tau)];
        if (s.size() != d) throw Error(ErrorKind::InvalidHistory, "history state has the wrong dimension");
        psi.amplitudes.segment(static_cast<Eigen::Index>(tau) * d, d) = scale * s;
    }
    return psi;
}

double check_stationarity(const PWSystem &sys, const TimelessState &psi) {
    if (psi.amplitudes.size() != sys.dim()) throw Error(ErrorKind::BadDimension, "timeless state does not match system");
    return (sys.total_evolution() * psi.amplitudes - psi.amplitudes).norm();
}

Vector relative_state(const TimelessState &psi, int tau) {
    if (tau < 0 || tau >= psi.ticks) throw Error(ErrorKind::IndexOutOfRange, "clock reading out of range");
    if (psi.amplitudes.size() != static_cast<Eigen::Index>(psi.ticks) * psi.dim_r) {
        throw Error(ErrorKind::BadDimension, "timeless state amplitudes do not match ticks * dim_r");
    }
    const Vector block = psi.block(tau);
    const double norm = block.norm();
    if (norm < kZeroBlockTol) {
        throw Error(ErrorKind::ZeroConditionalBlock, "clock reading " + std::to_string(tau) + " never occurs");
    }
    return block / norm;
}

ConditionalExpectation conditional_expectation(const PWSystem &sys, const Matrix &rho, const Matrix &a_r, int tau) {
    const int d = sys.dim_r();
    if (a_r.rows() != d || a_r.cols() != d) throw Error(ErrorKind::BadDimension, "observable does not match dim_r");
    if (!is_hermitian(a_r)) throw Error(ErrorKind::NotHermitian, "conditional expectation of a non-Hermitian observable");
    if (rho.rows() != sys.dim() || rho.cols() != sys.dim()) throw Error(ErrorKind::BadDimension, "density operator does not match system");
    if (tau < 0 || tau >= sys.ticks()) throw Error(ErrorKind::IndexOutOfRange, "clock reading out of range");

    const double zero = kZeroBlockTol * kZeroBlockTol;
    // P_tau rho restricted to its rest block; the clock part of A is identity.
    const Matrix block_tau = rho.block(static_cast<Eigen::Index>(tau) * d, static_cast<Eigen::Index>(tau) * d, d, d);
    const Matrix block_0 = rho.block(0, 0, d, d);
    const double weight_tau = block_tau.trace().real();
    const double weight_0 = block_0.trace().real();
    if (weight_tau < zero) throw Error(ErrorKind::ZeroConditionalBlock, "clock reading " + std::to_string(tau) + " never occurs");
    if (weight_0 < zero) throw Error(ErrorKind::ZeroConditionalBlock, "clock reading 0 never occurs");

    const Matrix rho_r0 = block_0 / weight_0;
    const Matrix u = sys.rest_propagator(tau);

    ConditionalExpectation out;
    out.direct = (a_r * block_tau).trace().real() / weight_tau;
    out.heisenberg = (u.adjoint() * a_r * u * rho_r0).trace().real();
    out.schrodinger = (a_r * u * rho_r0 * u.adjoint()).trace().real();
    const double spread = std::max({std::abs(out.direct - out.heisenberg), std::abs(out.direct - out.schrodinger),
                                    std::abs(out.heisenberg - out.schrodinger)});
    if (spread > kPictureTol) {
        throw Error(ErrorKind::PictureMismatch,
                    "direct, Heisenberg and Schrodinger values disagree by " + std::to_string(spread));
    }
    return out;
}

ConditionalExpectation conditional_expectation(const PWSystem &sys, const TimelessState &psi, const Matrix &a_r,
                                               int tau) {
    if (psi.amplitudes.size() != sys.dim()) throw Error(ErrorKind::BadDimension, "timeless state does not match system");
    // Conditioning on a clock reading that never occurs is an error, not a zero.
    relative_state(psi, tau);
    relative_state(psi, 0);
    const Vector &v = psi.amplitudes;
    return conditional_expectation(sys, Matrix(v * v.adjoint()), a_r, tau);
}

Matrix sample_cyclic_unitary(int ticks, int d, std::uint64_t seed) {
    if (ticks < 1 || d < 1) throw Error(ErrorKind::BadDimension, "sample_cyclic_unitary needs ticks, d >= 1");
    Rng rng(seed);
    const DiscreteClock clock(ticks);
    const Matrix v = haar_unitary(d, rng);
    std::uniform_int_distribution<int> pick(0, ticks - 1);
    Vector phases(d);
    for (int k = 0; k < d; ++k) phases(k) = clock.root(pick(rng));
    return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace pwlab
