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

#ifndef PWLAB_PW_HPP
#define PWLAB_PW_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "pwlab/clock.hpp"
#include "pwlab/linalg.hpp"

namespace pwlab {

inline constexpr double kNormTol = 1e-10;
inline constexpr double kStationarityTol = 1e-9;
inline constexpr double kZeroBlockTol = 1e-12;
inline constexpr double kPictureTol = 1e-9;

/// Time-independent rest law: one step U_r with U_r^n = I.
struct FixedLaw {
    Matrix step;
};

/// tau-dependent rest law on a finite window: steps[tau] = U_r(tau+1, tau)
/// for tau = 0..window-2. No cyclicity is required.
struct SequenceLaw {
    std::vector<Matrix> steps;

    int window() const noexcept { return static_cast<int>(steps.size()) + 1; }
};

using RestLaw = std::variant<FixedLaw, SequenceLaw>;

/// Ideal discrete PW system: a cyclic clock, a rest system of dimension
/// dim_r and its one-step law. Fixed laws are rejected unless U_r^n = I.
class PWSystem {
   public:
    PWSystem(DiscreteClock clock, int dim_r, RestLaw law);

    static PWSystem fixed(int ticks, const Matrix &rest_step);
    static PWSystem trivial(int ticks, int dim_r);

    const DiscreteClock &clock() const noexcept { return clock_; }
    int ticks() const noexcept { return clock_.ticks(); }
    int dim_r() const noexcept { return dim_r_; }
    int dim() const noexcept { return clock_.ticks() * dim_r_; }
    const RestLaw &law() const noexcept { return law_; }
    bool is_fixed() const noexcept { return std::holds_alternative<FixedLaw>(law_); }

    /// U_r for fixed laws; throws NotCyclic otherwise.
    const Matrix &rest_step() const;
    /// U_r(tau+1, tau).
    Matrix rest_step(int tau) const;
    /// U_r(tau, 0); for fixed laws U_r^tau.
    Matrix rest_propagator(int tau) const;

    /// X_n (x) U_r for fixed laws. For sequence laws the block operator
    /// sum_tau |tau+1><tau| (x) U_r(tau+1,tau), closed at the window edge by
    /// |0><window-1| (x) I so the result stays unitary.
    Matrix total_evolution() const;

   private:
    DiscreteClock clock_;
    int dim_r_;
    RestLaw law_;
};

/// Rest states psi(tau), tau = 0..n-1.
struct History {
    int dim_r = 0;
    std::vector<Vector> states;

    int ticks() const noexcept { return static_cast<int>(states.size()); }
};

/// |Psi>> = n^{-1/2} sum_tau |tau>_c |psi(tau)>_r, clock index major.
struct TimelessState {
    int ticks = 0;
    int dim_r = 0;
    Vector amplitudes;

    Vector block(int tau) const { return amplitudes.segment(static_cast<Eigen::Index>(tau) * dim_r, dim_r); }
};

History evolve_history(const PWSystem &sys, const Vector &psi0);
TimelessState assemble_timeless(const History &history);

/// || U psi - psi ||_2.
double check_stationarity(const PWSystem &sys, const TimelessState &psi);

/// Normalized rest block of psi at clock reading tau.
Vector relative_state(const TimelessState &psi, int tau);

/// E(A|tau) evaluated three ways. Construction fails with PictureMismatch if
/// they disagree by more than kPictureTol.
struct ConditionalExpectation {
    double direct = 0.0;
    double heisenberg = 0.0;
    double schrodinger = 0.0;

    double value() const noexcept { return direct; }
};

ConditionalExpectation conditional_expectation(const PWSystem &sys, const TimelessState &psi, const Matrix &a_r,
                                               int tau);
/// Density-operator form: rho on the full clock (x) rest space.
ConditionalExpectation conditional_expectation(const PWSystem &sys, const Matrix &rho, const Matrix &a_r, int tau);

/// V D V^dagger with V Haar and D holding independent uniform n-th roots of
/// unity, so the result satisfies U^n = I. Deterministic in `seed`.
Matrix sample_cyclic_unitary(int ticks, int d, std::uint64_t seed);

}  // namespace pwlab

#endif  // PWLAB_PW_HPP
