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

#ifndef PWLAB_AMBIGUITY_HPP
#define PWLAB_AMBIGUITY_HPP

#include <cstdint>
#include <vector>

#include "pwlab/linalg.hpp"
#include "pwlab/pw.hpp"
#include "pwlab/tps.hpp"

namespace pwlab {

inline constexpr double kIntertwinerTol = 1e-9;
inline constexpr double kGramSchmidtTol = 1e-8;

/// Unitary S between two PW systems with S U = U' S that also carries the
/// temporal states |tau> U_r(tau,0)|psi0> onto their primed counterparts.
struct Intertwiner {
    Matrix s;
    PWSystem source;
    PWSystem target;
    Vector source_initial;
    Vector target_initial;
    /// || S U - U' S ||_max
    double law_residual = 0.0;
    /// max_tau distance up to phase between S|Psi(tau)> and |Psi'(tau)>.
    double history_residual = 0.0;

    bool valid(double tol = kIntertwinerTol) const { return law_residual <= tol && history_residual <= tol; }
};

struct IntertwinerResiduals {
    double law = 0.0;
    double history = 0.0;
};

/// Recomputes both residuals from s, the two systems and the initial states.
IntertwinerResiduals recompute_residuals(const Intertwiner &w);

/// Unitary mapping unit vector a exactly onto unit vector b: a phase when they
/// are parallel, otherwise a reflection through a followed by a reflection
/// through the normalized bisector of a and the rephased b.
Matrix mapping_unitary(const Vector &a, const Vector &b);

/// Orthonormal basis (as columns) whose first vector is `first`, completed by
/// Gram-Schmidt against e_0, e_1, ... in order, skipping candidates whose
/// residual norm falls below kGramSchmidtTol.
Matrix complete_basis(const Vector &first);

/// Columns |tau, k> = |tau>_c U_r(tau, 0) |basis_k>, column index tau * d + k.
Matrix shift_basis(const PWSystem &sys, const Matrix &rest_basis);

struct Retargeting {
    Matrix m;
    /// eta[j * d + k] = M^dagger (|tau_j> (x) |k>).
    std::vector<Vector> eta;
    /// max_{j,k} | <eta_{j,k}|Psi>> - <tau_j, k|Psi'>> |
    double component_residual = 0.0;
};

/// Unitary M with M Psi = assemble(target). In the eta basis Psi has the
/// components the target timeless state has in the product basis.
Retargeting ai_retarget(const TimelessState &source_psi, const History &target_history);

/// Maps |tau> U_r^tau |e_k> to |tau> U_r'^tau |v_k> with e_0 = psi0 and
/// v_0 = psi0_target. Both systems need equal ticks and dim_r and fixed
/// (cyclic) laws.
Intertwiner build_intertwiner_finite(const PWSystem &source, const Vector &psi0, const PWSystem &target,
                                     const Vector &psi0_target);

/// W = sum_tau |tau><tau| (x) U_r^{-tau}, conjugating X_n (x) U_r into X_n (x) I.
/// History residual is measured from psi0 (default e_0).
Intertwiner controlled_power_trivializer(const PWSystem &sys);
Intertwiner controlled_power_trivializer(const PWSystem &sys, const Vector &psi0);

/// S = sum_tau |tau><tau| (x) U_r^tau S0 U_r^{-tau} with S0 h1[0] = h2[0]; S
/// commutes with U. The overload taking s0 uses the given rest unitary instead
/// of the two-reflection map.
Intertwiner history_intertwiner_same_law(const PWSystem &sys, const History &h1, const History &h2);
Intertwiner history_intertwiner_same_law(const PWSystem &sys, const History &h1, const History &h2, const Matrix &s0);

/// Finite-window version of the shift construction for tau-dependent laws.
/// The intertwining identity is checked on clock columns 0..window-2; the
/// wrap-around column window-1 is reported on its own.
struct WindowedIntertwiner {
    int window = 0;
    Matrix s;
    Matrix source_evolution;
    Matrix target_evolution;
    double interior_residual = 0.0;
    double boundary_residual = 0.0;
    double history_residual = 0.0;
};

WindowedIntertwiner windowed_shift_intertwiner(const std::vector<Matrix> &source_steps,
                                               const std::vector<Matrix> &target_steps, int window,
                                               const Vector &psi0, const Vector &psi0_target);

struct WashingTrial {
    std::uint64_t seed = 0;
    SpectrumMultiset rest;
    SpectrumMultiset total;
    bool pass = false;
};

struct SpectralWashingReport {
    int ticks = 0;
    int dim_r = 0;
    std::uint64_t seed = 0;
    /// n-th roots of unity, each with multiplicity dim_r.
    SpectrumMultiset expected;
    std::vector<WashingTrial> trials;
    bool all_pass = false;
    bool rest_spectra_differ = false;
};

/// Trial i samples U_r with seed + i and compares sigma(X_n (x) U_r) to `expected`.
SpectralWashingReport spectral_washing_report(int ticks, int dim_r, int trials, std::uint64_t seed);

/// Rest system = recorder (x) environment; labeling[m] is the environment
/// value named by recorder value m.
struct RecordsScenario {
    DiscreteClock clock{1};
    int record_dim = 0;
    int env_dim = 0;
    std::vector<int> labeling;

    RecordsScenario(DiscreteClock clock, int record_dim, int env_dim, std::vector<int> labeling);
    /// record_dim = env_dim = values, labeling = identity.
    static RecordsScenario aligned(int ticks, int values);
    int dim_r() const noexcept { return record_dim * env_dim; }
};

/// |<env[labeling(record)] | env state relative to clock 0 and recorder = record>|^2
/// for psi decoded in tps.
double record_validity(const RecordsScenario &scenario, const TimelessState &psi, const Tps &tps, int record_value);

struct RecordsReport {
    int record_value = 0;
    int true_env_value = 0;
    int retarget_env_value = 0;
    double validity_before = 0.0;
    double validity_after = 0.0;
    /// max | A - I | for the clock (x) recorder factor of S, infinite if S is not local in that split.
    double recorder_identity_residual = 0.0;
    Intertwiner intertwiner;
    Tps retargeted;
};

/// Builds the constant history |record>_m |true_env>_e, then retargets the
/// environment to (true_env + 1) mod env_dim with S0 = I_m (x) R_e and rereads
/// the same global state in the pulled-back TPS.
RecordsReport records_experiment(const RecordsScenario &scenario, int record_value, int true_env_value);

}  // namespace pwlab

#endif  // PWLAB_AMBIGUITY_HPP
