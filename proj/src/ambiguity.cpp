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

#include "pwlab/ambiguity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace pwlab {

namespace {

Vector basis_vector(Eigen::Index dim, Eigen::Index index) {
    Vector v = Vector::Zero(dim);
    v(index) = 1.0;
    return v;
}

Vector temporal_state(const PWSystem &sys, int tau, const Vector &psi0) {
    return kron(basis_vector(sys.ticks(), tau), sys.rest_propagator(tau) * psi0);
}

double history_residual(const Matrix &s, const PWSystem &source, const Vector &psi0, const PWSystem &target,
                        const Vector &psi0_target) {
    double worst = 0.0;
    for (int tau = 0; tau < source.ticks(); ++tau) {
        const Vector mapped = s * temporal_state(source, tau, psi0);
        worst = std::max(worst, phase_distance(mapped, temporal_state(target, tau, psi0_target)));
    }
    return worst;
}

Intertwiner make_intertwiner(Matrix s, const PWSystem &source, const PWSystem &target, const Vector &psi0,
                             const Vector &psi0_target) {
    Intertwiner w{std::move(s), source, target, psi0, psi0_target, 0.0, 0.0};
    const IntertwinerResiduals r = recompute_residuals(w);
    w.law_residual = r.law;
    w.history_residual = r.history;
    return w;
}

void require_unit(const Vector &v, Eigen::Index dim, const char *what) {
    if (v.size() != dim) throw Error(ErrorKind::IncompatibleDimensions, std::string(what) + " has the wrong dimension");
    if (std::abs(v.norm() - 1.0) > kNormTol) throw Error(ErrorKind::NotNormalized, std::string(what) + " is not a unit vector");
}

}  // namespace

IntertwinerResiduals recompute_residuals(const Intertwiner &w) {
    const Matrix u = w.source.total_evolution();
    const Matrix up = w.target.total_evolution();
    IntertwinerResiduals r;
    r.law = max_abs(w.s * u - up * w.s);
    r.history = history_residual(w.s, w.source, w.source_initial, w.target, w.target_initial);
    return r;
}

Matrix mapping_unitary(const Vector &a, const Vector &b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "mapping_unitary on vectors of different size");
    const Eigen::Index d = a.size();
    const Matrix id = Matrix::Identity(d, d);
    const Complex overlap = a.dot(b);  // <a|b>
    const double mag = std::abs(overlap);
    if (std::abs(mag - 1.0) <= 1e-14) {
        const Complex phase = overlap / mag;
        return id + (phase - 1.0) * a * a.adjoint();
    }
    const Complex phase = mag > 0.0 ? overlap / mag : Complex(1.0);
    const Vector b_real = b / phase;  // <a|b_real> is real and non-negative
    Vector bisector = a + b_real;
    bisector.normalize();
    const Matrix reflect_a = id - 2.0 * a * a.adjoint();
    const Matrix reflect_bisector = id - 2.0 * bisector * bisector.adjoint();
    return phase * reflect_bisector * reflect_a;
}

Matrix complete_basis(const Vector &first) {
    const Eigen::Index d = first.size();
    const double norm = first.norm();
    if (d < 1 || norm < kGramSchmidtTol) throw Error(ErrorKind::InvalidArgument, "cannot complete a basis from a zero vector");
    Matrix basis(d, d);
    basis.col(0) = first / norm;
    Eigen::Index filled = 1;
    for (Eigen::Index i = 0; i < d && filled < d; ++i) {
        Vector candidate = basis_vector(d, i);
        // Two passes of modified Gram-Schmidt.
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index k = 0; k < filled; ++k) candidate -= basis.col(k).dot(candidate) * basis.col(k);
        const double r = candidate.norm();
        if (r < kGramSchmidtTol) continue;
        basis.col(filled++) = candidate / r;
    }
    return basis;
}

Matrix shift_basis(const PWSystem &sys, const Matrix &rest_basis) {
    const int n = sys.ticks();
    const int d = sys.dim_r();
    Matrix out(sys.dim(), sys.dim());
    for (int tau = 0; tau < n; ++tau) {
        const Matrix evolved = sys.rest_propagator(tau) * rest_basis;
        for (int k = 0; k < d; ++k) out.col(static_cast<Eigen::Index>(tau) * d + k) = kron(basis_vector(n, tau), evolved.col(k));
    }
    return out;
}

Retargeting ai_retarget(const TimelessState &source_psi, const History &target_history) {
    const TimelessState target = assemble_timeless(target_history);
    if (target.amplitudes.size() != source_psi.amplitudes.size() || target.ticks != source_psi.ticks ||
        target.dim_r != source_psi.dim_r) {
        throw Error(ErrorKind::DimensionMismatch, "source state and target history have different shapes");
    }
    if (std::abs(source_psi.amplitudes.norm() - 1.0) > kNormTol || std::abs(target.amplitudes.norm() - 1.0) > kNormTol) {
        throw Error(ErrorKind::NotNormalized, "retargeting needs unit states");
    }
    Retargeting out;
    out.m = mapping_unitary(source_psi.amplitudes, target.amplitudes);
    const Matrix m_dag = out.m.adjoint();
    const Eigen::Index dim = m_dag.cols();
    out.eta.reserve(static_cast<std::size_t>(dim));
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
        out.eta.push_back(m_dag.col(idx));
        const Complex component = out.eta.back().dot(source_psi.amplitudes);
        out.component_residual = std::max(out.component_residual, std::abs(component - target.amplitudes(idx)));
    }
    return out;
}

Intertwiner build_intertwiner_finite(const PWSystem &source, const Vector &psi0, const PWSystem &target,
                                     const Vector &psi0_target) {
    if (source.ticks() != target.ticks() || source.dim_r() != target.dim_r()) {
        throw Error(ErrorKind::IncompatibleDimensions, "systems differ in clock ticks or rest dimension");
    }
    if (!source.is_fixed() || !target.is_fixed()) throw Error(ErrorKind::NotCyclic, "finite construction needs cyclic laws");
    require_unit(psi0, source.dim_r(), "source initial state");
    require_unit(psi0_target, target.dim_r(), "target initial state");
    const Matrix from = shift_basis(source, complete_basis(psi0));
    const Matrix to = shift_basis(target, complete_basis(psi0_target));
    return make_intertwiner(to * from.adjoint(), source, target, psi0, psi0_target);
}

Intertwiner controlled_power_trivializer(const PWSystem &sys) {
    return controlled_power_trivializer(sys, basis_vector(sys.dim_r(), 0));
}

Intertwiner controlled_power_trivializer(const PWSystem &sys, const Vector &psi0) {
    if (!sys.is_fixed()) throw Error(ErrorKind::NotCyclic, "trivializer needs a cyclic law");
    require_unit(psi0, sys.dim_r(), "initial state");
    const int n = sys.ticks();
    const int d = sys.dim_r();
    Matrix w = Matrix::Zero(sys.dim(), sys.dim());
    for (int tau = 0; tau < n; ++tau) w.block(tau * d, tau * d, d, d) = unitary_power(sys.rest_step(), -tau);
    return make_intertwiner(std::move(w), sys, PWSystem::trivial(n, d), psi0, psi0);
}

namespace {

void require_history(const PWSystem &sys, const History &h) {
    if (h.ticks() != sys.ticks() || h.dim_r != sys.dim_r()) throw Error(ErrorKind::InvalidHistory, "history shape does not match system");
    for (int tau = 0; tau < h.ticks(); ++tau) {
        const Vector &s = h.states[static_cast<std::size_t>(tau)];
        if (s.size() != sys.dim_r() || std::abs(s.norm() - 1.0) > kNormTol) {
            throw Error(ErrorKind::InvalidHistory, "history state " + std::to_string(tau) + " is not a unit rest vector");
        }
        const int next = (tau + 1) % sys.ticks();
        const Vector stepped = sys.rest_step() * s;
        if ((stepped - h.states[static_cast<std::size_t>(next)]).norm() > kNormTol) {
            throw Error(ErrorKind::InvalidHistory, "history does not follow the system law at tau = " + std::to_string(tau));
        }
    }
}

}  // namespace

Intertwiner history_intertwiner_same_law(const PWSystem &sys, const History &h1, const History &h2) {
    if (!sys.is_fixed()) throw Error(ErrorKind::NotCyclic, "same-law intertwiner needs a cyclic law");
    require_history(sys, h1);
    require_history(sys, h2);
    return history_intertwiner_same_law(sys, h1, h2, mapping_unitary(h1.states.front(), h2.states.front()));
}

Intertwiner history_intertwiner_same_law(const PWSystem &sys, const History &h1, const History &h2, const Matrix &s0) {
    if (!sys.is_fixed()) throw Error(ErrorKind::NotCyclic, "same-law intertwiner needs a cyclic law");
    require_history(sys, h1);
    require_history(sys, h2);
    const int d = sys.dim_r();
    if (s0.rows() != d || s0.cols() != d) throw Error(ErrorKind::DimensionMismatch, "s0 does not match dim_r");
    if (!is_unitary(s0)) throw Error(ErrorKind::NotUnitary, "s0 is not unitary");
    Matrix s = Matrix::Zero(sys.dim(), sys.dim());
    for (int tau = 0; tau < sys.ticks(); ++tau) {
        const Matrix u_tau = sys.rest_propagator(tau);
        s.block(tau * d, tau * d, d, d) = u_tau * s0 * u_tau.adjoint();
    }
    return make_intertwiner(std::move(s), sys, sys, h1.states.front(), h2.states.front());
}

WindowedIntertwiner windowed_shift_intertwiner(const std::vector<Matrix> &source_steps,
                                               const std::vector<Matrix> &target_steps, int window,
                                               const Vector &psi0, const Vector &psi0_target) {
    if (window < 2) throw Error(ErrorKind::LengthMismatch, "window must be at least 2");
    const auto expected = static_cast<std::size_t>(window - 1);
    if (source_steps.size() != expected || target_steps.size() != expected) {
        throw Error(ErrorKind::LengthMismatch, "step lists must have window - 1 entries");
    }
    const int d = static_cast<int>(source_steps.front().rows());
    if (target_steps.front().rows() != d) throw Error(ErrorKind::IncompatibleDimensions, "rest dimensions differ");
    const PWSystem source(DiscreteClock(window), d, SequenceLaw{source_steps});
    const PWSystem target(DiscreteClock(window), d, SequenceLaw{target_steps});
    require_unit(psi0, d, "source initial state");
    require_unit(psi0_target, d, "target initial state");

    WindowedIntertwiner out;
    out.window = window;
    out.s = shift_basis(target, complete_basis(psi0_target)) * shift_basis(source, complete_basis(psi0)).adjoint();
    out.source_evolution = source.total_evolution();
    out.target_evolution = target.total_evolution();
    const Matrix defect = out.s * out.source_evolution - out.target_evolution * out.s;
    const Eigen::Index interior = static_cast<Eigen::Index>(window - 1) * d;
    out.interior_residual = max_abs(defect.leftCols(interior));
    out.boundary_residual = max_abs(defect.rightCols(d));
    out.history_residual = history_residual(out.s, source, psi0, target, psi0_target);
    return out;
}

SpectralWashingReport spectral_washing_report(int ticks, int dim_r, int trials, std::uint64_t seed) {
    if (trials < 1) throw Error(ErrorKind::InvalidArgument, "need at least one trial");
    const DiscreteClock clock(ticks);
    SpectralWashingReport report;
    report.ticks = ticks;
    report.dim_r = dim_r;
    report.seed = seed;
    std::vector<Complex> roots;
    for (int j = 0; j < ticks; ++j) roots.insert(roots.end(), static_cast<std::size_t>(dim_r), clock.root(j));
    report.expected = cluster_eigenvalues(roots);

    const Matrix x = shift_op(clock);
    report.all_pass = true;
    for (int t = 0; t < trials; ++t) {
        WashingTrial trial;
        trial.seed = seed + static_cast<std::uint64_t>(t);
        const Matrix u_r = sample_cyclic_unitary(ticks, dim_r, trial.seed);
        trial.rest = spectrum_unitary(u_r);
        trial.total = spectrum_unitary(kron(x, u_r));
        trial.pass = spectra_equal(trial.total, report.expected, kClusterTol);
        report.all_pass = report.all_pass && trial.pass;
        report.trials.push_back(std::move(trial));
    }
    for (std::size_t i = 0; i < report.trials.size() && !report.rest_spectra_differ; ++i)
        for (std::size_t j = i + 1; j < report.trials.size(); ++j)
            if (!spectra_equal(report.trials[i].rest, report.trials[j].rest, kClusterTol)) {
                report.rest_spectra_differ = true;
                break;
            }
    return report;
}

RecordsScenario::RecordsScenario(DiscreteClock clock_, int record_dim_, int env_dim_, std::vector<int> labeling_)
    : clock(clock_), record_dim(record_dim_), env_dim(env_dim_), labeling(std::move(labeling_)) {
    if (record_dim < 1 || env_dim < 1) throw Error(ErrorKind::BadDimension, "record and environment dimensions must be positive");
    if (record_dim != env_dim) throw Error(ErrorKind::IncompatibleDimensions, "each record value must name one environment value");
    if (labeling.size() != static_cast<std::size_t>(record_dim)) throw Error(ErrorKind::LengthMismatch, "labeling size");
    std::vector<bool> hit(static_cast<std::size_t>(env_dim), false);
    for (int e : labeling) {
        if (e < 0 || e >= env_dim || hit[static_cast<std::size_t>(e)]) {
            throw Error(ErrorKind::InvalidArgument, "labeling is not a bijection");
        }
        hit[static_cast<std::size_t>(e)] = true;
    }
}

RecordsScenario RecordsScenario::aligned(int ticks, int values) {
    std::vector<int> labels(static_cast<std::size_t>(std::max(values, 0)));
    for (int i = 0; i < values; ++i) labels[static_cast<std::size_t>(i)] = i;
    return RecordsScenario(DiscreteClock(ticks), values, values, std::move(labels));
}

double record_validity(const RecordsScenario &scenario, const TimelessState &psi, const Tps &tps, int record_value) {
    if (record_value < 0 || record_value >= scenario.record_dim) throw Error(ErrorKind::IndexOutOfRange, "record value");
    const Matrix table = extract_wavefunction(psi, tps);
    if (table.cols() != scenario.dim_r()) throw Error(ErrorKind::DimensionMismatch, "TPS rest factor is not recorder x environment");
    const Vector env = table.row(0).transpose().segment(static_cast<Eigen::Index>(record_value) * scenario.env_dim,
                                                         scenario.env_dim);
    const double norm = env.norm();
    if (norm < kZeroBlockTol) throw Error(ErrorKind::ZeroConditionalBlock, "recorder value never occurs at clock 0");
    const int named = scenario.labeling[static_cast<std::size_t>(record_value)];
    return std::norm(env(named) / norm);
}

RecordsReport records_experiment(const RecordsScenario &scenario, int record_value, int true_env_value) {
    if (record_value < 0 || record_value >= scenario.record_dim) throw Error(ErrorKind::IndexOutOfRange, "record value");
    if (true_env_value < 0 || true_env_value >= scenario.env_dim) throw Error(ErrorKind::IndexOutOfRange, "environment value");
    const int n = scenario.clock.ticks();
    const int m = scenario.record_dim;
    const int e = scenario.env_dim;
    const PWSystem sys = PWSystem::trivial(n, scenario.dim_r());
    const int retarget = (true_env_value + 1) % e;

    const Vector recorder = basis_vector(m, record_value);
    const History actual = evolve_history(sys, kron(recorder, basis_vector(e, true_env_value)));
    const History decoded = evolve_history(sys, kron(recorder, basis_vector(e, retarget)));
    const TimelessState psi = assemble_timeless(actual);
    const Tps reference = Tps::identity(n, scenario.dim_r());

    const Matrix env_map = mapping_unitary(basis_vector(e, true_env_value), basis_vector(e, retarget));
    Intertwiner w = history_intertwiner_same_law(sys, actual, decoded, kron(Matrix::Identity(m, m), env_map));
    Tps retargeted = pullback_tps(reference, w.s);

    double recorder_residual = std::numeric_limits<double>::infinity();
    if (auto split = product_factors(w.s, n * m, e)) {
        recorder_residual = max_abs(split->left - Matrix::Identity(n * m, n * m));
    }
    return RecordsReport{record_value,
                         true_env_value,
                         retarget,
                         record_validity(scenario, psi, reference, record_value),
                         record_validity(scenario, psi, retargeted, record_value),
                         recorder_residual,
                         std::move(w),
                         std::move(retargeted)};
}

}  // namespace pwlab
