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

#include <doctest.h>

#include <cmath>
#include <functional>

#include "pwlab/ambiguity.hpp"
#include "pwlab/clock.hpp"
#include "pwlab/random.hpp"

using namespace pwlab;

namespace {

Matrix eye(Eigen::Index d) { return Matrix::Identity(d, d); }
Matrix sigma_x() { return shift_op(DiscreteClock(2)); }

Vector ket(Eigen::Index dim, Eigen::Index i) {
    Vector v = Vector::Zero(dim);
    v(i) = 1.0;
    return v;
}

Matrix controlled_not() {
    Matrix m = Matrix::Zero(4, 4);
    m.block(0, 0, 2, 2) = eye(2);
    m.block(2, 2, 2, 2) = sigma_x();
    return m;
}

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
}

// Smallest || a - e^{i phi} b || over phi, by scanning and refining phi.
double scanned_phase_distance(const Vector &a, const Vector &b) {
    double best = 1e300, best_phi = 0.0;
    for (int k = 0; k < 720; ++k) {
        const double phi = 2.0 * M_PI * k / 720.0;
        const double d = (a - std::polar(1.0, phi) * b).norm();
        if (d < best) best = d, best_phi = phi;
    }
    double lo = best_phi - 0.01, hi = best_phi + 0.01;
    for (int it = 0; it < 200; ++it) {
        const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        if ((a - std::polar(1.0, m1) * b).norm() < (a - std::polar(1.0, m2) * b).norm())
            hi = m2;
        else
            lo = m1;
    }
    return std::min(best, (a - std::polar(1.0, lo) * b).norm());
}

// Independent residuals: builds U from explicit sums and the history vector by vector.
IntertwinerResiduals oracle_residuals(const Intertwiner &w) {
    const auto evolution = [](const PWSystem &sys) {
        const int n = sys.ticks();
        Matrix u = Matrix::Zero(sys.dim(), sys.dim());
        for (int tau = 0; tau < n; ++tau)
            u.block(((tau + 1) % n) * sys.dim_r(), tau * sys.dim_r(), sys.dim_r(), sys.dim_r()) = sys.rest_step();
        return u;
    };
    IntertwinerResiduals r;
    r.law = (w.s * evolution(w.source) - evolution(w.target) * w.s).cwiseAbs().maxCoeff();
    Vector a = w.source_initial, b = w.target_initial;
    for (int tau = 0; tau < w.source.ticks(); ++tau) {
        r.history = std::max(r.history, scanned_phase_distance(w.s * kron(ket(w.source.ticks(), tau), a),
                                                               kron(ket(w.target.ticks(), tau), b)));
        a = w.source.rest_step() * a;
        b = w.target.rest_step() * b;
    }
    return r;
}

}  // namespace

TEST_CASE("mapping_unitary") {
    Rng rng(1);
    for (int d : {1, 2, 3, 5, 8}) {
        for (int trial = 0; trial < 10; ++trial) {
            const Vector a = random_unit_vector(d, rng), b = random_unit_vector(d, rng);
            const Matrix m = mapping_unitary(a, b);
            CHECK(is_unitary(m, 1e-12));
            CHECK((m * a - b).norm() < 1e-12);
        }
        const Vector a = random_unit_vector(d, rng);
        CHECK(max_abs(mapping_unitary(a, a) - eye(d)) < 1e-14);
        const Complex phase = std::polar(1.0, 0.7);
        CHECK((mapping_unitary(a, phase * a) * a - phase * a).norm() < 1e-14);
    }
    // Orthogonal inputs.
    CHECK((mapping_unitary(ket(2, 0), ket(2, 1)) * ket(2, 0) - ket(2, 1)).norm() < 1e-15);
    CHECK(kind_of([] { mapping_unitary(ket(2, 0), ket(3, 0)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("complete_basis") {
    Rng rng(2);
    for (int d : {1, 2, 4, 7}) {
        const Vector v = random_unit_vector(d, rng);
        const Matrix b = complete_basis(v);
        CHECK(is_unitary(b, 1e-12));
        CHECK((b.col(0) - v).norm() < 1e-15);
    }
    // First vector parallel to a standard basis vector.
    const Matrix b = complete_basis(ket(3, 2));
    CHECK(is_unitary(b, 1e-14));
    CHECK(kind_of([] { complete_basis(Vector::Zero(3)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("ai_retarget") {
    const PWSystem example = PWSystem::fixed(2, sigma_x());
    const TimelessState psi = assemble_timeless(evolve_history(example, ket(2, 1)));

    // Same source and target: nothing to do.
    const Retargeting same = ai_retarget(psi, evolve_history(example, ket(2, 1)));
    CHECK(max_abs(same.m - eye(4)) < 1e-14);
    CHECK(same.component_residual < 1e-14);

    // Retarget the swinging history to a constant one.
    const History constant{2, {ket(2, 1), ket(2, 1)}};
    const Retargeting r = ai_retarget(psi, constant);
    const double h = 1.0 / std::sqrt(2.0);
    Vector components(4);
    components << 0, h, 0, h;
    REQUIRE(r.eta.size() == 4);
    for (int idx = 0; idx < 4; ++idx) CHECK(std::abs(r.eta[idx].dot(psi.amplitudes) - components(idx)) < 1e-14);
    CHECK((r.m * psi.amplitudes - components).norm() < 1e-14);
    CHECK(is_unitary(r.m, 1e-12));
    // The eta vectors form an orthonormal basis.
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(std::abs(r.eta[i].dot(r.eta[j]) - (i == j ? 1.0 : 0.0)) < 1e-14);

    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        History src{3, {}}, dst{3, {}};
        for (int tau = 0; tau < 4; ++tau) {
            src.states.push_back(random_unit_vector(3, rng));
            dst.states.push_back(random_unit_vector(3, rng));
        }
        const Retargeting rr = ai_retarget(assemble_timeless(src), dst);
        CHECK(rr.component_residual <= 1e-10);
        CHECK((rr.m * assemble_timeless(src).amplitudes - assemble_timeless(dst).amplitudes).norm() <= 1e-10);
    }
    CHECK(kind_of([&] { ai_retarget(psi, History{3, {ket(3, 0), ket(3, 0)}}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("build_intertwiner_finite on the two-qubit example is a controlled NOT") {
    const PWSystem source = PWSystem::fixed(2, sigma_x());
    const PWSystem target = PWSystem::trivial(2, 2);
    const Intertwiner w = build_intertwiner_finite(source, ket(2, 1), target, ket(2, 1));
    // |0,1> -> |0,1>, |0,0> -> |0,0>, |1,0> -> |1,1>, |1,1> -> |1,0>.
    CHECK((w.s * kron(ket(2, 0), ket(2, 1)) - kron(ket(2, 0), ket(2, 1))).norm() < 1e-15);
    CHECK((w.s * kron(ket(2, 0), ket(2, 0)) - kron(ket(2, 0), ket(2, 0))).norm() < 1e-15);
    CHECK((w.s * kron(ket(2, 1), ket(2, 0)) - kron(ket(2, 1), ket(2, 1))).norm() < 1e-15);
    CHECK((w.s * kron(ket(2, 1), ket(2, 1)) - kron(ket(2, 1), ket(2, 0))).norm() < 1e-15);
    CHECK(max_abs(w.s - controlled_not()) < 1e-15);
    CHECK(w.valid());

    // Spectra agree: both total laws have eigenvalues {+1, +1, -1, -1}.
    CHECK(spectra_equal(spectrum_unitary(source.total_evolution()), spectrum_unitary(target.total_evolution()), 1e-10));
}

TEST_CASE("build_intertwiner_finite on random cyclic laws") {
    Rng rng(4);
    const PWSystem sys = PWSystem::fixed(3, sample_cyclic_unitary(3, 2, 11));
    const Vector v = random_unit_vector(2, rng);
    CHECK(max_abs(build_intertwiner_finite(sys, v, sys, v).s - eye(6)) < 1e-12);

    for (auto [n, d] : {std::pair{2, 2}, {3, 3}, {4, 3}, {5, 2}, {8, 6}}) {
        for (int trial = 0; trial < 5; ++trial) {
            const PWSystem source = PWSystem::fixed(n, sample_cyclic_unitary(n, d, 100 + trial));
            const PWSystem target = PWSystem::fixed(n, sample_cyclic_unitary(n, d, 200 + trial));
            const Intertwiner w =
                build_intertwiner_finite(source, random_unit_vector(d, rng), target, random_unit_vector(d, rng));
            CHECK(is_unitary(w.s, 1e-10));
            CHECK(w.law_residual <= 1e-10);
            CHECK(w.history_residual <= 1e-10);
            const IntertwinerResiduals oracle = oracle_residuals(w);
            CHECK(oracle.law <= 1e-10);
            CHECK(oracle.history <= 1e-8);
            const IntertwinerResiduals again = recompute_residuals(w);
            CHECK(again.law == doctest::Approx(w.law_residual));
            CHECK(again.history == doctest::Approx(w.history_residual));
        }
    }

    const PWSystem a = PWSystem::fixed(2, sigma_x());
    CHECK(kind_of([&] { build_intertwiner_finite(a, ket(2, 0), PWSystem::trivial(3, 2), ket(2, 0)); }) ==
          ErrorKind::IncompatibleDimensions);
    const PWSystem windowed(DiscreteClock(2), 2, SequenceLaw{{sigma_x()}});
    CHECK(kind_of([&] { build_intertwiner_finite(windowed, ket(2, 0), a, ket(2, 0)); }) == ErrorKind::NotCyclic);
    CHECK(kind_of([&] { build_intertwiner_finite(a, 2.0 * ket(2, 0), a, ket(2, 0)); }) == ErrorKind::NotNormalized);
}

TEST_CASE("recompute_residuals sees a broken intertwiner") {
    const PWSystem source = PWSystem::fixed(2, sigma_x());
    Intertwiner w = build_intertwiner_finite(source, ket(2, 1), PWSystem::trivial(2, 2), ket(2, 1));
    w.s = eye(4);
    const IntertwinerResiduals r = recompute_residuals(w);
    const IntertwinerResiduals oracle = oracle_residuals(w);
    CHECK(r.law == doctest::Approx(oracle.law));
    CHECK(r.history == doctest::Approx(oracle.history).epsilon(1e-6));
    CHECK(r.law == doctest::Approx(1.0));
    CHECK(r.history == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("controlled_power_trivializer") {
    const Intertwiner ex = controlled_power_trivializer(PWSystem::fixed(2, sigma_x()));
    CHECK(max_abs(ex.s - controlled_not()) < 1e-15);
    CHECK(ex.target.is_fixed());
    CHECK(max_abs(ex.target.rest_step() - eye(2)) == 0.0);

    CHECK(max_abs(controlled_power_trivializer(PWSystem::trivial(4, 3)).s - eye(12)) == 0.0);

    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const PWSystem sys = PWSystem::fixed(6, sample_cyclic_unitary(6, 2, 300 + trial));
        const Intertwiner w = controlled_power_trivializer(sys, random_unit_vector(2, rng));
        const Matrix clock_only = kron(shift_op(DiscreteClock(6)), eye(2));
        CHECK(max_abs(w.s * sys.total_evolution() * w.s.adjoint() - clock_only) <= 1e-10);
        CHECK(w.valid(1e-10));
        // Block diagonal in the clock readings.
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                if (a != b) CHECK(w.s.block(a * 2, b * 2, 2, 2).norm() == 0.0);
        CHECK(oracle_residuals(w).law <= 1e-10);
    }
    const PWSystem windowed(DiscreteClock(2), 2, SequenceLaw{{sigma_x()}});
    CHECK(kind_of([&] { controlled_power_trivializer(windowed); }) == ErrorKind::NotCyclic);
}

TEST_CASE("trivializers factor the direct intertwiner through a local rest map") {
    Rng rng(6);
    for (auto [n, d] : {std::pair{2, 2}, {3, 2}, {4, 3}}) {
        const PWSystem source = PWSystem::fixed(n, sample_cyclic_unitary(n, d, 400 + n));
        const PWSystem target = PWSystem::fixed(n, sample_cyclic_unitary(n, d, 500 + n));
        const Vector a = random_unit_vector(d, rng), b = random_unit_vector(d, rng);
        const Matrix s = build_intertwiner_finite(source, a, target, b).s;
        const Matrix w = controlled_power_trivializer(source, a).s;
        const Matrix wp = controlled_power_trivializer(target, b).s;
        const Matrix between = wp * s * w.adjoint();
        const auto f = product_factors(between, n, d);
        REQUIRE(f.has_value());
        CHECK(max_abs(f->left - eye(n)) <= 1e-10);
        CHECK(max_abs(kron(f->left, f->right) - between) <= 1e-10);
        // The rest factor carries a to b.
        CHECK(phase_distance(f->right * a, b) <= 1e-10);
    }
}

TEST_CASE("history_intertwiner_same_law") {
    const PWSystem ex = PWSystem::fixed(2, sigma_x());
    const History h0 = evolve_history(ex, ket(2, 0));
    const History h1 = evolve_history(ex, ket(2, 1));
    CHECK(max_abs(history_intertwiner_same_law(ex, h0, h0).s - eye(4)) < 1e-14);

    const Intertwiner w = history_intertwiner_same_law(ex, h0, h1);
    CHECK(w.valid(1e-12));
    CHECK((w.s * assemble_timeless(h0).amplitudes - assemble_timeless(h1).amplitudes).norm() < 1e-12);
    // The law is untouched: S commutes with U.
    CHECK(max_abs(w.s * ex.total_evolution() - ex.total_evolution() * w.s) < 1e-14);

    Rng rng(7);
    const PWSystem sys = PWSystem::fixed(3, sample_cyclic_unitary(3, 3, 77));
    for (int trial = 0; trial < 5; ++trial) {
        const History a = evolve_history(sys, random_unit_vector(3, rng));
        const History b = evolve_history(sys, random_unit_vector(3, rng));
        const Intertwiner v = history_intertwiner_same_law(sys, a, b);
        CHECK(v.law_residual <= 1e-10);
        CHECK(v.history_residual <= 1e-10);
        for (int tau = 0; tau < 3; ++tau)
            CHECK((v.s.block(tau * 3, tau * 3, 3, 3) * a.states[tau] - b.states[tau]).norm() <= 1e-10);
        const Matrix g = haar_unitary(3, rng);
        // Any rest unitary seeds a law-preserving map; only one carrying a0 to b0 maps the history.
        const Intertwiner arbitrary = history_intertwiner_same_law(sys, a, b, g);
        CHECK(arbitrary.law_residual <= 1e-10);
        CHECK(arbitrary.history_residual == doctest::Approx(phase_distance(g * a.states[0], b.states[0])).epsilon(1e-6));
    }

    const History off{2, {ket(2, 0), ket(2, 0)}};
    CHECK(kind_of([&] { history_intertwiner_same_law(ex, off, h1); }) == ErrorKind::InvalidHistory);
    CHECK(kind_of([&] { history_intertwiner_same_law(ex, History{2, {ket(2, 0)}}, h1); }) == ErrorKind::InvalidHistory);
    CHECK(kind_of([&] { history_intertwiner_same_law(ex, h0, h1, 2.0 * eye(2)); }) == ErrorKind::NotUnitary);
}

TEST_CASE("windowed_shift_intertwiner") {
    Rng rng(8);
    const Vector v = random_unit_vector(2, rng);
    const WindowedIntertwiner id = windowed_shift_intertwiner({eye(2), eye(2), eye(2)}, {eye(2), eye(2), eye(2)}, 4, v, v);
    CHECK(max_abs(id.s - eye(8)) < 1e-14);
    CHECK(id.interior_residual < 1e-14);
    CHECK(id.boundary_residual < 1e-14);

    // Constant steps of a cyclic law reproduce the finite construction.
    const Matrix u = sample_cyclic_unitary(4, 2, 9);
    const Matrix up = sample_cyclic_unitary(4, 2, 10);
    const Vector a = random_unit_vector(2, rng), b = random_unit_vector(2, rng);
    const WindowedIntertwiner same = windowed_shift_intertwiner({u, u, u}, {up, up, up}, 4, a, b);
    const Intertwiner finite = build_intertwiner_finite(PWSystem::fixed(4, u), a, PWSystem::fixed(4, up), b);
    CHECK(max_abs(same.s - finite.s) <= 1e-12);
    CHECK(same.interior_residual <= 1e-10);

    // Window of 8 with arbitrary steps.
    std::vector<Matrix> src, dst;
    for (int t = 0; t < 7; ++t) {
        src.push_back(haar_unitary(2, rng));
        dst.push_back(haar_unitary(2, rng));
    }
    const WindowedIntertwiner w = windowed_shift_intertwiner(src, dst, 8, a, b);
    CHECK(is_unitary(w.s, 1e-10));
    CHECK(w.interior_residual <= 1e-10);
    CHECK(w.history_residual <= 1e-10);
    CHECK(is_unitary(w.source_evolution, 1e-12));
    // Interior columns by hand: S U (|t> (x) e_k) = U' S (|t> (x) e_k) for t < 7.
    for (int t = 0; t < 7; ++t)
        for (int k = 0; k < 2; ++k) {
            const Vector col = kron(ket(8, t), ket(2, k));
            const Vector lhs = w.s * kron(ket(8, t + 1), src[t] * ket(2, k));
            const Vector rhs = w.target_evolution * (w.s * col);
            CHECK((lhs - rhs).norm() <= 1e-10);
        }

    CHECK(kind_of([&] { windowed_shift_intertwiner(src, dst, 7, a, b); }) == ErrorKind::LengthMismatch);
    CHECK(kind_of([&] { windowed_shift_intertwiner({}, {}, 1, a, b); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("spectral washing") {
    const SpectralWashingReport two = spectral_washing_report(2, 2, 5, 1);
    CHECK(two.all_pass);
    CHECK(two.expected.values.size() == 2);
    CHECK(two.expected.dimension() == 4);
    for (int m : two.expected.multiplicities) CHECK(m == 2);

    const SpectralWashingReport one = spectral_washing_report(3, 1, 3, 2);
    CHECK(one.all_pass);
    CHECK(one.expected.dimension() == 3);

    const SpectralWashingReport big = spectral_washing_report(4, 3, 20, 3);
    CHECK(big.all_pass);
    CHECK(big.rest_spectra_differ);
    CHECK(big.trials.size() == 20);
    // Oracle: total spectrum of X (x) U_r computed by brute-force eigenvalue of a
    // freshly built block matrix, compared against the roots of unity.
    for (const auto &trial : big.trials) {
        const Matrix u_r = sample_cyclic_unitary(4, 3, trial.seed);
        Matrix blocks = Matrix::Zero(12, 12);
        for (int tau = 0; tau < 4; ++tau) blocks.block(((tau + 1) % 4) * 3, tau * 3, 3, 3) = u_r;
        const Eigen::ComplexEigenSolver<Matrix> es(blocks);
        for (Eigen::Index i = 0; i < 12; ++i) {
            const Complex z = es.eigenvalues()(i);
            CHECK(std::abs(std::pow(z, 4) - Complex(1.0)) <= 1e-9);
        }
    }
    CHECK(kind_of([] { spectral_washing_report(2, 2, 0, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("records retargeting") {
    const RecordsScenario colours = RecordsScenario::aligned(2, 2);
    const RecordsReport red_red = records_experiment(colours, 0, 0);
    CHECK(red_red.validity_before == doctest::Approx(1.0));
    CHECK(red_red.validity_after == doctest::Approx(0.0));
    CHECK(red_red.retarget_env_value == 1);
    CHECK(red_red.recorder_identity_residual <= 1e-12);
    CHECK(red_red.intertwiner.valid());

    const RecordsReport red_blue = records_experiment(colours, 0, 1);
    CHECK(red_blue.validity_before == doctest::Approx(0.0));
    CHECK(red_blue.validity_after == doctest::Approx(1.0));

    const RecordsScenario three = RecordsScenario::aligned(3, 3);
    for (int r = 0; r < 3; ++r) {
        const RecordsReport rep = records_experiment(three, r, r);
        CHECK(rep.validity_before == doctest::Approx(1.0));
        CHECK(rep.validity_after == doctest::Approx(0.0));
        CHECK(rep.recorder_identity_residual <= 1e-12);
    }

    // A permuted labeling moves which environment value counts as valid.
    const RecordsScenario flipped(DiscreteClock(2), 2, 2, {1, 0});
    CHECK(records_experiment(flipped, 0, 1).validity_before == doctest::Approx(1.0));

    CHECK(kind_of([&] { records_experiment(colours, 2, 0); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([&] { records_experiment(colours, 0, -1); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { RecordsScenario(DiscreteClock(2), 2, 2, {0, 0}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { RecordsScenario(DiscreteClock(2), 2, 3, {0, 1}); }) == ErrorKind::IncompatibleDimensions);
}
