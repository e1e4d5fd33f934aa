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

#include "pwlab/tps.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace pwlab {

Tps::Tps(int dim_c_, int dim_r_, Matrix iso_) : dim_c(dim_c_), dim_r(dim_r_), iso(std::move(iso_)) {
    if (dim_c < 1 || dim_r < 1) throw Error(ErrorKind::BadDimension, "TPS factor dimensions must be positive");
    if (iso.rows() != dim() || iso.cols() != dim()) throw Error(ErrorKind::DimensionMismatch, "TPS isomorphism has the wrong size");
    if (!is_unitary(iso)) throw Error(ErrorKind::NotUnitary, "TPS isomorphism is not unitary");
}

Tps Tps::identity(int dim_c, int dim_r) { return Tps(dim_c, dim_r, Matrix::Identity(dim_c * dim_r, dim_c * dim_r)); }

Vector Tps::product_vector(int c, int r) const {
    if (c < 0 || c >= dim_c || r < 0 || r >= dim_r) throw Error(ErrorKind::IndexOutOfRange, "product index out of range");
    return iso.col(static_cast<Eigen::Index>(c) * dim_r + r);
}

Tps pullback_tps(const Tps &ref, const Matrix &m) {
    if (m.rows() != ref.dim() || m.cols() != ref.dim()) throw Error(ErrorKind::DimensionMismatch, "pullback by a matrix of the wrong size");
    if (!is_unitary(m)) throw Error(ErrorKind::NotUnitary, "pullback by a non-unitary matrix");
    return Tps(ref.dim_c, ref.dim_r, m.adjoint() * ref.iso);
}

RealVector operator_schmidt_values(const Matrix &q, int dim_a, int dim_b) {
    return singular_values(realign(q, dim_a, dim_b));
}

std::optional<LocalFactors> product_factors(const Matrix &q, int dim_a, int dim_b, double rel_tol) {
    const Matrix r = realign(q, dim_a, dim_b);
    Eigen::JacobiSVD<Matrix> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector &s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return std::nullopt;
    if (s.size() > 1 && s(1) >= rel_tol * s(0)) return std::nullopt;

    const Vector u0 = svd.matrixU().col(0);
    const Vector v0 = svd.matrixV().col(0);
    const double scale = std::sqrt(static_cast<double>(dim_a));
    LocalFactors out{Matrix(dim_a, dim_a), Matrix(dim_b, dim_b), false};
    for (int i = 0; i < dim_a; ++i)
        for (int ip = 0; ip < dim_a; ++ip) out.left(i, ip) = scale * u0(i * dim_a + ip);
    for (int j = 0; j < dim_b; ++j)
        for (int jp = 0; jp < dim_b; ++jp) out.right(j, jp) = (s(0) / scale) * std::conj(v0(j * dim_b + jp));

    // First nonzero entry in row-major order becomes real-positive.
    const double cutoff = 1e-12 * max_abs(out.left);
    for (Eigen::Index k = 0; k < out.left.size(); ++k) {
        const Complex z = out.left(k / dim_a, k % dim_a);
        if (std::abs(z) > cutoff) {
            const Complex phase = z / std::abs(z);
            out.left /= phase;
            out.right *= phase;
            break;
        }
    }
    return out;
}

namespace {

Matrix swap_operator(int d) {
    Matrix sw = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) sw(j * d + i, i * d + j) = 1.0;
    return sw;
}

}  // namespace

std::optional<LocalFactors> tps_equivalent(const Tps &a, const Tps &b, double rel_tol) {
    if (a.dim_c != b.dim_c || a.dim_r != b.dim_r) throw Error(ErrorKind::DimensionMismatch, "TPS dimensions differ");
    const Matrix q = b.iso.adjoint() * a.iso;
    if (auto direct = product_factors(q, a.dim_c, a.dim_r, rel_tol)) return direct;
    if (a.dim_c == a.dim_r) {
        if (auto exchanged = product_factors(q * swap_operator(a.dim_c), a.dim_c, a.dim_r, rel_tol)) {
            exchanged->swapped = true;
            return exchanged;
        }
    }
    return std::nullopt;
}

namespace {

struct EigenGroup {
    std::vector<double> values;
    Matrix vectors;
};

// Ascending eigenpairs of a Hermitian matrix, grouped by eigenvalue.
std::vector<EigenGroup> grouped_eigenpairs(const Matrix &h, double tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()));
    const RealVector &vals = solver.eigenvalues();
    const Matrix &vecs = solver.eigenvectors();
    std::vector<EigenGroup> groups;
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= vals.size(); ++i) {
        if (i == vals.size() || vals(i) - vals(i - 1) > tol) {
            EigenGroup g;
            for (Eigen::Index k = start; k < i; ++k) g.values.push_back(vals(k));
            g.vectors = vecs.middleCols(start, i - start);
            groups.push_back(std::move(g));
            start = i;
        }
    }
    return groups;
}

void fix_phase(Eigen::Ref<Vector> v) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < v.size(); ++i)
        if (std::abs(v(i)) > std::abs(v(best)) + 1e-12) best = i;
    v /= v(best) / std::abs(v(best));
}

}  // namespace

Tps tps_from_generating_observables(const Matrix &t, const Matrix &x) {
    if (t.rows() != t.cols() || x.rows() != x.cols() || t.rows() != x.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "generating observables must be square of equal size");
    }
    if (!is_hermitian(t) || !is_hermitian(x)) throw Error(ErrorKind::NotHermitian, "generating observables must be Hermitian");
    if (max_abs(t * x - x * t) > kCommuteTol) throw Error(ErrorKind::NotCommuting, "generating observables do not commute");

    const std::vector<EigenGroup> t_groups = grouped_eigenpairs(t, kClusterTol);
    const Eigen::Index n = t.rows();
    Matrix iso(n, n);
    std::vector<double> grid_x;
    Eigen::Index col = 0;
    for (const EigenGroup &g : t_groups) {
        const Matrix compressed = g.vectors.adjoint() * x * g.vectors;
        const std::vector<EigenGroup> x_groups = grouped_eigenpairs(compressed, kClusterTol);
        std::vector<double> xs;
        for (const EigenGroup &xg : x_groups) {
            if (xg.values.size() != 1) {
                throw Error(ErrorKind::DegenerateJointSpectrum, "joint eigenspace of (t, x) has dimension > 1");
            }
            xs.push_back(xg.values.front());
            iso.col(col++) = g.vectors * xg.vectors.col(0);
        }
        if (grid_x.empty()) {
            grid_x = xs;
        } else {
            bool same = xs.size() == grid_x.size();
            for (std::size_t k = 0; same && k < xs.size(); ++k) same = std::abs(xs[k] - grid_x[k]) <= kClusterTol;
            if (!same) throw Error(ErrorKind::NotProductGrid, "(t, x) joint spectrum is not a full product grid");
        }
    }
    for (Eigen::Index k = 0; k < n; ++k) fix_phase(iso.col(k));
    return Tps(static_cast<int>(t_groups.size()), static_cast<int>(grid_x.size()), iso);
}

Tps tps_from_generating_observables(const Matrix &t, const Matrix &x, const Matrix &clock_shift,
                                    const Matrix &rest_shift) {
    const Tps eigen = tps_from_generating_observables(t, x);
    const Eigen::Index n = t.rows();
    if (clock_shift.rows() != n || clock_shift.cols() != n || rest_shift.rows() != n || rest_shift.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch, "Weyl partners must match the observables");
    }
    if (!is_unitary(clock_shift) || !is_unitary(rest_shift)) throw Error(ErrorKind::NotUnitary, "Weyl partners must be unitary");
    if (max_abs(clock_shift * x - x * clock_shift) > kCommuteTol || max_abs(rest_shift * t - t * rest_shift) > kCommuteTol ||
        max_abs(clock_shift * rest_shift - rest_shift * clock_shift) > kCommuteTol) {
        throw Error(ErrorKind::NotCommuting, "Weyl partners must commute with the other factor");
    }
    Matrix iso(n, n);
    Vector row_start = eigen.iso.col(0);
    for (int c = 0; c < eigen.dim_c; ++c) {
        Vector v = row_start;
        for (int r = 0; r < eigen.dim_r; ++r) {
            const Eigen::Index idx = static_cast<Eigen::Index>(c) * eigen.dim_r + r;
            // Each step must land on the joint eigenvector with the next grid values.
            if (std::abs(std::abs(eigen.iso.col(idx).dot(v)) - 1.0) > kClusterTol) {
                throw Error(ErrorKind::NotProductGrid, "Weyl partners do not step through the joint eigenbasis in order");
            }
            iso.col(idx) = v;
            v = rest_shift * v;
        }
        row_start = clock_shift * row_start;
    }
    return Tps(eigen.dim_c, eigen.dim_r, iso);
}

Matrix extract_wavefunction(const Vector &psi, const Tps &tps) {
    if (psi.size() != tps.dim()) throw Error(ErrorKind::DimensionMismatch, "state does not match TPS dimension");
    const Vector amps = tps.iso.adjoint() * psi;
    Matrix table(tps.dim_c, tps.dim_r);
    for (int c = 0; c < tps.dim_c; ++c)
        for (int r = 0; r < tps.dim_r; ++r) table(c, r) = amps(static_cast<Eigen::Index>(c) * tps.dim_r + r);
    return table;
}

Matrix extract_wavefunction(const TimelessState &psi, const Tps &tps) { return extract_wavefunction(psi.amplitudes, tps); }

}  // namespace pwlab
