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

#ifndef PWLAB_LINALG_HPP
#define PWLAB_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "pwlab/error.hpp"

namespace pwlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kClusterTol = 1e-8;

/// Which tensor factor survives a partial trace. The global index of
/// |c>|r> is c * dim_r + r throughout the library.
enum class Keep { clock, rest };

// ---------------------------------------------------------------------------
// Expression-level helpers. These accept any Eigen dense expression and keep
// the scalar type of their arguments.
// ---------------------------------------------------------------------------

template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    using Scalar = typename DerivedA::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

template <typename Derived>
auto dagger(const Eigen::MatrixBase<Derived> &a) {
    return a.adjoint().eval();
}

/// Largest absolute entry.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived> &a) {
    if (a.size() == 0) return 0.0;
    return a.cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived> &a, double tol = kUnitaryTol) {
    if (a.rows() != a.cols()) return false;
    const auto n = a.rows();
    return max_abs(a.adjoint() * a - Matrix::Identity(n, n)) <= tol;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived> &a, double tol = kHermitianTol) {
    if (a.rows() != a.cols()) return false;
    return max_abs(a - a.adjoint()) <= tol;
}

/// Operator-Schmidt reshuffle of an operator on C^dim_c (x) C^dim_r.
/// out(i * dim_c + i', j * dim_r + j') = m(i * dim_r + j, i' * dim_r + j').
/// A (x) B realigns to vec(A) vec(B)^T, so pure tensors have rank 1.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> realign(
    const Eigen::MatrixBase<Derived> &m, Eigen::Index dim_c, Eigen::Index dim_r) {
    const Eigen::Index n = dim_c * dim_r;
    if (dim_c < 1 || dim_r < 1 || m.rows() != n || m.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch, "realign expects a square matrix of dimension dim_c*dim_r");
    }
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(dim_c * dim_c, dim_r * dim_r);
    for (Eigen::Index i = 0; i < dim_c; ++i)
        for (Eigen::Index ip = 0; ip < dim_c; ++ip)
            for (Eigen::Index j = 0; j < dim_r; ++j)
                for (Eigen::Index jp = 0; jp < dim_r; ++jp)
                    out(i * dim_c + ip, j * dim_r + jp) = m(i * dim_r + j, ip * dim_r + jp);
    return out;
}

/// Inverse of realign: takes a dim_c^2 x dim_r^2 matrix back to the square operator.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> unrealign(
    const Eigen::MatrixBase<Derived> &r, Eigen::Index dim_c, Eigen::Index dim_r) {
    if (dim_c < 1 || dim_r < 1 || r.rows() != dim_c * dim_c || r.cols() != dim_r * dim_r) {
        throw Error(ErrorKind::DimensionMismatch, "unrealign expects a dim_c^2 x dim_r^2 matrix");
    }
    const Eigen::Index n = dim_c * dim_r;
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(n, n);
    for (Eigen::Index i = 0; i < dim_c; ++i)
        for (Eigen::Index ip = 0; ip < dim_c; ++ip)
            for (Eigen::Index j = 0; j < dim_r; ++j)
                for (Eigen::Index jp = 0; jp < dim_r; ++jp)
                    out(i * dim_r + j, ip * dim_r + jp) = r(i * dim_c + ip, j * dim_r + jp);
    return out;
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> partial_trace(
    const Eigen::MatrixBase<Derived> &m, Eigen::Index dim_c, Eigen::Index dim_r, Keep keep) {
    const Eigen::Index n = dim_c * dim_r;
    if (dim_c < 1 || dim_r < 1 || m.rows() != n || m.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch, "partial_trace expects a square matrix of dimension dim_c*dim_r");
    }
    using Out = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (keep == Keep::rest) {
        Out out = Out::Zero(dim_r, dim_r);
        for (Eigen::Index c = 0; c < dim_c; ++c) out += m.block(c * dim_r, c * dim_r, dim_r, dim_r);
        return out;
    }
    Out out(dim_c, dim_c);
    for (Eigen::Index c = 0; c < dim_c; ++c)
        for (Eigen::Index cp = 0; cp < dim_c; ++cp) out(c, cp) = m.block(c * dim_r, cp * dim_r, dim_r, dim_r).trace();
    return out;
}

/// Integer power; negative exponents use the adjoint, so only meaningful for unitaries.
Matrix unitary_power(const Matrix &u, long exponent);

/// min over phases phi of || a - e^{i phi} b ||_2.
double phase_distance(const Vector &a, const Vector &b);

RealVector singular_values(const Matrix &m);

// ---------------------------------------------------------------------------
// Spectra
// ---------------------------------------------------------------------------

/// Eigenvalue multiset. Values are strictly increasing in (re, im) order and
/// multiplicities sum to the matrix dimension.
struct SpectrumMultiset {
    std::vector<Complex> values;
    std::vector<int> multiplicities;

    int dimension() const;
    /// One entry per eigenvalue, repeated by multiplicity.
    std::vector<Complex> expanded() const;
};

/// Groups eigenvalues closer than `tol` and orders the clusters.
SpectrumMultiset cluster_eigenvalues(const std::vector<Complex> &eigenvalues, double tol = kClusterTol);

SpectrumMultiset spectrum_unitary(const Matrix &u);
SpectrumMultiset spectrum_hermitian(const Matrix &h);

/// True iff the two multisets pair off one-to-one within tol.
bool spectra_equal(const SpectrumMultiset &a, const SpectrumMultiset &b, double tol = kClusterTol);

}  // namespace pwlab

#endif  // PWLAB_LINALG_HPP
