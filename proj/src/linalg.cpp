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

#include "pwlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace pwlab {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BadDimension: return "BadDimension";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::NotCyclic: return "NotCyclic";
        case ErrorKind::ZeroConditionalBlock: return "ZeroConditionalBlock";
        case ErrorKind::PictureMismatch: return "PictureMismatch";
        case ErrorKind::NotCommuting: return "NotCommuting";
        case ErrorKind::DegenerateJointSpectrum: return "DegenerateJointSpectrum";
        case ErrorKind::NotProductGrid: return "NotProductGrid";
        case ErrorKind::IncompatibleDimensions: return "IncompatibleDimensions";
        case ErrorKind::InvalidHistory: return "InvalidHistory";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Matrix unitary_power(const Matrix &u, long exponent) {
    if (u.rows() != u.cols()) throw Error(ErrorKind::DimensionMismatch, "unitary_power needs a square matrix");
    Matrix base = exponent < 0 ? Matrix(u.adjoint()) : u;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    Matrix result = Matrix::Identity(u.rows(), u.cols());
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

double phase_distance(const Vector &a, const Vector &b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "phase_distance on vectors of different size");
    // Align b to a with the optimal phase, then take the plain norm.
    const Complex overlap = b.dot(a);  // <b|a>
    const double mag = std::abs(overlap);
    const Complex phase = mag > 0.0 ? overlap / mag : Complex(1.0);
    return (a - phase * b).norm();
}

RealVector singular_values(const Matrix &m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues();
}

int SpectrumMultiset::dimension() const { return std::accumulate(multiplicities.begin(), multiplicities.end(), 0); }

std::vector<Complex> SpectrumMultiset::expanded() const {
    std::vector<Complex> out;
    for (std::size_t i = 0; i < values.size(); ++i) out.insert(out.end(), multiplicities[i], values[i]);
    return out;
}

namespace {

// (re, im) order with ties in re broken by im.
bool lex_less(Complex a, Complex b, double tol) {
    if (std::abs(a.real() - b.real()) > tol) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

SpectrumMultiset cluster_eigenvalues(const std::vector<Complex> &eigenvalues, double tol) {
    struct Cluster {
        Complex sum;
        int count;
        Complex mean() const { return sum / static_cast<double>(count); }
    };
    std::vector<Cluster> clusters;
    for (const Complex &z : eigenvalues) {
        auto it = std::find_if(clusters.begin(), clusters.end(),
                               [&](const Cluster &c) { return std::abs(c.mean() - z) < tol; });
        if (it == clusters.end()) {
            clusters.push_back({z, 1});
        } else {
            it->sum += z;
            ++it->count;
        }
    }
    std::sort(clusters.begin(), clusters.end(),
              [&](const Cluster &a, const Cluster &b) { return lex_less(a.mean(), b.mean(), tol); });
    SpectrumMultiset out;
    for (const Cluster &c : clusters) {
        Complex v = c.mean();
        // Snap signed zeros so reports do not print -0.
        if (std::abs(v.real()) < 1e-15) v.real(0.0);
        if (std::abs(v.imag()) < 1e-15) v.imag(0.0);
        out.values.push_back(v);
        out.multiplicities.push_back(c.count);
    }
    return out;
}

SpectrumMultiset spectrum_unitary(const Matrix &u) {
    if (!is_unitary(u)) throw Error(ErrorKind::NotUnitary, "spectrum_unitary on a non-unitary matrix");
    Eigen::ComplexEigenSolver<Matrix> solver(u, false);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::InvalidArgument, "eigenvalue iteration failed");
    std::vector<Complex> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    return cluster_eigenvalues(eig);
}

SpectrumMultiset spectrum_hermitian(const Matrix &h) {
    if (!is_hermitian(h)) throw Error(ErrorKind::NotHermitian, "spectrum_hermitian on a non-Hermitian matrix");
    const Matrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::InvalidArgument, "eigenvalue iteration failed");
    std::vector<Complex> eig;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) eig.emplace_back(solver.eigenvalues()(i), 0.0);
    return cluster_eigenvalues(eig);
}

bool spectra_equal(const SpectrumMultiset &a, const SpectrumMultiset &b, double tol) {
    const std::vector<Complex> left = a.expanded();
    const std::vector<Complex> right = b.expanded();
    if (left.size() != right.size()) return false;
    std::vector<bool> used(right.size(), false);
    for (const Complex &z : left) {
        std::size_t best = right.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(z - right[j]);
            if (d < best_dist) {
                best_dist = d;
                best = j;
            }
        }
        if (best == right.size() || best_dist > tol) return false;
        used[best] = true;
    }
    return true;
}

}  // namespace pwlab
