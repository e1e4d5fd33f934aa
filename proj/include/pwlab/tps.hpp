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

#ifndef PWLAB_TPS_HPP
#define PWLAB_TPS_HPP

#include <optional>

#include "pwlab/linalg.hpp"
#include "pwlab/pw.hpp"

namespace pwlab {

/// Second operator-Schmidt value below this fraction of the first means a pure tensor.
inline constexpr double kProductTol = 1e-8;
inline constexpr double kCommuteTol = 1e-9;

/// Tensor product structure C^dim_c (x) C^dim_r -> H, stored as the unitary
/// whose columns are the product vectors |c>|r> expressed in reference
/// coordinates (column index c * dim_r + r).
struct Tps {
    int dim_c = 0;
    int dim_r = 0;
    Matrix iso;

    Tps() = default;
    Tps(int dim_c, int dim_r, Matrix iso);

    static Tps identity(int dim_c, int dim_r);
    int dim() const noexcept { return dim_c * dim_r; }
    /// Product vector |c>|r> of this structure.
    Vector product_vector(int c, int r) const;
};

/// iso' = m^{-1} iso: the passive reading of the active map m.
Tps pullback_tps(const Tps &ref, const Matrix &m);

/// Local factors with q ~ kron(left, right) (or kron(left, right) * SWAP when
/// `swapped`). `left` is scaled to Frobenius norm sqrt(dim_left), so it is
/// unitary whenever q is, and its first nonzero entry is real-positive;
/// `right` carries the remaining scale.
struct LocalFactors {
    Matrix left;
    Matrix right;
    bool swapped = false;
};

/// Singular values of realign(q, dim_a, dim_b) in descending order.
RealVector operator_schmidt_values(const Matrix &q, int dim_a, int dim_b);

/// Factorizes q = A (x) B when its realignment has rank one under rel_tol.
std::optional<LocalFactors> product_factors(const Matrix &q, int dim_a, int dim_b, double rel_tol = kProductTol);

/// Equivalent iff b.iso^dagger a.iso is local, possibly after exchanging
/// equal-dimension factors. Returns the recovered local factors.
std::optional<LocalFactors> tps_equivalent(const Tps &a, const Tps &b, double rel_tol = kProductTol);

/// Structure induced by a commuting pair (t, x): product basis = joint
/// eigenbasis ordered by (t-value, x-value), each vector phased so its
/// largest-magnitude entry is real-positive. In it t = T (x) I and x = I (x) X.
Tps tps_from_generating_observables(const Matrix &t, const Matrix &x);

/// Same, with unitary Weyl partners: `clock_shift` steps the t-eigenvalue
/// index by one and `rest_shift` the x-eigenvalue index, each commuting with
/// the other factor's observable. The product basis is then
/// clock_shift^tau rest_shift^k |v_00>, which fixes the per-vector phases up
/// to one global phase.
Tps tps_from_generating_observables(const Matrix &t, const Matrix &x, const Matrix &clock_shift,
                                    const Matrix &rest_shift);

/// psi(tau, x) = <tau, x | Psi>> in the product basis of `tps`; rows are clock
/// readings, columns are rest indices.
Matrix extract_wavefunction(const TimelessState &psi, const Tps &tps);
Matrix extract_wavefunction(const Vector &psi, const Tps &tps);

}  // namespace pwlab

#endif  // PWLAB_TPS_HPP
