// Copyright 2026 The entvar developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "entvar/types.hpp"

namespace entvar {

/// Orthonormal basis of the traceless Hermitian operators on one party.
///
/// The pairing constant is fixed at Tr(X_i X_j) = 2 delta_ij, so for n = 2
/// the basis is exactly {sigma_x, sigma_y, sigma_z} and the squares sum to
/// the Casimir scalar 2(n^2-1)/n times the identity. Every invariant
/// (Hermitian, traceless, orthonormal, scalar Casimir) is checked at
/// construction to 1e-12.
class ObservableBasis {
  public:
    ObservableBasis(int party_dim, std::vector<Matrix> matrices);

    int party_dim() const { return party_dim_; }
    int size() const { return static_cast<int>(matrices_.size()); }
    const std::vector<Matrix> &matrices() const { return matrices_; }
    const Matrix &operator[](int i) const { return matrices_.at(static_cast<std::size_t>(i)); }

  private:
    int party_dim_;
    std::vector<Matrix> matrices_;
};

/// Generalized Gell-Mann basis for dimension n >= 2, scaled to
/// Tr(X^2) = 2. Ordering is frozen: symmetric pair matrices in row-major
/// pair order, then the antisymmetric pairs, then the n-1 diagonal
/// matrices. For n = 2 this yields sigma_x, sigma_y, sigma_z in that order.
ObservableBasis observable_basis(int n);

/// Casimir scalar of one party: sum_i X_i^2 = 2(n^2-1)/n * I.
double casimir_scalar(int n);

/// Casimir constant of the composite system: sum over parties of the
/// single-party scalars. Equals the state-independent part of the total
/// variance (6 for two qubits, 32/3 for two qutrits).
double casimir_constant(const PartyLayout &layout);

/// Embeds a single-party operator into the composite space:
/// I (x) ... (x) X (x) ... (x) I with X acting on `party`.
Matrix lift_observable(const Matrix &x, const PartyLayout &layout, int party);

/// Applies a single-party operator to a composite state vector without
/// materializing the lifted matrix. Equivalent to lift_observable(...) * psi.
Vector apply_local(const Matrix &x, const PartyLayout &layout, int party, const Vector &psi);

/// Expectation <psi| X^(party) |psi> of a single-party operator.
double local_mean(const Matrix &x, const PartyLayout &layout, int party, const Vector &psi);

/// Orthogonal recombination X'_i = sum_j r(i,j) X_j of a basis. An
/// orthogonal r preserves every basis invariant, including the Casimir
/// scalar, so the result is validated like any other basis.
ObservableBasis recombine_basis(const ObservableBasis &basis, const Eigen::MatrixXd &r);

} // namespace entvar
