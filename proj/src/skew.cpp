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

#include "entvar/skew.hpp"

#include <algorithm>
#include <cmath>

#include "entvar/concurrence.hpp"
#include "entvar/observables.hpp"

namespace entvar {

Matrix psd_sqrt(const DensityMatrix &rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.entries());
    if (es.eigenvalues().minCoeff() < -tol::state) {
        throw ValidationError("psd_sqrt: matrix is not positive semidefinite");
    }
    Eigen::VectorXd roots = es.eigenvalues();
    for (long i = 0; i < roots.size(); ++i) {
        roots(i) = roots(i) < tol::psd_clip ? 0.0 : std::sqrt(roots(i));
    }
    Matrix s = es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
    return 0.5 * (s + s.adjoint());
}

namespace {

double skew_from_sqrt(const Matrix &sqrt_rho, const Matrix &x) {
    // [X, S] is anti-Hermitian for Hermitian X, S, so
    // -1/2 Tr([X,S]^2) = 1/2 ||XS - SX||_F^2.
    return 0.5 * (x * sqrt_rho - sqrt_rho * x).squaredNorm();
}

} // namespace

double skew_information(const DensityMatrix &rho, const Matrix &x) {
    if (x.rows() != rho.dim() || x.cols() != rho.dim()) {
        throw std::invalid_argument("skew_information: observable does not match state dimension");
    }
    if (!is_hermitian(x, tol::state)) {
        throw ValidationError("skew_information: observable is not Hermitian");
    }
    return std::max(skew_from_sqrt(psd_sqrt(rho), x), 0.0);
}

SkewReport total_skew_information(const DensityMatrix &rho, const PartyLayout &layout) {
    if (rho.dim() != layout.total_dim()) {
        throw std::invalid_argument("total_skew_information: density matrix does not match layout");
    }
    const Matrix sqrt_rho = psd_sqrt(rho);

    SkewReport report;
    for (int k = 0; k < layout.num_parties(); ++k) {
        const ObservableBasis basis = observable_basis(layout.dim(k));
        for (int i = 0; i < basis.size(); ++i) {
            const Matrix lifted = lift_observable(basis[i], layout, k);
            const double value = std::max(skew_from_sqrt(sqrt_rho, lifted), 0.0);
            report.per_observable.push_back({ObservableId{k, i}, value});
            report.total += value;
        }
    }

    const VarianceBounds window = concurrence_window(layout);
    report.heuristic_bound = normalized_concurrence(report.total, window);
    return report;
}

} // namespace entvar
