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

#include "entvar/types.hpp"

#include <cmath>
#include <utility>

namespace entvar {

bool is_hermitian(const Matrix &m, double eps) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= eps;
}

PartyLayout::PartyLayout(std::vector<int> dims) : dims_(std::move(dims)), total_dim_(1) {
    if (dims_.empty()) {
        throw std::invalid_argument("PartyLayout: at least one party required");
    }
    for (int n : dims_) {
        if (n < 2) {
            throw std::invalid_argument("PartyLayout: every local dimension must be >= 2");
        }
        if (total_dim_ > (1L << 26) / n) {
            throw std::invalid_argument("PartyLayout: total dimension too large");
        }
        total_dim_ *= n;
    }
}

long PartyLayout::stride(int party) const {
    if (party < 0 || party >= num_parties()) {
        throw std::invalid_argument("PartyLayout: party index out of range");
    }
    long s = 1;
    for (int k = party + 1; k < num_parties(); ++k) {
        s *= dims_[static_cast<std::size_t>(k)];
    }
    return s;
}

StateVector::StateVector(PartyLayout layout, Vector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != layout_.total_dim()) {
        throw std::invalid_argument("StateVector: amplitude count does not match layout");
    }
    double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > tol::state) {
        throw ValidationError("StateVector: state is not normalized (|psi|^2 = " +
                              std::to_string(norm2) + ")");
    }
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw std::invalid_argument("DensityMatrix: entries must form a non-empty square matrix");
    }
    if (!is_hermitian(entries_, tol::state)) {
        throw ValidationError("DensityMatrix: matrix is not Hermitian");
    }
    double trace = entries_.trace().real();
    if (std::abs(trace - 1.0) > tol::state) {
        throw ValidationError("DensityMatrix: trace is " + std::to_string(trace) + ", expected 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(entries_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol::state) {
        throw ValidationError("DensityMatrix: matrix is not positive semidefinite (min eigenvalue " +
                              std::to_string(es.eigenvalues().minCoeff()) + ")");
    }
}

const char *method_name(Method m) {
    switch (m) {
    case Method::spectral:
        return "spectral";
    case Method::variance:
        return "variance";
    case Method::sampled:
        return "sampled";
    }
    return "unknown";
}

} // namespace entvar
