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

#include "entvar/observables.hpp"

#include <cmath>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

namespace entvar {

ObservableBasis::ObservableBasis(int party_dim, std::vector<Matrix> matrices)
    : party_dim_(party_dim), matrices_(std::move(matrices)) {
    if (party_dim_ < 2) {
        throw std::invalid_argument("ObservableBasis: party dimension must be >= 2");
    }
    const long n = party_dim_;
    const std::size_t expected = static_cast<std::size_t>(n * n - 1);
    if (matrices_.size() != expected) {
        throw std::invalid_argument("ObservableBasis: expected n^2-1 matrices");
    }
    Matrix square_sum = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < matrices_.size(); ++i) {
        const Matrix &xi = matrices_[i];
        if (xi.rows() != n || xi.cols() != n) {
            throw std::invalid_argument("ObservableBasis: matrix dimension mismatch");
        }
        if (!is_hermitian(xi, tol::algebra)) {
            throw ValidationError("ObservableBasis: matrix is not Hermitian");
        }
        if (std::abs(xi.trace()) > tol::algebra) {
            throw ValidationError("ObservableBasis: matrix is not traceless");
        }
        for (std::size_t j = 0; j <= i; ++j) {
            Complex pairing = (matrices_[j] * xi).trace();
            double expected_pairing = (i == j) ? 2.0 : 0.0;
            if (std::abs(pairing - expected_pairing) > tol::algebra) {
                throw ValidationError("ObservableBasis: Tr(X_i X_j) != 2 delta_ij");
            }
        }
        square_sum += xi * xi;
    }
    Matrix casimir = casimir_scalar(party_dim_) * Matrix::Identity(n, n);
    if ((square_sum - casimir).cwiseAbs().maxCoeff() > tol::algebra) {
        throw ValidationError("ObservableBasis: sum of squares is not the Casimir scalar");
    }
}

ObservableBasis observable_basis(int n) {
    if (n < 2) {
        throw std::invalid_argument("observable_basis: dimension must be >= 2");
    }
    std::vector<Matrix> mats;
    mats.reserve(static_cast<std::size_t>(n) * n - 1);
    // Symmetric pair matrices, row-major pair order.
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            Matrix m = Matrix::Zero(n, n);
            m(j, k) = 1.0;
            m(k, j) = 1.0;
            mats.push_back(std::move(m));
        }
    }
    // Antisymmetric pair matrices.
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            Matrix m = Matrix::Zero(n, n);
            m(j, k) = Complex(0.0, -1.0);
            m(k, j) = Complex(0.0, 1.0);
            mats.push_back(std::move(m));
        }
    }
    // Diagonal matrices, sqrt(2/(l(l+1))) (|0..l-1 each +1>, l-th entry -l).
    for (int l = 1; l < n; ++l) {
        Matrix m = Matrix::Zero(n, n);
        double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (int j = 0; j < l; ++j) {
            m(j, j) = scale;
        }
        m(l, l) = -scale * l;
        mats.push_back(std::move(m));
    }
    return ObservableBasis(n, std::move(mats));
}

double casimir_scalar(int n) {
    if (n < 2) {
        throw std::invalid_argument("casimir_scalar: dimension must be >= 2");
    }
    return 2.0 * (static_cast<double>(n) * n - 1.0) / n;
}

double casimir_constant(const PartyLayout &layout) {
    double total = 0.0;
    for (int n : layout.dims()) {
        total += casimir_scalar(n);
    }
    return total;
}

Matrix lift_observable(const Matrix &x, const PartyLayout &layout, int party) {
    if (party < 0 || party >= layout.num_parties()) {
        throw std::invalid_argument("lift_observable: party index out of range");
    }
    const int n = layout.dim(party);
    if (x.rows() != n || x.cols() != n) {
        throw std::invalid_argument("lift_observable: operator dimension does not match party");
    }
    const long post = layout.stride(party);
    const long pre = layout.total_dim() / (post * n);
    Matrix left = Eigen::kroneckerProduct(Matrix::Identity(pre, pre), x);
    return Eigen::kroneckerProduct(left, Matrix::Identity(post, post));
}

Vector apply_local(const Matrix &x, const PartyLayout &layout, int party, const Vector &psi) {
    if (party < 0 || party >= layout.num_parties()) {
        throw std::invalid_argument("apply_local: party index out of range");
    }
    const int n = layout.dim(party);
    if (x.rows() != n || x.cols() != n) {
        throw std::invalid_argument("apply_local: operator dimension does not match party");
    }
    if (psi.size() != layout.total_dim()) {
        throw std::invalid_argument("apply_local: state dimension does not match layout");
    }
    const long stride = layout.stride(party);
    const long block = stride * n;
    Vector out(psi.size());
    Vector slot(n), mapped(n);
    for (long base = 0; base < psi.size(); base += block) {
        for (long inner = 0; inner < stride; ++inner) {
            for (int a = 0; a < n; ++a) {
                slot(a) = psi(base + a * stride + inner);
            }
            mapped.noalias() = x * slot;
            for (int a = 0; a < n; ++a) {
                out(base + a * stride + inner) = mapped(a);
            }
        }
    }
    return out;
}

double local_mean(const Matrix &x, const PartyLayout &layout, int party, const Vector &psi) {
    return psi.dot(apply_local(x, layout, party, psi)).real();
}

ObservableBasis recombine_basis(const ObservableBasis &basis, const Eigen::MatrixXd &r) {
    const int count = basis.size();
    if (r.rows() != count || r.cols() != count) {
        throw std::invalid_argument("recombine_basis: recombination must be (n^2-1) x (n^2-1)");
    }
    std::vector<Matrix> mats(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Matrix m = Matrix::Zero(basis.party_dim(), basis.party_dim());
        for (int j = 0; j < count; ++j) {
            m += r(i, j) * basis[j];
        }
        mats[static_cast<std::size_t>(i)] = std::move(m);
    }
    return ObservableBasis(basis.party_dim(), std::move(mats));
}

} // namespace entvar
