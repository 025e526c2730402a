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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace entvar {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Numerical tolerances shared across the library.
namespace tol {
inline constexpr double state = 1e-9;      // state and density-matrix invariants
inline constexpr double algebra = 1e-12;   // exact algebraic identities at small dimension
inline constexpr double projector = 1e-10; // projector idempotence and completeness
inline constexpr double merge = 1e-9;      // eigenvalue degeneracy merge before sampling
inline constexpr double psd_clip = 1e-12;  // eigenvalue clipping inside psd_sqrt
} // namespace tol

/// Thrown when a text input (state file, catalog name, malformed header)
/// cannot be parsed at all.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Thrown when numerical data violates a quantum-state invariant:
/// normalization, Hermiticity, positivity, or probability completeness.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Max-norm Hermiticity test: ||m - m†||_max <= eps.
bool is_hermitian(const Matrix &m, double eps);

/// Tensor-product structure of a composite system: the ordered local
/// dimensions n_k, one per party. Party 0 is the most significant digit of
/// the lexicographic composite index.
class PartyLayout {
  public:
    explicit PartyLayout(std::vector<int> dims);

    int num_parties() const { return static_cast<int>(dims_.size()); }
    int dim(int party) const { return dims_.at(static_cast<std::size_t>(party)); }
    const std::vector<int> &dims() const { return dims_; }
    long total_dim() const { return total_dim_; }

    /// Product of the dimensions after `party` (the index stride of that
    /// party's digit in the flat composite index).
    long stride(int party) const;

    bool operator==(const PartyLayout &other) const { return dims_ == other.dims_; }

  private:
    std::vector<int> dims_;
    long total_dim_;
};

/// Normalized pure state of a composite system. Amplitudes are indexed
/// lexicographically by the digit tuple (l_0, ..., l_{K-1}) with party 0
/// most significant. Normalization is enforced at construction.
class StateVector {
  public:
    StateVector(PartyLayout layout, Vector amplitudes);

    const PartyLayout &layout() const { return layout_; }
    const Vector &amplitudes() const { return amplitudes_; }
    long dim() const { return amplitudes_.size(); }

  private:
    PartyLayout layout_;
    Vector amplitudes_;
};

/// Mixed state: Hermitian, positive semidefinite, unit-trace matrix.
/// All three invariants are enforced at construction (Hermiticity and trace
/// entrywise to 1e-9, eigenvalues >= -1e-9).
class DensityMatrix {
  public:
    explicit DensityMatrix(Matrix entries);

    const Matrix &entries() const { return entries_; }
    long dim() const { return entries_.rows(); }

  private:
    Matrix entries_;
};

enum class Method { spectral, variance, sampled };

const char *method_name(Method m);

/// Result of an exact or sampled concurrence computation, together with the
/// total variance and the normalization window it was measured against.
/// For non-sampled methods, value^2 * (v_max - v_min) + v_min recovers the
/// total variance. For reports produced across a bipartition of a
/// multipartite state, the variance fields refer to the two sides of the
/// cut treated as single parties.
struct ConcurrenceReport {
    double value = 0.0;
    double total_variance = 0.0;
    double v_min = 0.0;
    double v_max = 0.0;
    Method method = Method::spectral;
};

} // namespace entvar
