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

#include "entvar/measurement.hpp"
#include "entvar/types.hpp"

namespace entvar {

struct SkewEntry {
    ObservableId id;
    double value = 0.0;
};

/// Skew information of every basic observable, their total, and the
/// heuristic entanglement bound obtained by pushing the total through the
/// pure-state concurrence normalization. The bound coincides with the
/// concurrence on pure states but is only a heuristic indicator for mixed
/// ones; it is not a certified measure.
struct SkewReport {
    std::vector<SkewEntry> per_observable;
    double total = 0.0;
    double heuristic_bound = 0.0;
};

/// Hermitian PSD square root S with S^2 = rho. Eigenvalues below 1e-12 are
/// clipped to zero before the root.
Matrix psd_sqrt(const DensityMatrix &rho);

/// Wigner-Yanase skew information -1/2 Tr([X, sqrt(rho)]^2). The commutator
/// is anti-Hermitian, so the trace is computed as half its squared
/// Frobenius norm, which is nonnegative by construction; reduces to the
/// variance <X^2> - <X>^2 on pure states.
double skew_information(const DensityMatrix &rho, const Matrix &x);

/// Total skew information over every party's lifted basic observables.
/// Coincides with the total variance when rho is pure.
SkewReport total_skew_information(const DensityMatrix &rho, const PartyLayout &layout);

} // namespace entvar
