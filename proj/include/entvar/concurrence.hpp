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

#include <span>
#include <vector>

#include "entvar/observables.hpp"
#include "entvar/types.hpp"

namespace entvar {

/// Reduced density matrix of one party of a pure state.
DensityMatrix partial_trace(const StateVector &psi, int keep);

/// Reduced density matrix of one party of a mixed state.
DensityMatrix partial_trace(const DensityMatrix &rho, const PartyLayout &layout, int keep);

/// Reduced density matrix of a group of parties (kept in their original
/// relative order). Used for concurrence across a bipartition.
DensityMatrix partial_trace_keep(const StateVector &psi, const std::vector<int> &keep);
DensityMatrix partial_trace_keep(const DensityMatrix &rho, const PartyLayout &layout,
                                 const std::vector<int> &keep);

/// Tr(rho^2).
double purity(const DensityMatrix &rho);

struct VarianceBounds {
    double v_min = 0.0;
    double v_max = 0.0;
};

/// Extremes of the total variance: v_max is the Casimir constant (reached
/// when every single-party mean vanishes), v_min is the value every full
/// product state attains, v_max - sum_k 2(1 - 1/n_k).
VarianceBounds variance_bounds(const PartyLayout &layout);

/// Normalization window used to convert a total variance into a
/// concurrence. For K >= 3 this is variance_bounds verbatim. For K = 2 the
/// upper edge is the *attainable* maximum v_min + 4(m-1)/m with
/// m = min(n_A, n_B): a Schmidt decomposition has at most m terms, so for
/// n_A != n_B the larger party's marginal can never be maximally mixed and
/// the Casimir ceiling is out of reach. For n x n layouts the two windows
/// coincide.
VarianceBounds concurrence_window(const PartyLayout &layout);

/// Total variance of the basic observables, sum_alpha Var_psi(X_alpha),
/// computed as the Casimir constant minus the sum of squared single-party
/// means.
double total_variance(const StateVector &psi);

/// Same, against caller-supplied per-party bases (one per party, matching
/// dimensions). The result is basis independent for any orthonormal choice.
double total_variance(const StateVector &psi, std::span<const ObservableBasis> bases);

/// Concurrence from reduced-state purity across a bipartition:
/// C = sqrt(nu (1 - Tr rho_r^2)), nu = m/(m-1), m = min of the two side
/// dimensions. `cut_side_a` lists the parties (0-based) of one side; both
/// sides must be non-empty. The report's variance fields refer to the cut
/// treated as a two-party system.
ConcurrenceReport concurrence_spectral(const StateVector &psi, const std::vector<int> &cut_side_a);

/// Two-party overload: the only possible cut.
ConcurrenceReport concurrence_spectral(const StateVector &psi);

/// Concurrence from the total variance:
/// C = sqrt(clamp((V - v_min) / (v_max - v_min), 0, 1)) over the
/// concurrence_window of the layout. Defined for any number of parties;
/// coincides with concurrence_spectral on every bipartite layout.
ConcurrenceReport concurrence_variance(const StateVector &psi);

/// Shared normalization: sqrt of the clamped window ratio, with variances
/// within 1e-9 of the product floor reported as an exact zero (below that
/// the square root would only amplify round-off noise).
double normalized_concurrence(double total_variance, const VarianceBounds &window);

} // namespace entvar
