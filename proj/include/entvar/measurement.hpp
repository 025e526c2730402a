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

#include <cstdint>
#include <optional>
#include <vector>

#include "entvar/types.hpp"

namespace entvar {

/// Identifies one basic observable: (party, index within that party's
/// basis). Both 0-based; {-1, -1} marks a free-standing measurement.
struct ObservableId {
    int party = -1;
    int index = -1;
};

/// Eigenvalue/projector resolution of a Hermitian observable with
/// degenerate eigenvalues merged (gap tolerance 1e-9). Eigenvalues are
/// ascending and distinct; projectors are idempotent and sum to the
/// identity (checked at construction).
class ObservableSpectrum {
  public:
    ObservableSpectrum(std::vector<double> eigenvalues, std::vector<Matrix> projectors);

    int num_outcomes() const { return static_cast<int>(eigenvalues_.size()); }
    const std::vector<double> &eigenvalues() const { return eigenvalues_; }
    const std::vector<Matrix> &projectors() const { return projectors_; }

  private:
    std::vector<double> eigenvalues_;
    std::vector<Matrix> projectors_;
};

/// Diagonalizes a Hermitian matrix into an ObservableSpectrum. The merged
/// resolution reconstructs the input: sum_m lambda_m P_m = X to 1e-9.
ObservableSpectrum spectrum(const Matrix &x);

/// Finite-shot sample statistics of one observable.
struct MeasurementRecord {
    ObservableId observable_id;
    long shots = 0;
    double sample_mean = 0.0;
    /// Unbiased sample variance; 0 when shots == 1 (a single shot carries
    /// no spread information).
    double sample_variance = 0.0;
};

/// Draws `shots` independent projective-measurement outcomes of a
/// Hermitian observable on fresh copies of psi, Pr(lambda_m) = <psi|P_m|psi>,
/// by inverse CDF on a stream seeded with `seed`. Identical inputs and seed
/// give an identical record.
MeasurementRecord sample_observable(const StateVector &psi, const Matrix &x, long shots,
                                    std::uint64_t seed, ObservableId id = {});

/// Concurrence estimate reconstructed from finite-shot means of every
/// basic observable.
struct SampledConcurrence {
    double estimate = 0.0;
    /// First-order propagated standard error; empty when shots == 1.
    std::optional<double> std_error;
    long shots_per_observable = 0;
    std::uint64_t seed = 0;
    bool bias_corrected = false;
    /// Set when the variance estimate sits at or outside the normalization
    /// window, where the plug-in square root is clamped and the first-order
    /// error propagation degenerates.
    bool boundary = false;
    /// Estimated total variance C_sum - sum_alpha mhat_alpha^2 before clamping.
    double v_hat = 0.0;
    double v_min = 0.0;
    double v_max = 0.0;
    std::vector<MeasurementRecord> records;
};

/// Measures every basic observable of every party with `shots_per_observable`
/// shots each and plugs the estimated total variance into the normalized
/// concurrence formula. Each observable samples from its own substream
/// derived from (seed, party, index), so any parallel schedule reproduces
/// the serial result. With `bias_correct`, mhat^2 - s^2/N replaces mhat^2
/// (unbiased for the squared mean; requires shots >= 2).
SampledConcurrence estimate_concurrence(const StateVector &psi, long shots_per_observable,
                                        std::uint64_t seed, bool bias_correct = false);

} // namespace entvar
