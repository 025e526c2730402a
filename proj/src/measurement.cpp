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

#include "entvar/measurement.hpp"

#include <algorithm>
#include <cmath>

#include "entvar/concurrence.hpp"
#include "entvar/observables.hpp"
#include "entvar/rng.hpp"

namespace entvar {

ObservableSpectrum::ObservableSpectrum(std::vector<double> eigenvalues,
                                       std::vector<Matrix> projectors)
    : eigenvalues_(std::move(eigenvalues)), projectors_(std::move(projectors)) {
    if (eigenvalues_.empty() || eigenvalues_.size() != projectors_.size()) {
        throw std::invalid_argument("ObservableSpectrum: one projector per eigenvalue required");
    }
    const long dim = projectors_.front().rows();
    Matrix completeness = Matrix::Zero(dim, dim);
    for (std::size_t m = 0; m < projectors_.size(); ++m) {
        const Matrix &p = projectors_[m];
        if (p.rows() != dim || p.cols() != dim) {
            throw std::invalid_argument("ObservableSpectrum: projector dimension mismatch");
        }
        if ((p * p - p).cwiseAbs().maxCoeff() > tol::projector) {
            throw ValidationError("ObservableSpectrum: projector is not idempotent");
        }
        if (m > 0 && eigenvalues_[m] <= eigenvalues_[m - 1]) {
            throw ValidationError("ObservableSpectrum: eigenvalues must be ascending and distinct");
        }
        completeness += p;
    }
    if ((completeness - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > tol::projector) {
        throw ValidationError("ObservableSpectrum: projectors do not sum to the identity");
    }
}

ObservableSpectrum spectrum(const Matrix &x) {
    if (!is_hermitian(x, tol::state)) {
        throw ValidationError("spectrum: observable is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(x);
    const auto &values = es.eigenvalues();
    const auto &vectors = es.eigenvectors();

    std::vector<double> merged_values;
    std::vector<Matrix> projectors;
    long start = 0;
    for (long i = 1; i <= values.size(); ++i) {
        // Close a group when the gap to the previous eigenvalue exceeds the
        // merge tolerance (one physical outcome must not split in two).
        if (i == values.size() || values(i) - values(i - 1) > tol::merge) {
            const long count = i - start;
            merged_values.push_back(values.segment(start, count).mean());
            const auto block = vectors.middleCols(start, count);
            projectors.emplace_back(block * block.adjoint());
            start = i;
        }
    }
    return ObservableSpectrum(std::move(merged_values), std::move(projectors));
}

MeasurementRecord sample_observable(const StateVector &psi, const Matrix &x, long shots,
                                    std::uint64_t seed, ObservableId id) {
    if (shots < 1) {
        throw std::invalid_argument("sample_observable: shots must be >= 1");
    }
    if (x.rows() != psi.dim()) {
        throw std::invalid_argument("sample_observable: observable does not match state dimension");
    }
    ObservableSpectrum spec = spectrum(x);
    const int outcomes = spec.num_outcomes();

    std::vector<double> cumulative(static_cast<std::size_t>(outcomes));
    double total = 0.0;
    for (int m = 0; m < outcomes; ++m) {
        double p = psi.amplitudes().dot(spec.projectors()[static_cast<std::size_t>(m)] *
                                        psi.amplitudes()).real();
        total += std::max(p, 0.0);
        cumulative[static_cast<std::size_t>(m)] = total;
    }
    if (std::abs(total - 1.0) > tol::state) {
        throw ValidationError("sample_observable: outcome probabilities sum to " +
                              std::to_string(total));
    }

    std::vector<long> counts(static_cast<std::size_t>(outcomes), 0);
    RandomStream stream(seed);
    for (long s = 0; s < shots; ++s) {
        const double u = stream.uniform() * total;
        int m = 0;
        while (m + 1 < outcomes && u >= cumulative[static_cast<std::size_t>(m)]) {
            ++m;
        }
        ++counts[static_cast<std::size_t>(m)];
    }

    MeasurementRecord record;
    record.observable_id = id;
    record.shots = shots;
    double mean = 0.0;
    for (int m = 0; m < outcomes; ++m) {
        mean += static_cast<double>(counts[static_cast<std::size_t>(m)]) *
                spec.eigenvalues()[static_cast<std::size_t>(m)];
    }
    mean /= static_cast<double>(shots);
    record.sample_mean = mean;
    if (shots > 1) {
        double ss = 0.0;
        for (int m = 0; m < outcomes; ++m) {
            const double d = spec.eigenvalues()[static_cast<std::size_t>(m)] - mean;
            ss += static_cast<double>(counts[static_cast<std::size_t>(m)]) * d * d;
        }
        record.sample_variance = ss / static_cast<double>(shots - 1);
    }
    return record;
}

SampledConcurrence estimate_concurrence(const StateVector &psi, long shots_per_observable,
                                        std::uint64_t seed, bool bias_correct) {
    if (shots_per_observable < 1) {
        throw std::invalid_argument("estimate_concurrence: shots must be >= 1");
    }
    if (bias_correct && shots_per_observable < 2) {
        throw std::invalid_argument("estimate_concurrence: bias correction needs >= 2 shots");
    }
    const PartyLayout &layout = psi.layout();
    if (layout.num_parties() < 2) {
        throw std::invalid_argument("estimate_concurrence: at least two parties required");
    }

    SampledConcurrence result;
    result.shots_per_observable = shots_per_observable;
    result.seed = seed;
    result.bias_corrected = bias_correct;

    const double n = static_cast<double>(shots_per_observable);
    double mean_square_sum = 0.0;
    double variance_of_v = 0.0;
    for (int k = 0; k < layout.num_parties(); ++k) {
        const ObservableBasis basis = observable_basis(layout.dim(k));
        for (int i = 0; i < basis.size(); ++i) {
            const Matrix lifted = lift_observable(basis[i], layout, k);
            const ObservableId id{k, i};
            MeasurementRecord record = sample_observable(
                psi, lifted, shots_per_observable,
                substream_seed(seed, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(i)),
                id);
            double square = record.sample_mean * record.sample_mean;
            if (bias_correct) {
                square -= record.sample_variance / n;
            }
            mean_square_sum += square;
            // First-order term of Var(mhat^2) with Var(mhat) = s^2/N.
            variance_of_v +=
                4.0 * record.sample_mean * record.sample_mean * record.sample_variance / n;
            result.records.push_back(std::move(record));
        }
    }

    result.v_hat = casimir_constant(layout) - mean_square_sum;
    const VarianceBounds window = concurrence_window(layout);
    result.v_min = window.v_min;
    result.v_max = window.v_max;
    const double width = window.v_max - window.v_min;
    const double u = (result.v_hat - window.v_min) / width;
    result.estimate = normalized_concurrence(result.v_hat, window);

    if (shots_per_observable > 1) {
        const double se_u = std::sqrt(std::max(variance_of_v, 0.0)) / width;
        if (u > 0.0) {
            result.std_error = se_u / (2.0 * std::sqrt(u));
            result.boundary = (u < se_u) || (u > 1.0);
        } else {
            // The delta-method derivative diverges at the clamp edge; report
            // the r.m.s. scale of sqrt(|u|) fluctuation instead.
            result.std_error = std::sqrt(se_u);
            result.boundary = true;
        }
    } else {
        result.boundary = (u <= 0.0) || (u > 1.0);
    }
    return result;
}

} // namespace entvar
