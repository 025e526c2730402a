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

#include "entvar/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entvar {

namespace {

void check_keep_set(const PartyLayout &layout, const std::vector<int> &keep) {
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set must not be empty");
    }
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("partial_trace: duplicate party index");
    }
    if (sorted.front() < 0 || sorted.back() >= layout.num_parties()) {
        throw std::invalid_argument("partial_trace: party index out of range");
    }
}

// Row index (kept digits) and column index (traced digits) of every flat
// composite index, in the parties' original relative order.
struct KeepSplit {
    long kept_dim = 1;
    long traced_dim = 1;
    std::vector<long> row_of;
    std::vector<long> col_of;
};

KeepSplit split_indices(const PartyLayout &layout, const std::vector<int> &keep) {
    KeepSplit split;
    const int parties = layout.num_parties();
    std::vector<bool> kept(static_cast<std::size_t>(parties), false);
    for (int k : keep) {
        kept[static_cast<std::size_t>(k)] = true;
    }
    for (int k = 0; k < parties; ++k) {
        (kept[static_cast<std::size_t>(k)] ? split.kept_dim : split.traced_dim) *= layout.dim(k);
    }
    const long total = layout.total_dim();
    split.row_of.resize(static_cast<std::size_t>(total));
    split.col_of.resize(static_cast<std::size_t>(total));
    for (long i = 0; i < total; ++i) {
        long rest = i;
        long row = 0, col = 0;
        for (int k = 0; k < parties; ++k) {
            const long stride = layout.stride(k);
            const long digit = rest / stride;
            rest %= stride;
            if (kept[static_cast<std::size_t>(k)]) {
                row = row * layout.dim(k) + digit;
            } else {
                col = col * layout.dim(k) + digit;
            }
        }
        split.row_of[static_cast<std::size_t>(i)] = row;
        split.col_of[static_cast<std::size_t>(i)] = col;
    }
    return split;
}

Matrix hermitized(Matrix m) {
    return 0.5 * (m + m.adjoint());
}

// Attainable window for one bipartition with side dimensions (da, db).
VarianceBounds cut_window(long da, long db) {
    const double m = static_cast<double>(std::min(da, db));
    VarianceBounds w;
    w.v_min = 2.0 * (static_cast<double>(da) - 1.0) + 2.0 * (static_cast<double>(db) - 1.0);
    w.v_max = w.v_min + 4.0 * (m - 1.0) / m;
    return w;
}

} // namespace

double normalized_concurrence(double total_variance, const VarianceBounds &window) {
    // States whose variance is within the report tolerance of the product
    // floor are numerically indistinguishable from product states; report
    // an exact zero instead of sqrt of round-off noise.
    if (total_variance <= window.v_min + tol::state) {
        return 0.0;
    }
    const double u = (total_variance - window.v_min) / (window.v_max - window.v_min);
    return std::sqrt(std::clamp(u, 0.0, 1.0));
}

DensityMatrix partial_trace_keep(const StateVector &psi, const std::vector<int> &keep) {
    const PartyLayout &layout = psi.layout();
    check_keep_set(layout, keep);
    KeepSplit split = split_indices(layout, keep);
    Matrix reshaped(split.kept_dim, split.traced_dim);
    for (long i = 0; i < layout.total_dim(); ++i) {
        reshaped(split.row_of[static_cast<std::size_t>(i)],
                 split.col_of[static_cast<std::size_t>(i)]) = psi.amplitudes()(i);
    }
    return DensityMatrix(hermitized(reshaped * reshaped.adjoint()));
}

DensityMatrix partial_trace_keep(const DensityMatrix &rho, const PartyLayout &layout,
                                 const std::vector<int> &keep) {
    if (rho.dim() != layout.total_dim()) {
        throw std::invalid_argument("partial_trace: density matrix does not match layout");
    }
    check_keep_set(layout, keep);
    KeepSplit split = split_indices(layout, keep);
    // Flat index of every (row, col) cell.
    std::vector<long> flat(static_cast<std::size_t>(split.kept_dim * split.traced_dim));
    for (long i = 0; i < layout.total_dim(); ++i) {
        flat[static_cast<std::size_t>(split.row_of[static_cast<std::size_t>(i)] * split.traced_dim +
                                      split.col_of[static_cast<std::size_t>(i)])] = i;
    }
    Matrix reduced = Matrix::Zero(split.kept_dim, split.kept_dim);
    for (long r = 0; r < split.kept_dim; ++r) {
        for (long s = 0; s < split.kept_dim; ++s) {
            Complex sum = 0.0;
            for (long c = 0; c < split.traced_dim; ++c) {
                sum += rho.entries()(flat[static_cast<std::size_t>(r * split.traced_dim + c)],
                                     flat[static_cast<std::size_t>(s * split.traced_dim + c)]);
            }
            reduced(r, s) = sum;
        }
    }
    return DensityMatrix(hermitized(std::move(reduced)));
}

DensityMatrix partial_trace(const StateVector &psi, int keep) {
    return partial_trace_keep(psi, {keep});
}

DensityMatrix partial_trace(const DensityMatrix &rho, const PartyLayout &layout, int keep) {
    return partial_trace_keep(rho, layout, {keep});
}

double purity(const DensityMatrix &rho) {
    return (rho.entries() * rho.entries()).trace().real();
}

VarianceBounds variance_bounds(const PartyLayout &layout) {
    VarianceBounds b;
    b.v_max = casimir_constant(layout);
    double product_gap = 0.0;
    for (int n : layout.dims()) {
        product_gap += 2.0 * (1.0 - 1.0 / n);
    }
    b.v_min = b.v_max - product_gap;
    return b;
}

VarianceBounds concurrence_window(const PartyLayout &layout) {
    if (layout.num_parties() == 2) {
        return cut_window(layout.dim(0), layout.dim(1));
    }
    return variance_bounds(layout);
}

double total_variance(const StateVector &psi) {
    std::vector<ObservableBasis> bases;
    bases.reserve(static_cast<std::size_t>(psi.layout().num_parties()));
    for (int n : psi.layout().dims()) {
        bases.push_back(observable_basis(n));
    }
    return total_variance(psi, bases);
}

double total_variance(const StateVector &psi, std::span<const ObservableBasis> bases) {
    const PartyLayout &layout = psi.layout();
    if (static_cast<int>(bases.size()) != layout.num_parties()) {
        throw std::invalid_argument("total_variance: one basis per party required");
    }
    double mean_square_sum = 0.0;
    for (int k = 0; k < layout.num_parties(); ++k) {
        const ObservableBasis &basis = bases[static_cast<std::size_t>(k)];
        if (basis.party_dim() != layout.dim(k)) {
            throw std::invalid_argument("total_variance: basis dimension does not match party");
        }
        for (const Matrix &x : basis.matrices()) {
            const double mean = local_mean(x, layout, k, psi.amplitudes());
            mean_square_sum += mean * mean;
        }
    }
    return casimir_constant(layout) - mean_square_sum;
}

ConcurrenceReport concurrence_spectral(const StateVector &psi, const std::vector<int> &cut_side_a) {
    const PartyLayout &layout = psi.layout();
    if (layout.num_parties() < 2) {
        throw std::invalid_argument("concurrence_spectral: at least two parties required");
    }
    check_keep_set(layout, cut_side_a);
    if (static_cast<int>(cut_side_a.size()) == layout.num_parties()) {
        throw std::invalid_argument("concurrence_spectral: cut must leave both sides non-empty");
    }

    long side_a_dim = 1;
    for (int k : cut_side_a) {
        side_a_dim *= layout.dim(k);
    }
    const long side_b_dim = layout.total_dim() / side_a_dim;

    // Both marginals share the Schmidt spectrum; reduce the smaller side.
    std::vector<int> keep = cut_side_a;
    if (side_b_dim < side_a_dim) {
        keep.clear();
        std::vector<bool> in_a(static_cast<std::size_t>(layout.num_parties()), false);
        for (int k : cut_side_a) {
            in_a[static_cast<std::size_t>(k)] = true;
        }
        for (int k = 0; k < layout.num_parties(); ++k) {
            if (!in_a[static_cast<std::size_t>(k)]) {
                keep.push_back(k);
            }
        }
    }
    const double reduced_purity = purity(partial_trace_keep(psi, keep));

    // sqrt(nu (1 - Tr rho_r^2)) with nu = m/(m-1) equals the normalized form
    // over the cut window: the window width is exactly 4/nu.
    ConcurrenceReport report;
    report.method = Method::spectral;
    const VarianceBounds window = cut_window(side_a_dim, side_b_dim);
    report.v_min = window.v_min;
    report.v_max = window.v_max;
    report.total_variance =
        2.0 * static_cast<double>(side_a_dim + side_b_dim) - 4.0 * reduced_purity;
    report.value = normalized_concurrence(report.total_variance, window);
    return report;
}

ConcurrenceReport concurrence_spectral(const StateVector &psi) {
    if (psi.layout().num_parties() != 2) {
        throw std::invalid_argument(
            "concurrence_spectral: a cut must be given for more than two parties");
    }
    return concurrence_spectral(psi, {0});
}

ConcurrenceReport concurrence_variance(const StateVector &psi) {
    const PartyLayout &layout = psi.layout();
    if (layout.num_parties() < 2) {
        throw std::invalid_argument("concurrence_variance: at least two parties required");
    }
    ConcurrenceReport report;
    report.method = Method::variance;
    report.total_variance = total_variance(psi);
    const VarianceBounds window = concurrence_window(layout);
    report.v_min = window.v_min;
    report.v_max = window.v_max;
    report.value = normalized_concurrence(report.total_variance, window);
    return report;
}

} // namespace entvar
