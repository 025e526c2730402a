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

#include "entvar/states.hpp"

#include <cmath>
#include <cstdlib>

#include "entvar/rng.hpp"

namespace entvar {

namespace {

Vector gaussian_vector(long dim, RandomStream &stream) {
    Vector v(dim);
    for (long i = 0; i < dim; ++i) {
        const double re = stream.normal();
        const double im = stream.normal();
        v(i) = Complex(re, im);
    }
    return v;
}

StateVector normalized_state(PartyLayout layout, Vector v) {
    return StateVector(std::move(layout), v / v.norm());
}

// Parses a strictly positive integer suffix, e.g. "ghz3" -> 3.
int parse_suffix(const std::string &name, const std::string &prefix) {
    const std::string digits = name.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("unknown state name: " + name);
    }
    const long value = std::strtol(digits.c_str(), nullptr, 10);
    if (value < 2 || value > 1024) {
        throw ParseError("state name parameter out of range: " + name);
    }
    return static_cast<int>(value);
}

StateVector bell(int a, int b, double sign) {
    Vector v = Vector::Zero(4);
    const double amp = 1.0 / std::sqrt(2.0);
    v(a) = amp;
    v(b) = sign * amp;
    return StateVector(PartyLayout({2, 2}), std::move(v));
}

} // namespace

StateVector ghz_state(int parties) {
    if (parties < 2) {
        throw std::invalid_argument("ghz_state: at least two parties required");
    }
    PartyLayout layout(std::vector<int>(static_cast<std::size_t>(parties), 2));
    Vector v = Vector::Zero(layout.total_dim());
    const double amp = 1.0 / std::sqrt(2.0);
    v(0) = amp;
    v(layout.total_dim() - 1) = amp;
    return StateVector(std::move(layout), std::move(v));
}

StateVector w_state(int parties) {
    if (parties < 2) {
        throw std::invalid_argument("w_state: at least two parties required");
    }
    PartyLayout layout(std::vector<int>(static_cast<std::size_t>(parties), 2));
    Vector v = Vector::Zero(layout.total_dim());
    const double amp = 1.0 / std::sqrt(static_cast<double>(parties));
    for (int k = 0; k < parties; ++k) {
        v(1L << (parties - 1 - k)) = amp;
    }
    return StateVector(std::move(layout), std::move(v));
}

StateVector max_entangled_state(int n) {
    if (n < 2) {
        throw std::invalid_argument("max_entangled_state: dimension must be >= 2");
    }
    PartyLayout layout({n, n});
    Vector v = Vector::Zero(layout.total_dim());
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        v(static_cast<long>(i) * n + i) = amp;
    }
    return StateVector(std::move(layout), std::move(v));
}

StateVector named_state(const std::string &name) {
    if (name == "bell_phi_plus") {
        return bell(0, 3, 1.0);
    }
    if (name == "bell_phi_minus") {
        return bell(0, 3, -1.0);
    }
    if (name == "bell_psi_plus") {
        return bell(1, 2, 1.0);
    }
    if (name == "bell_psi_minus") {
        return bell(1, 2, -1.0);
    }
    if (name.rfind("ghz", 0) == 0) {
        return ghz_state(parse_suffix(name, "ghz"));
    }
    if (name.rfind("max_entangled", 0) == 0) {
        return max_entangled_state(parse_suffix(name, "max_entangled"));
    }
    if (name.rfind("w", 0) == 0) {
        return w_state(parse_suffix(name, "w"));
    }
    throw ParseError("unknown state name: " + name);
}

StateVector haar_state(const PartyLayout &layout, std::uint64_t seed) {
    RandomStream stream(substream_seed(seed, 0x68616172ULL, 0));
    return normalized_state(layout, gaussian_vector(layout.total_dim(), stream));
}

StateVector product_state(const PartyLayout &layout, std::uint64_t seed) {
    Vector v = Vector::Ones(1);
    for (int k = 0; k < layout.num_parties(); ++k) {
        RandomStream stream(substream_seed(seed, 0x70726f64ULL, static_cast<std::uint64_t>(k)));
        Vector factor = gaussian_vector(layout.dim(k), stream);
        factor /= factor.norm();
        Vector next(v.size() * factor.size());
        for (long i = 0; i < v.size(); ++i) {
            next.segment(i * factor.size(), factor.size()) = v(i) * factor;
        }
        v = std::move(next);
    }
    return StateVector(layout, std::move(v));
}

DensityMatrix mixed_state(const PartyLayout &layout, int rank, std::uint64_t seed) {
    if (rank < 1 || rank > layout.total_dim()) {
        throw std::invalid_argument("mixed_state: rank must be in [1, total_dim]");
    }
    const long dim = layout.total_dim();
    Matrix rho = Matrix::Zero(dim, dim);
    for (int r = 0; r < rank; ++r) {
        RandomStream stream(substream_seed(seed, 0x6d697865ULL, static_cast<std::uint64_t>(r)));
        Vector v = gaussian_vector(dim, stream);
        v /= v.norm();
        rho += (v * v.adjoint()) / static_cast<double>(rank);
    }
    return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

GeneratedState make_state(const StateSpec &spec) {
    switch (spec.kind) {
    case StateKind::named: {
        StateVector psi = named_state(spec.name);
        if (spec.layout && !(*spec.layout == psi.layout())) {
            throw std::invalid_argument("make_state: layout does not match named state");
        }
        return psi;
    }
    case StateKind::haar_pure:
        if (!spec.layout) {
            throw std::invalid_argument("make_state: haar_pure requires a layout");
        }
        return haar_state(*spec.layout, spec.seed);
    case StateKind::product:
        if (!spec.layout) {
            throw std::invalid_argument("make_state: product requires a layout");
        }
        return product_state(*spec.layout, spec.seed);
    case StateKind::mixed_rank_r:
        if (!spec.layout) {
            throw std::invalid_argument("make_state: mixed_rank_r requires a layout");
        }
        return mixed_state(*spec.layout, spec.rank, spec.seed);
    }
    throw std::invalid_argument("make_state: unknown state kind");
}

} // namespace entvar
