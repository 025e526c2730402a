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

#include "entvar/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace entvar {

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean_line(const std::string &raw) {
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
    }
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

std::vector<std::string> content_lines(std::istream &in) {
    std::vector<std::string> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = clean_line(raw);
        if (!line.empty()) {
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

Complex parse_entry(const std::string &line, long index) {
    std::istringstream entry(line);
    double re = 0.0, im = 0.0;
    if (!(entry >> re >> im)) {
        throw ParseError("state file: malformed entry at data line " + std::to_string(index + 1) +
                         ": '" + line + "'");
    }
    std::string extra;
    if (entry >> extra) {
        throw ParseError("state file: trailing tokens at data line " + std::to_string(index + 1));
    }
    return {re, im};
}

const char *kDimsPrefix = "dims:";
const char *kKindPrefix = "kind:";

} // namespace

LoadedStateFile parse_state_file(std::istream &in) {
    std::vector<std::string> lines = content_lines(in);
    if (lines.size() < 2) {
        throw ParseError("state file: expected 'dims:' and 'kind:' header lines");
    }

    if (lines[0].rfind(kDimsPrefix, 0) != 0) {
        throw ParseError("state file: first line must start with 'dims:'");
    }
    std::istringstream dims_in(lines[0].substr(std::string(kDimsPrefix).size()));
    std::vector<int> dims;
    int d = 0;
    while (dims_in >> d) {
        dims.push_back(d);
    }
    if (!dims_in.eof()) {
        throw ParseError("state file: non-integer token in dims line");
    }
    if (dims.empty()) {
        throw ParseError("state file: dims line lists no dimensions");
    }
    for (int n : dims) {
        if (n < 2) {
            throw ParseError("state file: every dimension must be >= 2");
        }
    }
    PartyLayout layout(dims);

    if (lines[1].rfind(kKindPrefix, 0) != 0) {
        throw ParseError("state file: second line must start with 'kind:'");
    }
    std::string kind = clean_line(lines[1].substr(std::string(kKindPrefix).size()));
    if (kind != "pure" && kind != "mixed") {
        throw ParseError("state file: kind must be 'pure' or 'mixed', got '" + kind + "'");
    }

    const long total = layout.total_dim();
    const long expected = (kind == "pure") ? total : total * total;
    const long data_lines = static_cast<long>(lines.size()) - 2;
    if (data_lines != expected) {
        throw ParseError("state file: expected " + std::to_string(expected) + " data lines, found " +
                         std::to_string(data_lines));
    }

    if (kind == "pure") {
        Vector amplitudes(total);
        for (long i = 0; i < total; ++i) {
            amplitudes(i) = parse_entry(lines[static_cast<std::size_t>(i + 2)], i);
        }
        StateVector psi(layout, std::move(amplitudes));
        return LoadedStateFile{LoadedState{std::move(psi)}, layout};
    }
    Matrix entries(total, total);
    for (long i = 0; i < expected; ++i) {
        entries(i / total, i % total) = parse_entry(lines[static_cast<std::size_t>(i + 2)], i);
    }
    DensityMatrix rho(std::move(entries));
    return LoadedStateFile{LoadedState{std::move(rho)}, layout};
}

LoadedStateFile load_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open state file: " + path);
    }
    return parse_state_file(in);
}

namespace {

void write_header(std::ostream &out, const PartyLayout &layout, const char *kind) {
    out << "dims:";
    for (int n : layout.dims()) {
        out << ' ' << n;
    }
    out << "\nkind: " << kind << '\n';
}

void write_entry(std::ostream &out, Complex value) {
    // 17 significant digits round-trip a double exactly.
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g %.17g", value.real(), value.imag());
    out << buffer << '\n';
}

} // namespace

void write_state_file(std::ostream &out, const StateVector &psi) {
    write_header(out, psi.layout(), "pure");
    for (long i = 0; i < psi.dim(); ++i) {
        write_entry(out, psi.amplitudes()(i));
    }
}

void write_state_file(std::ostream &out, const DensityMatrix &rho, const PartyLayout &layout) {
    if (rho.dim() != layout.total_dim()) {
        throw std::invalid_argument("write_state_file: density matrix does not match layout");
    }
    write_header(out, layout, "mixed");
    for (long r = 0; r < rho.dim(); ++r) {
        for (long c = 0; c < rho.dim(); ++c) {
            write_entry(out, rho.entries()(r, c));
        }
    }
}

void save_state_file(const std::string &path, const StateVector &psi) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write state file: " + path);
    }
    write_state_file(out, psi);
}

void save_state_file(const std::string &path, const DensityMatrix &rho, const PartyLayout &layout) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write state file: " + path);
    }
    write_state_file(out, rho, layout);
}

} // namespace entvar
