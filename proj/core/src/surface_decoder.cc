// Copyright 2026 The hamsurf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hamsurf/surface_decoder.h"

#include <algorithm>
#include <string>

#include "hamsurf/errors.h"
#include "hamsurf/matching.h"

namespace hamsurf {

namespace {

void flip_site(const SurfaceLattice &lat, BitVector &c, int row, int col) {
    long q = lat.data_index(row, col);
    if (q < 0) {
        throw AlgorithmError("surface correction path left the lattice at (" + std::to_string(row) + ", " +
                             std::to_string(col) + ")");
    }
    c.flip(static_cast<size_t>(q));
}

// Along the row of `a`, then along the column of `b`.
void add_pair_path(const SurfaceLattice &lat, BitVector &c, uint32_t a, uint32_t b) {
    auto sa = lat.check_sites[a];
    auto sb = lat.check_sites[b];
    for (int col = std::min(sa.col, sb.col); col < std::max(sa.col, sb.col); col += 2) {
        flip_site(lat, c, sa.row, col + 1);
    }
    for (int row = std::min(sa.row, sb.row); row < std::max(sa.row, sb.row); row += 2) {
        flip_site(lat, c, row + 1, sb.col);
    }
}

void add_boundary_path(const SurfaceLattice &lat, BitVector &c, uint32_t a) {
    auto s = lat.check_sites[a];
    if (lat.nearest_boundary[a] == SurfaceLattice::left) {
        for (int col = s.col - 1; col >= 0; col -= 2) {
            flip_site(lat, c, s.row, col);
        }
    } else {
        for (int col = s.col + 1; col <= 2 * lat.d - 2; col += 2) {
            flip_site(lat, c, s.row, col);
        }
    }
}

}  // namespace

DefectSet DefectSet::from_syndrome(const Syndrome &s) {
    DefectSet out;
    for (size_t i : s.ones_indices()) {
        out.checks.push_back(static_cast<uint32_t>(i));
    }
    return out;
}

DefectSet DefectSet::from_error(const SurfaceLattice &lattice, const BitVector &error) {
    if (error.size() != lattice.n_data) {
        throw DimensionError("DefectSet::from_error: error has " + std::to_string(error.size()) +
                             " bits, lattice has " + std::to_string(lattice.n_data));
    }
    BitVector s(lattice.num_checks());
    for (size_t q : error.ones_indices()) {
        for (size_t c : lattice.checks_of_data[q]) {
            s.flip(c);
        }
    }
    return from_syndrome(s);
}

SurfaceCorrection mwpm_decode_surface(const DefectSet &defects, const SurfaceLattice &lattice) {
    const auto &d = defects.checks;
    for (uint32_t c : d) {
        if (c >= lattice.num_checks()) {
            throw IndexError("mwpm_decode_surface: defect " + std::to_string(c) + " not on the lattice");
        }
    }
    SurfaceCorrection out;
    out.correction = BitVector(lattice.n_data);
    size_t m = d.size();
    if (m == 0) {
        return out;
    }
    if (m == 1) {
        add_boundary_path(lattice, out.correction, d[0]);
        out.weight = lattice.boundary_dist[d[0]];
        return out;
    }
    if (m == 2) {
        uint64_t paired = lattice.distance(d[0], d[1]);
        uint64_t split = uint64_t{lattice.boundary_dist[d[0]]} + lattice.boundary_dist[d[1]];
        if (paired <= split) {
            add_pair_path(lattice, out.correction, d[0], d[1]);
            out.weight = paired;
        } else {
            add_boundary_path(lattice, out.correction, d[0]);
            add_boundary_path(lattice, out.correction, d[1]);
            out.weight = split;
        }
        return out;
    }

    // Defect i is vertex i; its boundary twin is vertex m + i. Twins pair up
    // freely among themselves, so any subset of defects may go to the boundary.
    std::vector<WeightedEdge> edges;
    edges.reserve(m * (m - 1) + m);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            edges.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j), lattice.distance(d[i], d[j])});
            edges.push_back({static_cast<uint32_t>(m + i), static_cast<uint32_t>(m + j), 0});
        }
        edges.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(m + i), lattice.boundary_dist[d[i]]});
    }
    std::vector<long> mate = min_weight_perfect_matching(2 * m, edges);
    for (size_t i = 0; i < m; i++) {
        size_t j = static_cast<size_t>(mate[i]);
        if (j == m + i) {
            add_boundary_path(lattice, out.correction, d[i]);
            out.weight += lattice.boundary_dist[d[i]];
        } else if (j < m && i < j) {
            add_pair_path(lattice, out.correction, d[i], d[j]);
            out.weight += lattice.distance(d[i], d[j]);
        } else if (j >= m) {
            throw AlgorithmError("mwpm_decode_surface: defect matched to a foreign boundary twin");
        }
    }
    return out;
}

bool surface_logical_failure(const SurfaceLattice &lattice, const BitVector &error, const BitVector &correction) {
    return parity_dot(lattice.logical_z, error ^ correction);
}

SurfaceDecoder::SurfaceDecoder(SurfaceLattice lattice) : lattice_(std::move(lattice)) {}

bool SurfaceDecoder::fails(const BitVector &error) const {
    auto result = mwpm_decode_surface(DefectSet::from_error(lattice_, error), lattice_);
    return surface_logical_failure(lattice_, error, result.correction);
}

bool SurfaceDecoder::fails_sparse(const std::vector<uint32_t> &flipped) const {
    BitVector error(lattice_.n_data);
    for (uint32_t q : flipped) {
        if (q >= lattice_.n_data) {
            throw IndexError("SurfaceDecoder: data qubit " + std::to_string(q) + " out of range");
        }
        error.flip(q);
    }
    return fails(error);
}

}  // namespace hamsurf
