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

#include <algorithm>
#include <cstdlib>
#include <string>

#include "hamsurf/codes.h"
#include "hamsurf/errors.h"

namespace hamsurf {

size_t surface_data_count(int d) {
    if (d < 2) {
        throw ParameterError("surface distance must be >= 2, got " + std::to_string(d));
    }
    size_t du = static_cast<size_t>(d);
    return du * du + (du - 1) * (du - 1);
}

BitMatrix SurfaceLattice::check_matrix() const {
    BitMatrix h(plaquettes.size(), n_data);
    for (size_t c = 0; c < plaquettes.size(); c++) {
        for (size_t q : plaquettes[c]) {
            h.set(c, q, true);
        }
    }
    return h;
}

long SurfaceLattice::data_index(int row, int col) const {
    int side = 2 * d - 1;
    if (row < 0 || col < 0 || row >= side || col >= side) {
        return -1;
    }
    return data_index_of_site_[static_cast<size_t>(row * side + col)];
}

SurfaceLattice build_surface(int d, bool allow_even) {
    if (d < 2 || (!allow_even && (d < 3 || d % 2 == 0))) {
        throw ParameterError("build_surface: distance must be odd and >= 3, got " + std::to_string(d) +
                             (allow_even ? "" : " (even distances need the explicit even-distance flag)"));
    }
    SurfaceLattice lat;
    lat.d = d;
    lat.n_data = surface_data_count(d);
    int side = 2 * d - 1;
    lat.data_index_of_site_.assign(static_cast<size_t>(side * side), -1);

    for (int row = 0; row < side; row++) {
        for (int col = 0; col < side; col++) {
            size_t site = static_cast<size_t>(row * side + col);
            if ((row + col) % 2 == 0) {
                lat.data_index_of_site_[site] = static_cast<long>(lat.data_sites.size());
                lat.data_sites.push_back({row, col});
            } else if (row % 2 == 0) {
                lat.check_sites.push_back({row, col});
            }
        }
    }

    const int dr[4] = {-1, 1, 0, 0};
    const int dc[4] = {0, 0, -1, 1};
    lat.checks_of_data.resize(lat.n_data);
    for (size_t c = 0; c < lat.check_sites.size(); c++) {
        std::vector<size_t> support;
        for (int k = 0; k < 4; k++) {
            long q = lat.data_index(lat.check_sites[c].row + dr[k], lat.check_sites[c].col + dc[k]);
            if (q >= 0) {
                support.push_back(static_cast<size_t>(q));
                lat.checks_of_data[static_cast<size_t>(q)].push_back(c);
            }
        }
        lat.plaquettes.push_back(std::move(support));
    }
    for (int row = 1; row < side; row += 2) {
        for (int col = 0; col < side; col += 2) {
            std::vector<size_t> support;
            for (int k = 0; k < 4; k++) {
                long q = lat.data_index(row + dr[k], col + dc[k]);
                if (q >= 0) {
                    support.push_back(static_cast<size_t>(q));
                }
            }
            lat.stars.push_back(std::move(support));
        }
    }

    lat.logical_z = BitVector(lat.n_data);
    for (int row = 0; row < side; row += 2) {
        lat.logical_z.set(static_cast<size_t>(lat.data_index(row, 0)), true);
    }

    size_t nc = lat.check_sites.size();
    lat.dist.resize(nc * nc);
    lat.boundary_dist.resize(nc);
    lat.nearest_boundary.resize(nc);
    for (size_t a = 0; a < nc; a++) {
        const auto &sa = lat.check_sites[a];
        for (size_t b = 0; b < nc; b++) {
            const auto &sb = lat.check_sites[b];
            lat.dist[a * nc + b] = static_cast<uint32_t>((std::abs(sa.row - sb.row) + std::abs(sa.col - sb.col)) / 2);
        }
        uint32_t to_left = static_cast<uint32_t>((sa.col + 1) / 2);
        uint32_t to_right = static_cast<uint32_t>((side - sa.col) / 2);
        lat.nearest_boundary[a] = to_right < to_left ? SurfaceLattice::right : SurfaceLattice::left;
        lat.boundary_dist[a] = std::min(to_left, to_right);
    }
    return lat;
}

}  // namespace hamsurf
