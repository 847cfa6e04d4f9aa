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

#ifndef HAMSURF_MATCHING_H
#define HAMSURF_MATCHING_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hamsurf {

struct WeightedEdge {
    uint32_t u;
    uint32_t v;
    int64_t weight;
};

/// Maximum-weight matching on a general graph (Edmonds' blossom algorithm with
/// primal-dual updates, O(V^3)). With `max_cardinality`, maximizes weight among
/// maximum-cardinality matchings. Integer weights are handled exactly.
///
/// Returns mate[v] (or -1 when v is unmatched).
std::vector<long> max_weight_matching(size_t num_vertices, std::span<const WeightedEdge> edges,
                                      bool max_cardinality);

/// Minimum-weight perfect matching. Throws AlgorithmError when the graph has
/// no perfect matching.
std::vector<long> min_weight_perfect_matching(size_t num_vertices, std::span<const WeightedEdge> edges);

}  // namespace hamsurf

#endif
