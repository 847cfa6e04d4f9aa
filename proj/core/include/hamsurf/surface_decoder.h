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

#ifndef HAMSURF_SURFACE_DECODER_H
#define HAMSURF_SURFACE_DECODER_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hamsurf/codes.h"

namespace hamsurf {

/// Indices of Z checks with syndrome 1, ascending.
struct DefectSet {
    std::vector<uint32_t> checks;

    static DefectSet from_syndrome(const Syndrome &s);
    static DefectSet from_error(const SurfaceLattice &lattice, const BitVector &error);
};

struct SurfaceCorrection {
    BitVector correction;
    /// Total path length of the chosen matching (equals correction weight).
    uint64_t weight = 0;
};

/// Minimum-weight perfect matching over defects plus one boundary twin per
/// defect. Throws IndexError for a defect index outside the lattice.
SurfaceCorrection mwpm_decode_surface(const DefectSet &defects, const SurfaceLattice &lattice);

/// True when e + correction anticommutes with the Z logical.
bool surface_logical_failure(const SurfaceLattice &lattice, const BitVector &error, const BitVector &correction);

/// Convenience wrapper holding the lattice and scratch space.
class SurfaceDecoder {
   public:
    explicit SurfaceDecoder(SurfaceLattice lattice);

    const SurfaceLattice &lattice() const {
        return lattice_;
    }
    SurfaceCorrection decode(const DefectSet &defects) const {
        return mwpm_decode_surface(defects, lattice_);
    }
    /// Decodes the syndrome of `error` and reports a logical failure.
    bool fails(const BitVector &error) const;
    /// Same, from the list of flipped data qubits.
    bool fails_sparse(const std::vector<uint32_t> &flipped) const;

   private:
    SurfaceLattice lattice_;
};

}  // namespace hamsurf

#endif
