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

#ifndef HAMSURF_REFERENCE_LOGICALS_H
#define HAMSURF_REFERENCE_LOGICALS_H

#include "hamsurf/gf2.h"

namespace hamsurf {

/// Tabulated Z-logical bases for the r = 3, 4, 5 quantum Hamming codes, in the
/// column ordering of hamming_check_matrix. Used as fixed validation data.
BitMatrix reference_logicals(int r);

}  // namespace hamsurf

#endif
