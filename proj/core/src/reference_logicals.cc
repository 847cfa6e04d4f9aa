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

#include "hamsurf/reference_logicals.h"

#include <string>

#include "hamsurf/errors.h"

namespace hamsurf {

namespace {

const std::vector<std::string> kLogicals3 = {
    "0101010",
};

const std::vector<std::string> kLogicals4 = {
    "110100010000001",
    "100000000000011",
    "101100010000010",
    "000100010000111",
    "000010010000100",
    "001011000000000",
    "111010100000101",
};

const std::vector<std::string> kLogicals5 = {
    "1000000000000000000000000000011",
    "0101000100000001000000000000010",
    "1110000000000000000000000000000",
    "1001000100000001000000000000100",
    "0101100000000000000000000000110",
    "0010110000000000000000000000000",
    "0101001000000000000000000000011",
    "0101111000000000000000000001010",
    "0100001010000001000000000000111",
    "0101110111000001000000000000010",
    "0011100111100000000000000000101",
    "0111101010010000000000000001010",
    "0101000101111001000000000000010",
    "0001111000000101000000000001101",
    "0001111001100011000000000001101",
    "0101110100111101000000000011010",
    "0010101110000111100000000000000",
    "0001111000001001110000000001101",
    "0111011010110010001100000001010",
    "0111101011101110001010000010010",
    "0110100011010011111011000010111",
};

}  // namespace

BitMatrix reference_logicals(int r) {
    switch (r) {
        case 3:
            return BitMatrix::from_strings(kLogicals3);
        case 4:
            return BitMatrix::from_strings(kLogicals4);
        case 5:
            return BitMatrix::from_strings(kLogicals5);
        default:
            throw ParameterError("reference_logicals: only r = 3, 4, 5 are tabulated, got " + std::to_string(r));
    }
}

}  // namespace hamsurf
