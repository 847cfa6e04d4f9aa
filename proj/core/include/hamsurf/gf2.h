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

#ifndef HAMSURF_GF2_H
#define HAMSURF_GF2_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hamsurf {

/// A dense vector over GF(2), packed 64 entries per word.
///
/// Bits past `size()` in the last word are kept at zero so that word-level
/// comparisons and popcounts are exact.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);
    BitVector(std::initializer_list<int> bits);

    /// Parses "0101..." (whitespace ignored).
    static BitVector from_string(std::string_view text);
    static BitVector unit(size_t num_bits, size_t index);
    static BitVector ones(size_t num_bits);

    size_t size() const {
        return num_bits_;
    }
    bool empty() const {
        return num_bits_ == 0;
    }

    bool get(size_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    void set(size_t index, bool value);
    void flip(size_t index) {
        words_[index >> 6] ^= uint64_t{1} << (index & 63);
    }
    bool operator[](size_t index) const {
        return get(index);
    }

    size_t popcount() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    void clear();

    /// Indices of set entries, ascending.
    std::vector<size_t> ones_indices() const;

    BitVector &operator^=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    BitVector &operator&=(const BitVector &other);
    BitVector operator&(const BitVector &other) const;
    bool operator==(const BitVector &other) const = default;

    std::span<const uint64_t> words() const {
        return words_;
    }
    std::span<uint64_t> mutable_words() {
        return words_;
    }

    std::string str() const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Sum of u_i * v_i mod 2.
bool parity_dot(const BitVector &u, const BitVector &v);

/// Row-major dense matrix over GF(2).
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t num_rows, size_t num_cols);
    static BitMatrix identity(size_t n);
    /// Each string is one row; all rows must have equal length.
    static BitMatrix from_strings(const std::vector<std::string> &rows);
    /// Empty row lists need the column count supplied explicitly.
    static BitMatrix from_rows(std::vector<BitVector> rows, size_t num_cols);

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }

    bool get(size_t row, size_t col) const {
        return rows_[row].get(col);
    }
    void set(size_t row, size_t col, bool value) {
        rows_[row].set(col, value);
    }

    const BitVector &row(size_t index) const {
        return rows_[index];
    }
    BitVector &row(size_t index) {
        return rows_[index];
    }
    const std::vector<BitVector> &rows() const {
        return rows_;
    }
    BitVector column(size_t index) const;

    void append_row(BitVector row);
    void remove_row(size_t index);
    void swap_rows(size_t a, size_t b);

    /// M * v over GF(2); the result has one entry per row.
    BitVector multiply(const BitVector &v) const;
    BitMatrix transpose() const;
    /// This matrix with `below`'s rows appended.
    BitMatrix stacked(const BitMatrix &below) const;
    /// this * other^T: entry (i, j) is parity_dot(row i, other row j).
    BitMatrix gram(const BitMatrix &other) const;

    bool is_zero() const;
    bool operator==(const BitMatrix &other) const = default;

    /// One line per row, entries separated by `sep`.
    std::string str(std::string_view sep = "") const;

   private:
    size_t num_cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RowReduction {
    BitMatrix reduced;
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
};

/// Reduced row-echelon form. Columns are scanned left to right; the pivot for
/// each column is the lowest-indexed remaining row with a one there.
RowReduction row_reduce(const BitMatrix &m);
size_t rank(const BitMatrix &m);
/// Basis of {v : M v = 0}, one vector per row.
BitMatrix kernel_basis(const BitMatrix &m);
bool in_row_space(const BitMatrix &m, const BitVector &v);

}  // namespace hamsurf

#endif
