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

#include "hamsurf/gf2.h"

#include <algorithm>
#include <bit>

#include "hamsurf/errors.h"

namespace hamsurf {

namespace {

size_t words_for(size_t num_bits) {
    return (num_bits + 63) / 64;
}

void require_same_size(const BitVector &a, const BitVector &b, const char *op) {
    if (a.size() != b.size()) {
        throw DimensionError(
            std::string(op) + ": length mismatch (" + std::to_string(a.size()) + " vs " +
            std::to_string(b.size()) + ")");
    }
}

}  // namespace

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {
}

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    size_t k = 0;
    for (int b : bits) {
        set(k++, b != 0);
    }
}

BitVector BitVector::from_string(std::string_view text) {
    std::vector<bool> bits;
    for (char c : text) {
        if (c == '0' || c == '1') {
            bits.push_back(c == '1');
        } else if (c != ' ' && c != '\t' && c != ',' && c != '&') {
            throw ParseError(std::string("BitVector::from_string: unexpected character '") + c + "'");
        }
    }
    BitVector out(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        out.set(k, bits[k]);
    }
    return out;
}

BitVector BitVector::unit(size_t num_bits, size_t index) {
    if (index >= num_bits) {
        throw IndexError("BitVector::unit: index " + std::to_string(index) + " out of range");
    }
    BitVector out(num_bits);
    out.set(index, true);
    return out;
}

BitVector BitVector::ones(size_t num_bits) {
    BitVector out(num_bits);
    for (auto &w : out.words_) {
        w = ~uint64_t{0};
    }
    if (num_bits & 63) {
        out.words_.back() &= (uint64_t{1} << (num_bits & 63)) - 1;
    }
    return out;
}

void BitVector::set(size_t index, bool value) {
    uint64_t mask = uint64_t{1} << (index & 63);
    if (value) {
        words_[index >> 6] |= mask;
    } else {
        words_[index >> 6] &= ~mask;
    }
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](uint64_t w) { return w != 0; });
}

void BitVector::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

std::vector<size_t> BitVector::ones_indices() const {
    std::vector<size_t> out;
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_size(*this, other, "xor");
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector out = *this;
    out ^= other;
    return out;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require_same_size(*this, other, "and");
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

BitVector BitVector::operator&(const BitVector &other) const {
    BitVector out = *this;
    out &= other;
    return out;
}

std::string BitVector::str() const {
    std::string out(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k)) {
            out[k] = '1';
        }
    }
    return out;
}

bool parity_dot(const BitVector &u, const BitVector &v) {
    require_same_size(u, v, "parity_dot");
    uint64_t acc = 0;
    auto uw = u.words();
    auto vw = v.words();
    for (size_t w = 0; w < uw.size(); w++) {
        acc ^= uw[w] & vw[w];
    }
    return std::popcount(acc) & 1;
}

BitMatrix::BitMatrix(size_t num_rows, size_t num_cols) : num_cols_(num_cols), rows_(num_rows, BitVector(num_cols)) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix out(n, n);
    for (size_t k = 0; k < n; k++) {
        out.set(k, k, true);
    }
    return out;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows) {
    std::vector<BitVector> parsed;
    parsed.reserve(rows.size());
    for (const auto &r : rows) {
        parsed.push_back(BitVector::from_string(r));
    }
    size_t cols = parsed.empty() ? 0 : parsed[0].size();
    return from_rows(std::move(parsed), cols);
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, size_t num_cols) {
    for (const auto &r : rows) {
        if (r.size() != num_cols) {
            throw DimensionError("BitMatrix::from_rows: ragged rows");
        }
    }
    BitMatrix out;
    out.num_cols_ = num_cols;
    out.rows_ = std::move(rows);
    return out;
}

BitVector BitMatrix::column(size_t index) const {
    BitVector out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        out.set(r, rows_[r].get(index));
    }
    return out;
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != num_cols_) {
        throw DimensionError("BitMatrix::append_row: row length does not match column count");
    }
    rows_.push_back(std::move(row));
}

void BitMatrix::remove_row(size_t index) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(index));
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    std::swap(rows_[a], rows_[b]);
}

BitVector BitMatrix::multiply(const BitVector &v) const {
    if (v.size() != num_cols_) {
        throw DimensionError(
            "BitMatrix::multiply: vector length " + std::to_string(v.size()) + " != cols " +
            std::to_string(num_cols_));
    }
    BitVector out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        if (parity_dot(rows_[r], v)) {
            out.set(r, true);
        }
    }
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix out(num_cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c : rows_[r].ones_indices()) {
            out.set(c, r, true);
        }
    }
    return out;
}

BitMatrix BitMatrix::stacked(const BitMatrix &below) const {
    if (below.num_cols_ != num_cols_ && !(rows_.empty() || below.rows_.empty())) {
        throw DimensionError("BitMatrix::stacked: column count mismatch");
    }
    BitMatrix out = *this;
    if (rows_.empty()) {
        out.num_cols_ = below.num_cols_;
    }
    for (const auto &r : below.rows_) {
        out.append_row(r);
    }
    return out;
}

BitMatrix BitMatrix::gram(const BitMatrix &other) const {
    if (other.num_cols_ != num_cols_) {
        throw DimensionError("BitMatrix::gram: column count mismatch");
    }
    BitMatrix out(rows_.size(), other.rows_.size());
    for (size_t i = 0; i < rows_.size(); i++) {
        for (size_t j = 0; j < other.rows_.size(); j++) {
            out.set(i, j, parity_dot(rows_[i], other.rows_[j]));
        }
    }
    return out;
}

bool BitMatrix::is_zero() const {
    return std::none_of(rows_.begin(), rows_.end(), [](const BitVector &r) { return r.any(); });
}

std::string BitMatrix::str(std::string_view sep) const {
    std::string out;
    for (const auto &r : rows_) {
        for (size_t c = 0; c < num_cols_; c++) {
            if (c) {
                out += sep;
            }
            out += r.get(c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

RowReduction row_reduce(const BitMatrix &m) {
    RowReduction result;
    result.reduced = m;
    BitMatrix &a = result.reduced;
    size_t next = 0;
    for (size_t col = 0; col < a.num_cols() && next < a.num_rows(); col++) {
        size_t pivot = next;
        while (pivot < a.num_rows() && !a.get(pivot, col)) {
            pivot++;
        }
        if (pivot == a.num_rows()) {
            continue;
        }
        a.swap_rows(next, pivot);
        for (size_t r = 0; r < a.num_rows(); r++) {
            if (r != next && a.get(r, col)) {
                a.row(r) ^= a.row(next);
            }
        }
        result.pivot_cols.push_back(col);
        next++;
    }
    result.rank = next;
    return result;
}

size_t rank(const BitMatrix &m) {
    return row_reduce(m).rank;
}

BitMatrix kernel_basis(const BitMatrix &m) {
    RowReduction rr = row_reduce(m);
    size_t n = m.num_cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : rr.pivot_cols) {
        is_pivot[c] = true;
    }
    BitMatrix basis(0, n);
    for (size_t free_col = 0; free_col < n; free_col++) {
        if (is_pivot[free_col]) {
            continue;
        }
        BitVector v(n);
        v.set(free_col, true);
        for (size_t r = 0; r < rr.rank; r++) {
            if (rr.reduced.get(r, free_col)) {
                v.set(rr.pivot_cols[r], true);
            }
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

bool in_row_space(const BitMatrix &m, const BitVector &v) {
    if (v.size() != m.num_cols()) {
        throw DimensionError(
            "in_row_space: vector length " + std::to_string(v.size()) + " != cols " +
            std::to_string(m.num_cols()));
    }
    RowReduction rr = row_reduce(m);
    BitVector residual = v;
    for (size_t r = 0; r < rr.rank; r++) {
        if (residual.get(rr.pivot_cols[r])) {
            residual ^= rr.reduced.row(r);
        }
    }
    return residual.none();
}

}  // namespace hamsurf
