// Copyright 2026 The blindrep Authors
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

#include "blindrep/gf2.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace blindrep {

namespace {

constexpr size_t kWordBits = 64;

size_t word_count(size_t length) {
    return (length + kWordBits - 1) / kWordBits;
}

}  // namespace

BitVec::BitVec(size_t length) : length_(length), words_(word_count(length), 0) {
}

BitVec BitVec::parse(std::string_view text) {
    BitVec v(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        char c = text[k];
        if (c == '1') {
            v.set(k, true);
        } else if (c != '0') {
            throw std::invalid_argument("bit string contains '" + std::string(1, c) + "': " + std::string(text));
        }
    }
    return v;
}

BitVec BitVec::unit(size_t length, size_t index) {
    BitVec v(length);
    v.set(index, true);
    return v;
}

void BitVec::check_index(size_t index) const {
    if (index >= length_) {
        throw std::out_of_range(
            "bit index " + std::to_string(index) + " out of range for length " + std::to_string(length_));
    }
}

void BitVec::check_same_size(const BitVec &other) const {
    if (other.length_ != length_) {
        throw std::invalid_argument(
            "bit vector length mismatch: " + std::to_string(length_) + " vs " + std::to_string(other.length_));
    }
}

bool BitVec::get(size_t index) const {
    check_index(index);
    return (words_[index / kWordBits] >> (index % kWordBits)) & 1;
}

void BitVec::set(size_t index, bool value) {
    check_index(index);
    uint64_t mask = uint64_t{1} << (index % kWordBits);
    if (value) {
        words_[index / kWordBits] |= mask;
    } else {
        words_[index / kWordBits] &= ~mask;
    }
}

void BitVec::flip(size_t index) {
    check_index(index);
    words_[index / kWordBits] ^= uint64_t{1} << (index % kWordBits);
}

size_t BitVec::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

std::vector<size_t> BitVec::support() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back(k * kWordBits + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

bool BitVec::dot(const BitVec &other) const {
    check_same_size(other);
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    check_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

bool BitVec::operator<(const BitVec &other) const {
    if (length_ != other.length_) {
        return length_ < other.length_;
    }
    return words_ < other.words_;
}

std::string BitVec::str() const {
    std::string out(length_, '0');
    for (size_t k : support()) {
        out[k] = '1';
    }
    return out;
}

BitMatrix::BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {
}

BitMatrix::BitMatrix(std::vector<BitVec> rows) : rows_(std::move(rows)) {
    if (!rows_.empty()) {
        cols_ = rows_.front().size();
    }
    for (size_t r = 0; r < rows_.size(); r++) {
        if (rows_[r].size() != cols_) {
            throw std::invalid_argument(
                "matrix row " + std::to_string(r) + " has " + std::to_string(rows_[r].size()) + " entries, expected " +
                std::to_string(cols_));
        }
    }
}

BitMatrix BitMatrix::parse(std::string_view text) {
    std::vector<BitVec> rows;
    while (!text.empty()) {
        size_t end = text.find('\n');
        std::string_view line = text.substr(0, end);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            if (end == std::string_view::npos) {
                break;
            }
            throw std::invalid_argument("blank line inside matrix text");
        }
        rows.push_back(BitVec::parse(line));
        if (end == std::string_view::npos) {
            break;
        }
        text.remove_prefix(end + 1);
    }
    return BitMatrix(std::move(rows));
}

BitVec BitMatrix::column(size_t c) const {
    BitVec out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        out.set(r, rows_[r].get(c));
    }
    return out;
}

size_t BitMatrix::rank() const {
    std::vector<BitVec> work = rows_;
    size_t rank = 0;
    for (size_t c = 0; c < cols_ && rank < work.size(); c++) {
        size_t pivot = rank;
        while (pivot < work.size() && !work[pivot].get(c)) {
            pivot++;
        }
        if (pivot == work.size()) {
            continue;
        }
        std::swap(work[rank], work[pivot]);
        for (size_t r = rank + 1; r < work.size(); r++) {
            if (work[r].get(c)) {
                work[r] ^= work[rank];
            }
        }
        rank++;
    }
    return rank;
}

std::string BitMatrix::str() const {
    std::string out;
    for (size_t r = 0; r < rows_.size(); r++) {
        if (r) {
            out += '\n';
        }
        out += rows_[r].str();
    }
    return out;
}

BitVec mat_vec_mul(const BitMatrix &m, const BitVec &v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument(
            "mat_vec_mul: vector length " + std::to_string(v.size()) + " does not match matrix columns " +
            std::to_string(m.cols()));
    }
    BitVec out(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        if (m.row(r).dot(v)) {
            out.set(r, true);
        }
    }
    return out;
}

bool row_space_contains(const BitMatrix &m, const BitVec &v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument(
            "row_space_contains: vector length " + std::to_string(v.size()) + " does not match matrix columns " +
            std::to_string(m.cols()));
    }
    // Reduce to echelon form, then sweep v through the pivots.
    std::vector<BitVec> basis;
    std::vector<size_t> pivots;
    for (const BitVec &row : m.row_vectors()) {
        BitVec r = row;
        for (size_t k = 0; k < basis.size(); k++) {
            if (r.get(pivots[k])) {
                r ^= basis[k];
            }
        }
        auto s = r.support();
        if (!s.empty()) {
            pivots.push_back(s.front());
            basis.push_back(std::move(r));
        }
    }
    BitVec rest = v;
    for (size_t k = 0; k < basis.size(); k++) {
        if (rest.get(pivots[k])) {
            rest ^= basis[k];
        }
    }
    return rest.is_zero();
}

}  // namespace blindrep

size_t std::hash<blindrep::BitVec>::operator()(const blindrep::BitVec &v) const noexcept {
    size_t h = std::hash<size_t>{}(v.size());
    for (uint64_t w : v.words()) {
        h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}
