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

#ifndef BLINDREP_GF2_H
#define BLINDREP_GF2_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace blindrep {

/// A fixed-length vector over GF(2).
///
/// Bits are packed little-endian into 64-bit words. Index 0 is the leftmost
/// character of the textual form, so `BitVec::parse("100")` has bit 0 set.
/// Padding bits past `size()` are always kept at zero, which lets equality,
/// hashing and weight work word-at-a-time.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t length);

    /// Parses a contiguous 0/1 string. Throws std::invalid_argument on any
    /// other character.
    static BitVec parse(std::string_view text);
    /// The vector with only bit `index` set (0-based).
    static BitVec unit(size_t length, size_t index);

    size_t size() const {
        return length_;
    }
    bool get(size_t index) const;
    void set(size_t index, bool value);
    void flip(size_t index);

    /// Number of set bits.
    size_t weight() const;
    bool is_zero() const;
    /// Indices of the set bits, ascending.
    std::vector<size_t> support() const;

    /// Bitwise AND followed by a parity fold; the GF(2) inner product.
    bool dot(const BitVec &other) const;

    BitVec &operator^=(const BitVec &other);
    friend BitVec operator^(BitVec lhs, const BitVec &rhs) {
        lhs ^= rhs;
        return lhs;
    }
    bool operator==(const BitVec &other) const = default;
    /// Lexicographic on the packed words; only used for ordered containers.
    bool operator<(const BitVec &other) const;

    std::string str() const;

    const std::vector<uint64_t> &words() const {
        return words_;
    }

   private:
    void check_index(size_t index) const;
    void check_same_size(const BitVec &other) const;

    size_t length_ = 0;
    std::vector<uint64_t> words_;
};

/// A dense rows x cols matrix over GF(2), stored as one BitVec per row.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);
    /// Every row must have the same length. An empty list gives a 0 x 0 matrix.
    explicit BitMatrix(std::vector<BitVec> rows);

    /// Newline-separated rows of 0/1 characters. Blank lines are rejected.
    static BitMatrix parse(std::string_view text);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    const BitVec &row(size_t r) const {
        return rows_.at(r);
    }
    const std::vector<BitVec> &row_vectors() const {
        return rows_;
    }
    bool get(size_t r, size_t c) const {
        return rows_.at(r).get(c);
    }
    void set(size_t r, size_t c, bool value) {
        rows_.at(r).set(c, value);
    }
    BitVec column(size_t c) const;

    /// Rank over GF(2), by forward elimination on a copy.
    size_t rank() const;

    bool operator==(const BitMatrix &other) const = default;

    /// Rows joined by '\n', no trailing newline.
    std::string str() const;

   private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

/// GF(2) product M*v. Throws std::invalid_argument when v.size() != M.cols().
BitVec mat_vec_mul(const BitMatrix &m, const BitVec &v);

inline size_t weight(const BitVec &v) {
    return v.weight();
}

/// True iff v is a GF(2) combination of the rows of m.
bool row_space_contains(const BitMatrix &m, const BitVec &v);

}  // namespace blindrep

template <>
struct std::hash<blindrep::BitVec> {
    size_t operator()(const blindrep::BitVec &v) const noexcept;
};

#endif  // BLINDREP_GF2_H
