// SPDX-License-Identifier: Apache-2.0
#pragma once

/*! \file
 *  \brief Dense bit-packed boolean matrices.
 *
 *  Each row occupies `words_per_row()` 64-bit words; bit c of a row lives in
 *  word c / 64 at position c % 64. Bits past `cols()` in the last word of a
 *  row are always zero.
 */

#include <softmatrix/error.hpp>

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace softmatrix {

using Word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

namespace detail {

constexpr std::size_t words_for(std::size_t bits) noexcept {
    return (bits + word_bits - 1) / word_bits;
}

/// Mask selecting the low `bits` bits of a word (all bits when bits == 64).
constexpr Word low_mask(std::size_t bits) noexcept {
    return bits >= word_bits ? ~Word{0} : (Word{1} << bits) - 1;
}

/// ORs `count` bits of `src` (starting at bit 0) into `dst` starting at bit
/// `offset`. Bits of `src` past `count` must be zero.
inline void deposit_bits(std::span<Word> dst, std::size_t offset, std::span<const Word> src,
                         std::size_t count) noexcept {
    const std::size_t shift = offset % word_bits;
    std::size_t target = offset / word_bits;
    const std::size_t n = words_for(count);
    for (std::size_t w = 0; w < n; ++w, ++target) {
        Word value = src[w];
        if (w + 1 == n)
            value &= low_mask(count - w * word_bits);
        if (value == 0)
            continue;
        dst[target] |= value << shift;
        if (shift != 0 && target + 1 < dst.size())
            dst[target + 1] |= value >> (word_bits - shift);
    }
}

/// Sets bits [offset, offset + count) of `dst`.
inline void fill_bits(std::span<Word> dst, std::size_t offset, std::size_t count) noexcept {
    while (count > 0) {
        const std::size_t shift = offset % word_bits;
        const std::size_t take = std::min(count, word_bits - shift);
        dst[offset / word_bits] |= low_mask(take) << shift;
        offset += take;
        count -= take;
    }
}

} // namespace detail

class BitMatrix {
public:
    BitMatrix() = default;

    /// Zero matrix of the given shape.
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(detail::words_for(cols)), words_(rows * stride_, 0) {}

    /// Builds from 0/1 rows; every row must have the same length.
    BitMatrix(std::initializer_list<std::initializer_list<int>> entries)
        : BitMatrix(entries.size(), entries.size() == 0 ? 0 : entries.begin()->size()) {
        std::size_t r = 0;
        for (const auto& row : entries) {
            if (row.size() != cols_)
                throw Error("ragged matrix literal");
            std::size_t c = 0;
            for (int value : row)
                set(r, c++, value != 0);
            ++r;
        }
    }

    static BitMatrix ones(std::size_t rows, std::size_t cols) {
        BitMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            detail::fill_bits(m.row_words(r), 0, cols);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return stride_; }

    bool operator()(std::size_t r, std::size_t c) const noexcept {
        assert(r < rows_ && c < cols_);
        return (words_[r * stride_ + c / word_bits] >> (c % word_bits)) & 1u;
    }

    bool at(std::size_t r, std::size_t c) const {
        check(r, c);
        return (*this)(r, c);
    }

    void set(std::size_t r, std::size_t c, bool value = true) {
        check(r, c);
        Word& word = words_[r * stride_ + c / word_bits];
        const Word bit = Word{1} << (c % word_bits);
        word = value ? (word | bit) : (word & ~bit);
    }

    std::span<const Word> row_words(std::size_t r) const noexcept {
        return {words_.data() + r * stride_, stride_};
    }
    std::span<Word> row_words(std::size_t r) noexcept {
        return {words_.data() + r * stride_, stride_};
    }

    std::size_t popcount() const noexcept {
        std::size_t total = 0;
        for (Word w : words_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool none() const noexcept { return popcount() == 0; }

    /// True when column c holds at least one 1.
    bool column_any(std::size_t c) const {
        check(0, c, true);
        for (std::size_t r = 0; r < rows_; ++r)
            if ((*this)(r, c))
                return true;
        return false;
    }

    /// Copies the window [row, row + rows) x [col, col + cols) into a new matrix.
    BitMatrix window(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const {
        if (row + rows > rows_ || col + cols > cols_)
            throw std::out_of_range("window outside matrix");
        BitMatrix out(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if ((*this)(row + r, col + c))
                    out.set(r, c);
        return out;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    void check(std::size_t r, std::size_t c, bool column_only = false) const {
        if ((!column_only && r >= rows_) || c >= cols_)
            throw std::out_of_range("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                    ") outside " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_) + " matrix");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> words_;
};

/// The zero soft matrix.
inline BitMatrix zero(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }

/// Entrywise 1 - x.
inline BitMatrix complement(const BitMatrix& m) {
    BitMatrix out(m.rows(), m.cols());
    const std::size_t tail = m.cols() % word_bits;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto src = m.row_words(r);
        auto dst = out.row_words(r);
        for (std::size_t w = 0; w < src.size(); ++w)
            dst[w] = ~src[w];
        if (tail != 0)
            dst.back() &= detail::low_mask(tail);
    }
    return out;
}

} // namespace softmatrix
