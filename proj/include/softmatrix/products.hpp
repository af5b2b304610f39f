// SPDX-License-Identifier: Apache-2.0
#pragma once

/*! \file
 *  \brief And, Or, And-Not and Or-Not products of soft matrices.
 *
 *  For m x n operands a and b the product is m x n^2. Column p = n(k-1)+j
 *  (1-based) of row l combines a(l,k) with b(l,j):
 *
 *    And      min(a, b)        Or      max(a, b)
 *    And-Not  min(a, 1 - b)    Or-Not  max(a, 1 - b)
 *
 *  Block-level products apply the part product to each diagonal block, so a
 *  product of m x n block matrices is m x (n_1^2 + ... + n_N^2).
 */

#include <softmatrix/bit_matrix.hpp>
#include <softmatrix/soft_matrix.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace softmatrix {

enum class ProductKind { And, Or, AndNot, OrNot };

inline constexpr std::array<ProductKind, 4> all_product_kinds{
    ProductKind::And, ProductKind::Or, ProductKind::AndNot, ProductKind::OrNot};

constexpr std::string_view to_string(ProductKind kind) noexcept {
    switch (kind) {
    case ProductKind::And: return "and";
    case ProductKind::Or: return "or";
    case ProductKind::AndNot: return "andnot";
    case ProductKind::OrNot: return "ornot";
    }
    return "?";
}

inline std::optional<ProductKind> parse_product_kind(std::string_view text) noexcept {
    for (ProductKind kind : all_product_kinds)
        if (to_string(kind) == text)
            return kind;
    return std::nullopt;
}

/// 1-based product column of the pair (k, j), both in 1..n.
inline std::size_t column_index(std::size_t n, std::size_t k, std::size_t j) {
    if (k < 1 || k > n || j < 1 || j > n)
        throw std::out_of_range("column pair (" + std::to_string(k) + ", " + std::to_string(j) +
                                ") outside 1.." + std::to_string(n));
    return n * (k - 1) + j;
}

/// A part-level product: m x n^2 with n = source_cols.
class ProductPart {
public:
    ProductPart(BitMatrix matrix, std::size_t source_cols)
        : matrix_(std::move(matrix)), source_cols_(source_cols) {
        if (matrix_.cols() != source_cols_ * source_cols_)
            throw StructureMismatch("product part must have n^2 columns");
    }

    const BitMatrix& matrix() const noexcept { return matrix_; }
    std::size_t source_cols() const noexcept { return source_cols_; }
    std::size_t rows() const noexcept { return matrix_.rows(); }
    std::size_t cols() const noexcept { return matrix_.cols(); }

    friend bool operator==(const ProductPart&, const ProductPart&) = default;

private:
    BitMatrix matrix_;
    std::size_t source_cols_;
};

/// Row l is built one k-block at a time: each block is either a constant row
/// or (a complement of) row l of b, depending on a(l, k).
inline ProductPart product_part(const BitMatrix& a, const BitMatrix& b, ProductKind kind) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw StructureMismatch("product operands must share dimensions (" +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
    const std::size_t n = a.cols();
    const bool negate_b = kind == ProductKind::AndNot || kind == ProductKind::OrNot;
    const bool is_or = kind == ProductKind::Or || kind == ProductKind::OrNot;
    const BitMatrix b_used = negate_b ? complement(b) : b;

    BitMatrix c(a.rows(), n * n);
    for (std::size_t l = 0; l < a.rows(); ++l) {
        auto out = c.row_words(l);
        auto b_row = b_used.row_words(l);
        for (std::size_t k = 0; k < n; ++k) {
            const bool a_lk = a(l, k);
            if (is_or && a_lk)
                detail::fill_bits(out, n * k, n);      // max(1, x) = 1
            else if (is_or || a_lk)
                detail::deposit_bits(out, n * k, b_row, n); // max(0, x) = min(1, x) = x
            // min(0, x) = 0: leave the block clear
        }
    }
    return ProductPart(std::move(c), n);
}

/// Blockwise product; operands must have the same block layout.
inline BlockDiagonalMatrix product_block(const BlockDiagonalMatrix& a,
                                         const BlockDiagonalMatrix& b, ProductKind kind) {
    if (!a.same_layout(b))
        throw StructureMismatch("product operands have different block structure");
    std::vector<BitMatrix> blocks;
    blocks.reserve(a.block_count());
    for (std::size_t i = 0; i < a.block_count(); ++i)
        blocks.push_back(product_part(a.block(i), b.block(i), kind).matrix());
    return BlockDiagonalMatrix(std::move(blocks));
}

} // namespace softmatrix
