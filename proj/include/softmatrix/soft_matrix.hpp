// SPDX-License-Identifier: Apache-2.0
#pragma once

/*! \file
 *  \brief Characteristic matrices of universe parts and their block-diagonal
 *  assembly into the soft matrix of a whole multiset.
 *
 *  Rows are universe elements and columns are parameters, both in
 *  declaration order.
 */

#include <softmatrix/bit_matrix.hpp>
#include <softmatrix/model.hpp>

#include <numeric>
#include <vector>

namespace softmatrix {

/// Characteristic matrix of a universe part: entry (r, c) is 1 iff element r
/// belongs to the approximate value set of parameter c.
inline BitMatrix part_matrix(const UniversePart& part, const UniverseSpec& universe,
                             const ParameterSpec& parameters) {
    if (part.universe_id != universe.id || parameters.universe != universe.id)
        throw StructureMismatch("part, universe and parameter space must refer to one universe (got '" +
                                part.universe_id + "', '" + universe.id + "', '" +
                                parameters.universe + "')");
    if (part.mapping.size() != parameters.names.size())
        throw StructureMismatch("part of universe '" + universe.id +
                                "' does not cover its parameter space");

    std::unordered_map<Label, std::size_t> row_of;
    for (std::size_t r = 0; r < universe.elements.size(); ++r)
        row_of.emplace(universe.elements[r], r);

    BitMatrix m(universe.elements.size(), parameters.names.size());
    for (std::size_t c = 0; c < parameters.names.size(); ++c) {
        const auto& [name, subset] = part.mapping[c];
        if (name != parameters.names[c])
            throw StructureMismatch("part of universe '" + universe.id +
                                    "' lists parameter '" + name + "' where '" +
                                    parameters.names[c] + "' was declared");
        for (const auto& element : subset) {
            auto it = row_of.find(element);
            if (it == row_of.end())
                throw ValidationError("element outside universe " + universe.id, element);
            m.set(it->second, c);
        }
    }
    return m;
}

/// Part matrix of universe `i` (0-based) of a validated multiset.
inline BitMatrix part_matrix(const SoftMultiset& multiset, std::size_t i) {
    return part_matrix(part(multiset, i), multiset.universe(i), multiset.parameter_space(i));
}

/// Block-diagonal boolean matrix: block i occupies rows
/// [row_offset(i), row_offset(i+1)) and columns [col_offset(i), col_offset(i+1));
/// every entry outside the diagonal blocks is zero.
class BlockDiagonalMatrix {
public:
    explicit BlockDiagonalMatrix(std::vector<BitMatrix> blocks) : blocks_(std::move(blocks)) {
        if (blocks_.empty())
            throw Error("block-diagonal matrix needs at least one block");
        row_offsets_.assign(1, 0);
        col_offsets_.assign(1, 0);
        for (const auto& b : blocks_) {
            row_offsets_.push_back(row_offsets_.back() + b.rows());
            col_offsets_.push_back(col_offsets_.back() + b.cols());
        }
    }

    std::size_t block_count() const noexcept { return blocks_.size(); }
    const BitMatrix& block(std::size_t i) const { return blocks_.at(i); }
    const std::vector<BitMatrix>& blocks() const noexcept { return blocks_; }

    std::size_t rows() const noexcept { return row_offsets_.back(); }
    std::size_t cols() const noexcept { return col_offsets_.back(); }
    std::size_t row_offset(std::size_t i) const { return row_offsets_.at(i); }
    std::size_t col_offset(std::size_t i) const { return col_offsets_.at(i); }

    bool operator()(std::size_t r, std::size_t c) const {
        if (r >= rows() || c >= cols())
            throw std::out_of_range("entry outside block-diagonal matrix");
        const std::size_t i = locate(row_offsets_, r);
        if (c < col_offsets_[i] || c >= col_offsets_[i + 1])
            return false;
        return blocks_[i](r - row_offsets_[i], c - col_offsets_[i]);
    }

    /// Same block count and identical block shapes.
    bool same_layout(const BlockDiagonalMatrix& other) const noexcept {
        return row_offsets_ == other.row_offsets_ && col_offsets_ == other.col_offsets_;
    }

    friend bool operator==(const BlockDiagonalMatrix& a, const BlockDiagonalMatrix& b) {
        return a.blocks_ == b.blocks_;
    }

private:
    // Index of the block whose range contains `x`; empty blocks are skipped.
    static std::size_t locate(const std::vector<std::size_t>& offsets, std::size_t x) {
        auto it = std::upper_bound(offsets.begin(), offsets.end(), x);
        return static_cast<std::size_t>(it - offsets.begin()) - 1;
    }

    std::vector<BitMatrix> blocks_;
    std::vector<std::size_t> row_offsets_;
    std::vector<std::size_t> col_offsets_;
};

inline BlockDiagonalMatrix assemble_block(std::vector<BitMatrix> blocks) {
    return BlockDiagonalMatrix(std::move(blocks));
}

/// The soft matrix of a whole multiset: its part matrices on the diagonal.
inline BlockDiagonalMatrix block_matrix(const SoftMultiset& multiset) {
    std::vector<BitMatrix> blocks;
    blocks.reserve(multiset.universe_count());
    for (std::size_t i = 0; i < multiset.universe_count(); ++i)
        blocks.push_back(part_matrix(multiset, i));
    return assemble_block(std::move(blocks));
}

/// Materializes the full rows() x cols() matrix.
inline BitMatrix dense(const BlockDiagonalMatrix& m) {
    BitMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.block_count(); ++i) {
        const BitMatrix& b = m.block(i);
        for (std::size_t r = 0; r < b.rows(); ++r)
            detail::deposit_bits(out.row_words(m.row_offset(i) + r), m.col_offset(i),
                                 b.row_words(r), b.cols());
    }
    return out;
}

} // namespace softmatrix
