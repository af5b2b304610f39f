// SPDX-License-Identifier: Apache-2.0
#pragma once

/*! \file
 *  \brief Max-min group decision over two soft multisets.
 *
 *  Given the product C of two decision makers' soft matrices, for each
 *  universe i and each parameter block k:
 *
 *   - I_k is the set of columns of block k holding at least one 1;
 *   - w(l, k) is the minimum of row l of C over the columns of I_k
 *     (0 when I_k is empty);
 *   - v_l is the maximum of w(l, k) over k;
 *   - the optimum set is every element u_l with v_l = 1.
 *
 *  Column numbers in ColumnSets are 1-based, matching the product column
 *  numbering p = n(k-1)+j; global numbers add the widths of all earlier
 *  universes' product blocks.
 */

#include <softmatrix/model.hpp>
#include <softmatrix/products.hpp>
#include <softmatrix/soft_matrix.hpp>

#include <cstdint>
#include <vector>

namespace softmatrix {

struct ColumnSets {
    std::size_t universe = 0; ///< 0-based universe index
    std::size_t offset = 0;   ///< global column offset of this universe's product block
    /// local[k] lists the 1-based columns of block k + 1 holding a 1.
    std::vector<std::vector<std::size_t>> local;

    std::vector<std::size_t> global(std::size_t k) const {
        std::vector<std::size_t> out = local.at(k);
        for (auto& p : out)
            p += offset;
        return out;
    }

    friend bool operator==(const ColumnSets&, const ColumnSets&) = default;
};

struct DecisionTable {
    std::size_t universe = 0;
    BitMatrix w;                  ///< m_i x n_i decision weights
    std::vector<std::uint8_t> v;  ///< per-element decision values

    friend bool operator==(const DecisionTable&, const DecisionTable&) = default;
};

struct UniverseDecision {
    Label universe_id;
    ColumnSets columns;
    DecisionTable table;
    std::vector<Label> optimum;
    /// Set when no element reached v = 1; `optimum` is then empty.
    bool empty_optimum = false;

    friend bool operator==(const UniverseDecision&, const UniverseDecision&) = default;
};

struct DecisionReport {
    ProductKind kind = ProductKind::And;
    std::vector<UniverseDecision> universes;

    friend bool operator==(const DecisionReport&, const DecisionReport&) = default;
};

inline ColumnSets column_sets(const ProductPart& c, std::size_t universe, std::size_t offset) {
    const std::size_t n = c.source_cols();
    ColumnSets sets;
    sets.universe = universe;
    sets.offset = offset;
    sets.local.resize(n);

    // OR of all rows marks every column holding a 1.
    std::vector<Word> any(c.matrix().words_per_row(), 0);
    for (std::size_t l = 0; l < c.rows(); ++l) {
        auto row = c.matrix().row_words(l);
        for (std::size_t w = 0; w < any.size(); ++w)
            any[w] |= row[w];
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t p = n * k + j;
            if ((any[p / word_bits] >> (p % word_bits)) & 1u)
                sets.local[k].push_back(p + 1);
        }
    return sets;
}

inline BitMatrix weights(const ProductPart& c, const ColumnSets& sets) {
    const std::size_t n = c.source_cols();
    if (sets.local.size() != n)
        throw StructureMismatch("column sets do not match the product part");
    BitMatrix w(c.rows(), n);
    for (std::size_t l = 0; l < c.rows(); ++l)
        for (std::size_t k = 0; k < n; ++k) {
            const auto& columns = sets.local[k];
            if (columns.empty())
                continue;
            bool all = true;
            for (std::size_t p : columns)
                all = all && c.matrix().at(l, p - 1);
            if (all)
                w.set(l, k);
        }
    return w;
}

inline std::vector<std::uint8_t> row_decision(const BitMatrix& w) {
    std::vector<std::uint8_t> v(w.rows(), 0);
    for (std::size_t l = 0; l < w.rows(); ++l)
        for (Word word : w.row_words(l))
            if (word != 0)
                v[l] = 1;
    return v;
}

inline std::vector<Label> optimum(std::span<const std::uint8_t> v, const UniverseSpec& universe) {
    if (v.size() != universe.elements.size())
        throw StructureMismatch("decision vector length differs from universe '" + universe.id +
                                "' size");
    std::vector<Label> out;
    for (std::size_t l = 0; l < v.size(); ++l)
        if (v[l] != 0)
            out.push_back(universe.elements[l]);
    return out;
}

/// Decision for one universe from its product part.
inline UniverseDecision decide_universe(const ProductPart& c, const UniverseSpec& universe,
                                        std::size_t index, std::size_t offset) {
    UniverseDecision d;
    d.universe_id = universe.id;
    d.columns = column_sets(c, index, offset);
    d.table.universe = index;
    d.table.w = weights(c, d.columns);
    d.table.v = row_decision(d.table.w);
    d.optimum = optimum(d.table.v, universe);
    d.empty_optimum = d.optimum.empty();
    return d;
}

/// Runs the whole pipeline: parts, part matrices, block assembly, blockwise
/// product, then per-universe column sets, weights, decision values and optima.
inline DecisionReport decide(const SoftMultiset& a, const SoftMultiset& b,
                             ProductKind kind = ProductKind::And) {
    if (!a.same_structure(b))
        throw StructureMismatch("decision makers must share universes and parameter spaces");

    const BlockDiagonalMatrix product = product_block(block_matrix(a), block_matrix(b), kind);

    DecisionReport report;
    report.kind = kind;
    for (std::size_t i = 0; i < a.universe_count(); ++i) {
        const ProductPart part_product(product.block(i), a.parameter_space(i).names.size());
        report.universes.push_back(
            decide_universe(part_product, a.universe(i), i, product.col_offset(i)));
    }
    return report;
}

} // namespace softmatrix
