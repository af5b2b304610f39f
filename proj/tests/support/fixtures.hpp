// SPDX-License-Identifier: Apache-2.0
#pragma once

// The wedding-planning instance: Mrs. X's multiset (8 choices) and Mr. X's
// multiset (6 choices) over houses, cars and hotels, together with every
// matrix, column set and decision vector printed for it.

#include <softmatrix/bit_matrix.hpp>
#include <softmatrix/model.hpp>

#include <string>
#include <vector>

namespace fixtures {

using softmatrix::BitMatrix;
using softmatrix::Label;

inline std::vector<softmatrix::UniverseSpec> universes() {
    return {{"U1", {"h1", "h2", "h3", "h4", "h5", "h6"}},
            {"U2", {"c1", "c2", "c3", "c4", "c5"}},
            {"U3", {"v1", "v2", "v3", "v4"}}};
}

inline std::vector<softmatrix::ParameterSpec> parameters() {
    return {{"U1", {"e11", "e12", "e13", "e14", "e15"}},
            {"U2", {"e21", "e22", "e23", "e24", "e25", "e26"}},
            {"U3", {"e31", "e32", "e33", "e34", "e35"}}};
}

inline softmatrix::MultisetDescription wedding_a_description() {
    const std::vector<Label> U1{"h1", "h2", "h3", "h4", "h5", "h6"};
    const std::vector<Label> U2{"c1", "c2", "c3", "c4", "c5"};
    return {universes(),
            parameters(),
            {{"a1", {"e11", "e21", "e31"}, {{"h3", "h4", "h5", "h6"}, {"c1", "c2", "c3"}, {"v2", "v3"}}},
             {"a2", {"e11", "e22", "e34"}, {{"h3", "h4", "h5", "h6"}, {"c4", "c5"}, {"v1", "v2"}}},
             {"a3", {"e12", "e23", "e35"}, {{"h1", "h2"}, {}, {"v2", "v3"}}},
             {"a4", {"e15", "e24", "e32"}, {U1, {"c3", "c4"}, {"v1", "v4"}}},
             {"a5", {"e14", "e23", "e33"}, {{"h3", "h4", "h5"}, {}, {"v2", "v4"}}},
             {"a6", {"e12", "e25", "e32"}, {{"h1", "h2"}, U2, {"v1", "v4"}}},
             {"a7", {"e13", "e21", "e31"}, {{}, {"c1", "c2", "c3"}, {"v2", "v3"}}},
             {"a8", {"e11", "e26", "e32"}, {{"h3", "h4", "h5", "h6"}, {"c4", "c5"}, {"v1", "v4"}}}}};
}

inline softmatrix::MultisetDescription wedding_b_description() {
    const std::vector<Label> U1{"h1", "h2", "h3", "h4", "h5", "h6"};
    return {universes(),
            parameters(),
            {{"b1", {"e11", "e25", "e31"}, {U1, {"c4", "c5"}, {"v1", "v2", "v3"}}},
             {"b2", {"e13", "e22", "e33"}, {{"h2", "h3", "h4", "h5"}, {"c1", "c2"}, {"v2", "v4"}}},
             {"b3", {"e12", "e26", "e32"}, {{}, {"c4", "c5"}, {"v4"}}},
             {"b4", {"e14", "e24", "e34"}, {{"h1", "h2", "h3"}, {"c4", "c5"}, {"v2", "v3"}}},
             {"b5", {"e15", "e23", "e35"}, {{"h1", "h2", "h5", "h6"}, {"c1", "c2", "c3", "c4"}, {"v2"}}},
             {"b6", {"e11", "e21", "e31"}, {U1, {"c3", "c4", "c5"}, {"v1", "v2", "v3"}}}}};
}

inline softmatrix::SoftMultiset wedding_a() { return softmatrix::validate(wedding_a_description()); }
inline softmatrix::SoftMultiset wedding_b() { return softmatrix::validate(wedding_b_description()); }

/// Builds a matrix from rows of '0'/'1' characters.
inline BitMatrix from_rows(const std::vector<std::string>& rows) {
    BitMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.set(r, c, rows[r][c] == '1');
    return m;
}

// Printed part matrices of the first decision maker, one per universe.
inline BitMatrix a1() {
    return from_rows({"01001", "01001", "10011", "10011", "10011", "10001"});
}
inline BitMatrix a2() {
    return from_rows({"100010", "100010", "100110", "010111", "010011"});
}
inline BitMatrix a3() { return from_rows({"01010", "10111", "10001", "01100"}); }

// Printed U1 part matrix of the second decision maker.
inline BitMatrix b1() {
    return from_rows({"10011", "10111", "10110", "10100", "10101", "10001"});
}

// Printed 15 x 16 soft matrix of the first decision maker.
inline BitMatrix a_block() {
    return from_rows({
        "0100100000000000",
        "0100100000000000",
        "1001100000000000",
        "1001100000000000",
        "1001100000000000",
        "1000100000000000",
        "0000010001000000",
        "0000010001000000",
        "0000010011000000",
        "0000001011100000",
        "0000001001100000",
        "0000000000001010",
        "0000000000010111",
        "0000000000010001",
        "0000000000001100",
    });
}

using Sets = std::vector<std::vector<std::size_t>>;

// Printed I_k sets in global numbering.
inline const std::vector<Sets>& and_column_sets() {
    static const std::vector<Sets> sets{
        {{1, 3, 4, 5}, {6, 8, 9, 10}, {}, {16, 18, 19, 20}, {21, 23, 24, 25}},
        {{26, 27, 28}, {32, 34, 35, 36, 37}, {}, {44, 46, 47, 48, 49},
         {50, 51, 52, 53, 54, 55}, {56, 58, 59, 60, 61}},
        {{62, 64, 65, 66}, {67, 68, 69}, {72, 73, 74, 75, 76}, {77, 79, 80, 81}, {82, 84, 85, 86}},
    };
    return sets;
}

inline const std::vector<std::size_t>& and_offsets() {
    static const std::vector<std::size_t> offsets{0, 25, 61};
    return offsets;
}

// Printed decision weights.
inline std::vector<BitMatrix> and_weights() {
    return {from_rows({"00000", "01001", "00000", "00000", "00000", "00000"}),
            from_rows({"000000", "000000", "000000", "010101", "000000"}),
            from_rows({"00000", "10011", "00000", "00000"})};
}

// Printed decision vectors.
inline std::vector<std::vector<std::uint8_t>> and_values() {
    return {{0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 1, 0, 0}};
}

inline std::vector<std::vector<Label>> and_optima() { return {{"h2"}, {"c4"}, {"v2"}}; }

} // namespace fixtures
