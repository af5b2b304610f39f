// SPDX-License-Identifier: Apache-2.0
#pragma once

// Sparsity-pattern rendering: a '#'/'.' text grid and an ASCII (P1) portable bitmap.

#include <softmatrix/bit_matrix.hpp>

#include <ostream>
#include <sstream>
#include <string>

namespace softmatrix {

inline void write_spy_text(std::ostream& os, const BitMatrix& m) {
    std::string line(m.cols(), '.');
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            line[c] = m(r, c) ? '#' : '.';
        os << line << '\n';
    }
}

inline std::string spy_text(const BitMatrix& m) {
    std::ostringstream os;
    write_spy_text(os, m);
    return os.str();
}

/// P1 bitmap: "P1\n<cols> <rows>\n" followed by one line of space-separated
/// 0/1 per matrix row. A 1 pixel (black) marks a 1 entry.
inline void write_spy_pbm(std::ostream& os, const BitMatrix& m) {
    os << "P1\n" << m.cols() << ' ' << m.rows() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c != 0)
                os << ' ';
            os << (m(r, c) ? '1' : '0');
        }
        os << '\n';
    }
}

inline std::string spy_pbm(const BitMatrix& m) {
    std::ostringstream os;
    write_spy_pbm(os, m);
    return os.str();
}

} // namespace softmatrix
