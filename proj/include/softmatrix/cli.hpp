// SPDX-License-Identifier: Apache-2.0
#pragma once

/*! \file
 *  \brief The `softmatrix` command line.
 *
 *  Subcommands:
 *
 *      parts   --in A.json --universe i
 *      matrix  --in A.json [--universe i]
 *      product --a A.json --b B.json [--kind K] [--universe i] [--pbm PATH]
 *      decide  --a A.json --b B.json [--kind K] [--out report.json]
 *      spy     --a A.json --b B.json [--kind K] [--universe i] --pbm PATH
 *
 *  K is one of and, or, andnot, ornot (default and). Universe indices are
 *  1-based. Exit status: 0 success, 1 usage error, 2 load, validation or file
 *  error, 3 structure mismatch between A and B.
 */

#include <softmatrix/decision.hpp>
#include <softmatrix/io.hpp>
#include <softmatrix/products.hpp>
#include <softmatrix/soft_matrix.hpp>
#include <softmatrix/spy.hpp>

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace softmatrix::cli {

enum ExitCode : int { ok = 0, usage = 1, load_failure = 2, mismatch = 3 };

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::size_t universe_index(const SoftMultiset& m, std::size_t one_based) {
    if (one_based < 1 || one_based > m.universe_count())
        throw UsageError("--universe " + std::to_string(one_based) + " outside 1.." +
                         std::to_string(m.universe_count()));
    return one_based - 1;
}

inline SoftMultiset load(const std::string& path) {
    try {
        return io::load_multiset(path);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what(), e.label());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline void print_grid(std::ostream& out, const BitMatrix& m) {
    out << m.rows() << 'x' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            out << (c == 0 ? "" : " ") << (m(r, c) ? '1' : '0');
        out << '\n';
    }
}

inline std::string join(const std::vector<Label>& labels) {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i)
        s += (i == 0 ? "" : ", ") + labels[i];
    return s;
}

/// Product of A and B, restricted to one universe when `universe` is set.
inline BitMatrix product_matrix(const SoftMultiset& a, const SoftMultiset& b, ProductKind kind,
                                std::optional<std::size_t> universe) {
    if (!a.same_structure(b))
        throw StructureMismatch("A and B must share universes and parameter spaces");
    if (universe) {
        const std::size_t i = universe_index(a, *universe);
        return product_part(part_matrix(a, i), part_matrix(b, i), kind).matrix();
    }
    return dense(product_block(block_matrix(a), block_matrix(b), kind));
}

inline void write_pbm(const std::string& path, const BitMatrix& m) {
    io::detail::write_file(path, spy_pbm(m));
}

} // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Soft matrices on soft multisets: products and max-min group decisions",
                 "softmatrix"};
    app.require_subcommand(1);

    const std::vector<std::string> kinds{"and", "or", "andnot", "ornot"};
    std::string in_path, a_path, b_path, kind_name = "and", pbm_path, out_path;
    std::optional<std::size_t> universe;

    auto* parts_cmd = app.add_subcommand("parts", "Print the universe part of a multiset");
    parts_cmd->add_option("--in", in_path, "Multiset document")->required();
    parts_cmd->add_option("--universe", universe, "1-based universe index")->required();

    auto* matrix_cmd = app.add_subcommand("matrix", "Print a part matrix or the full block matrix");
    matrix_cmd->add_option("--in", in_path, "Multiset document")->required();
    matrix_cmd->add_option("--universe", universe, "1-based universe index");

    auto add_pair = [&](CLI::App* cmd) {
        cmd->add_option("--a", a_path, "First decision maker's multiset")->required();
        cmd->add_option("--b", b_path, "Second decision maker's multiset")->required();
        cmd->add_option("--kind", kind_name, "and | or | andnot | ornot")
            ->check(CLI::IsMember(kinds));
    };

    auto* product_cmd = app.add_subcommand("product", "Print a product matrix as a sparsity grid");
    add_pair(product_cmd);
    product_cmd->add_option("--universe", universe, "Restrict to one universe (1-based)");
    product_cmd->add_option("--pbm", pbm_path, "Also write a P1 portable bitmap");

    auto* decide_cmd = app.add_subcommand("decide", "Run the max-min decision pipeline");
    add_pair(decide_cmd);
    decide_cmd->add_option("--out", out_path, "Write the report document here");

    auto* spy_cmd = app.add_subcommand("spy", "Write the product's sparsity pattern as a bitmap");
    add_pair(spy_cmd);
    spy_cmd->add_option("--universe", universe, "Restrict to one universe (1-based)");
    spy_cmd->add_option("--pbm", pbm_path, "Output P1 portable bitmap")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage;
    }

    try {
        const ProductKind kind = *parse_product_kind(kind_name);

        if (parts_cmd->parsed()) {
            const SoftMultiset m = detail::load(in_path);
            const UniversePart p = part(m, detail::universe_index(m, *universe));
            for (const auto& [name, subset] : p.mapping)
                out << name << ": {" << detail::join(subset) << "}\n";
        } else if (matrix_cmd->parsed()) {
            const SoftMultiset m = detail::load(in_path);
            if (universe)
                detail::print_grid(out, part_matrix(m, detail::universe_index(m, *universe)));
            else
                detail::print_grid(out, dense(block_matrix(m)));
        } else if (product_cmd->parsed() || spy_cmd->parsed()) {
            const SoftMultiset a = detail::load(a_path);
            const SoftMultiset b = detail::load(b_path);
            const BitMatrix c = detail::product_matrix(a, b, kind, universe);
            if (product_cmd->parsed()) {
                out << c.rows() << 'x' << c.cols() << '\n';
                write_spy_text(out, c);
            }
            if (!pbm_path.empty())
                detail::write_pbm(pbm_path, c);
        } else if (decide_cmd->parsed()) {
            const SoftMultiset a = detail::load(a_path);
            const SoftMultiset b = detail::load(b_path);
            const DecisionReport report = decide(a, b, kind);
            if (!out_path.empty())
                io::save_report(out_path, report);
            for (const auto& u : report.universes)
                out << u.universe_id << ": " << (u.empty_optimum ? "(none)" : detail::join(u.optimum))
                    << '\n';
        }
    } catch (const detail::UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const StructureMismatch& e) {
        err << "error: " << e.what() << '\n';
        return mismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return load_failure;
    }
    return ok;
}

/// Convenience overload; `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"softmatrix"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace softmatrix::cli
