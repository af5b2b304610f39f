// SPDX-License-Identifier: Apache-2.0
#pragma once

/*! \file
 *  \brief JSON documents for soft multisets and decision reports.
 *
 *  Multiset document (format_version 1):
 *
 *      { "format_version": 1,
 *        "universes":  [ { "id": "U1", "elements": ["h1", "h2"] }, ... ],
 *        "parameters": [ { "universe": "U1", "names": ["e11", "e12"] }, ... ],
 *        "choices":    [ { "name": "a1", "params": ["e11", ...],
 *                          "approx": [["h1"], ...] }, ... ] }
 *
 *  Report document (format_version 1): the product kind and, per universe,
 *  1-based I sets in local and global numbering, the w rows, the v entries,
 *  the optimum labels and an empty-optimum flag.
 */

#include <softmatrix/decision.hpp>
#include <softmatrix/model.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

namespace softmatrix::io {

using nlohmann::json;

inline constexpr int format_version = 1;

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

inline json parse_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte);
        throw ParseError("malformed JSON", line, column);
    }
}

inline const json& field(const json& object, const char* key, const std::string& where) {
    if (!object.is_object())
        throw ParseError(where + " must be an object");
    auto it = object.find(key);
    if (it == object.end())
        throw ParseError(where + " is missing \"" + key + "\"");
    return *it;
}

inline const json& array_field(const json& object, const char* key, const std::string& where) {
    const json& value = field(object, key, where);
    if (!value.is_array())
        throw ParseError(where + "." + key + " must be an array");
    return value;
}

inline std::string string_value(const json& value, const std::string& where) {
    if (!value.is_string())
        throw ParseError(where + " must be a string");
    return value.get<std::string>();
}

inline std::vector<std::string> strings(const json& value, const std::string& where) {
    if (!value.is_array())
        throw ParseError(where + " must be an array of strings");
    std::vector<std::string> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i)
        out.push_back(string_value(value[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline std::vector<std::size_t> indices(const json& value, const std::string& where) {
    if (!value.is_array())
        throw ParseError(where + " must be an array of integers");
    std::vector<std::size_t> out;
    for (const auto& item : value) {
        if (!item.is_number_unsigned())
            throw ParseError(where + " must hold positive integers");
        out.push_back(item.get<std::size_t>());
    }
    return out;
}

inline std::uint8_t bit_value(const json& value, const std::string& where) {
    if (!value.is_number_integer() || (value.get<int>() != 0 && value.get<int>() != 1))
        throw ParseError(where + " entries must be 0 or 1");
    return static_cast<std::uint8_t>(value.get<int>());
}

inline void check_version(const json& document, const std::string& where) {
    const json& version = field(document, "format_version", where);
    if (!version.is_number_integer() || version.get<long long>() != format_version)
        throw ParseError("unsupported format_version " + version.dump() + " (expected " +
                         std::to_string(format_version) + ")");
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path.string() + "'");
    out << text;
    if (!out)
        throw Error("failed writing '" + path.string() + "'");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Multiset documents

inline json to_json(const SoftMultiset& multiset) {
    json universes = json::array();
    for (const auto& u : multiset.universes())
        universes.push_back({{"id", u.id}, {"elements", u.elements}});
    json parameters = json::array();
    for (const auto& p : multiset.parameters())
        parameters.push_back({{"universe", p.universe}, {"names", p.names}});
    json choices = json::array();
    for (const auto& c : multiset.choices())
        choices.push_back({{"name", c.name}, {"params", c.coordinates}, {"approx", c.approximations}});
    return {{"format_version", format_version},
            {"universes", std::move(universes)},
            {"parameters", std::move(parameters)},
            {"choices", std::move(choices)}};
}

/// Decodes and validates. Throws ParseError for schema problems and
/// ValidationError for broken invariants.
inline SoftMultiset multiset_from_json(const json& document) {
    using namespace detail;
    check_version(document, "document");

    MultisetDescription d;
    const json& universes = array_field(document, "universes", "document");
    for (std::size_t i = 0; i < universes.size(); ++i) {
        const std::string where = "universes[" + std::to_string(i) + "]";
        d.universes.push_back({string_value(field(universes[i], "id", where), where + ".id"),
                               strings(field(universes[i], "elements", where), where + ".elements")});
    }
    const json& parameters = array_field(document, "parameters", "document");
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        const std::string where = "parameters[" + std::to_string(i) + "]";
        d.parameters.push_back(
            {string_value(field(parameters[i], "universe", where), where + ".universe"),
             strings(field(parameters[i], "names", where), where + ".names")});
    }
    const json& choices = array_field(document, "choices", "document");
    for (std::size_t i = 0; i < choices.size(); ++i) {
        const std::string where = "choices[" + std::to_string(i) + "]";
        CompositeParameter c;
        c.name = string_value(field(choices[i], "name", where), where + ".name");
        c.coordinates = strings(field(choices[i], "params", where), where + ".params");
        const json& approx = array_field(choices[i], "approx", where);
        for (std::size_t j = 0; j < approx.size(); ++j)
            c.approximations.push_back(
                strings(approx[j], where + ".approx[" + std::to_string(j) + "]"));
        d.choices.push_back(std::move(c));
    }
    return validate(std::move(d));
}

inline SoftMultiset parse_multiset(std::string_view text) {
    return multiset_from_json(detail::parse_text(text));
}

inline std::string serialize(const SoftMultiset& multiset) { return to_json(multiset).dump(2) + "\n"; }

inline SoftMultiset load_multiset(const std::filesystem::path& path) {
    return parse_multiset(detail::read_file(path));
}

inline void save_multiset(const std::filesystem::path& path, const SoftMultiset& multiset) {
    detail::write_file(path, serialize(multiset));
}

// ---------------------------------------------------------------------------
// Report documents

inline json to_json(const DecisionReport& report) {
    json universes = json::array();
    for (const auto& u : report.universes) {
        json blocks = json::array();
        for (std::size_t k = 0; k < u.columns.local.size(); ++k)
            blocks.push_back({{"k", k + 1},
                              {"local", u.columns.local[k]},
                              {"global", u.columns.global(k)}});
        json w = json::array();
        for (std::size_t l = 0; l < u.table.w.rows(); ++l) {
            json row = json::array();
            for (std::size_t k = 0; k < u.table.w.cols(); ++k)
                row.push_back(u.table.w(l, k) ? 1 : 0);
            w.push_back(std::move(row));
        }
        json v = json::array();
        for (auto x : u.table.v)
            v.push_back(static_cast<int>(x));
        universes.push_back({{"id", u.universe_id},
                             {"index", u.columns.universe + 1},
                             {"offset", u.columns.offset},
                             {"I", std::move(blocks)},
                             {"w", std::move(w)},
                             {"v", std::move(v)},
                             {"optimum", u.optimum},
                             {"empty_optimum", u.empty_optimum}});
    }
    return {{"format_version", format_version},
            {"kind", std::string(to_string(report.kind))},
            {"universes", std::move(universes)}};
}

inline DecisionReport report_from_json(const json& document) {
    using namespace detail;
    check_version(document, "report");

    DecisionReport report;
    const std::string kind = string_value(field(document, "kind", "report"), "report.kind");
    auto parsed = parse_product_kind(kind);
    if (!parsed)
        throw ParseError("unknown product kind '" + kind + "'");
    report.kind = *parsed;

    const json& universes = array_field(document, "universes", "report");
    for (std::size_t i = 0; i < universes.size(); ++i) {
        const std::string where = "universes[" + std::to_string(i) + "]";
        const json& u = universes[i];
        UniverseDecision d;
        d.universe_id = string_value(field(u, "id", where), where + ".id");
        const json& index = field(u, "index", where);
        if (!index.is_number_unsigned() || index.get<std::size_t>() == 0)
            throw ParseError(where + ".index must be a 1-based integer");
        const json& offset = field(u, "offset", where);
        if (!offset.is_number_unsigned())
            throw ParseError(where + ".offset must be a non-negative integer");
        d.columns.universe = index.get<std::size_t>() - 1;
        d.columns.offset = offset.get<std::size_t>();
        d.table.universe = d.columns.universe;

        const json& blocks = array_field(u, "I", where);
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            const std::string block_where = where + ".I[" + std::to_string(k) + "]";
            auto local = indices(field(blocks[k], "local", block_where), block_where + ".local");
            auto global = indices(field(blocks[k], "global", block_where), block_where + ".global");
            if (global.size() != local.size())
                throw ParseError(block_where + " global and local sets differ in size");
            for (std::size_t x = 0; x < local.size(); ++x)
                if (global[x] != local[x] + d.columns.offset)
                    throw ParseError(block_where + " global set is not local + offset");
            d.columns.local.push_back(std::move(local));
        }

        const json& w = array_field(u, "w", where);
        const std::size_t cols = w.empty() ? blocks.size() : w[0].size();
        d.table.w = BitMatrix(w.size(), cols);
        for (std::size_t l = 0; l < w.size(); ++l) {
            if (!w[l].is_array() || w[l].size() != cols)
                throw ParseError(where + ".w must be a rectangular 0/1 matrix");
            for (std::size_t k = 0; k < cols; ++k)
                d.table.w.set(l, k, bit_value(w[l][k], where + ".w") != 0);
        }
        for (const auto& x : array_field(u, "v", where))
            d.table.v.push_back(bit_value(x, where + ".v"));
        d.optimum = strings(field(u, "optimum", where), where + ".optimum");
        const json& flag = field(u, "empty_optimum", where);
        if (!flag.is_boolean())
            throw ParseError(where + ".empty_optimum must be a boolean");
        d.empty_optimum = flag.get<bool>();
        report.universes.push_back(std::move(d));
    }
    return report;
}

inline std::string serialize(const DecisionReport& report) { return to_json(report).dump(2) + "\n"; }

inline DecisionReport parse_report(std::string_view text) {
    return report_from_json(detail::parse_text(text));
}

inline void save_report(const std::filesystem::path& path, const DecisionReport& report) {
    detail::write_file(path, serialize(report));
}

inline DecisionReport load_report(const std::filesystem::path& path) {
    return parse_report(detail::read_file(path));
}

} // namespace softmatrix::io
