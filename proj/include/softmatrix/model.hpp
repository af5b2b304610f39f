// SPDX-License-Identifier: Apache-2.0
#pragma once

/*! \file
 *  \brief Universes, parameter spaces and soft multisets.
 *
 *  A soft multiset over universes U_1..U_N maps each chosen composite
 *  parameter (one parameter per universe) to a tuple of subsets, one subset
 *  of each universe. A plain soft set is the N = 1 case.
 *
 *  All labels are opaque strings and every ordering is declaration order.
 *  Element order fixes matrix rows, parameter order fixes matrix columns.
 */

#include <softmatrix/error.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace softmatrix {

using Label = std::string;

struct UniverseSpec {
    Label id;
    std::vector<Label> elements;

    friend bool operator==(const UniverseSpec&, const UniverseSpec&) = default;
};

struct ParameterSpec {
    Label universe;
    std::vector<Label> names;

    friend bool operator==(const ParameterSpec&, const ParameterSpec&) = default;
};

/// A choice a_k: one parameter per universe and the approximation F_A(a_k),
/// one element list per universe, both in universe order.
struct CompositeParameter {
    Label name;
    std::vector<Label> coordinates;
    std::vector<std::vector<Label>> approximations;

    friend bool operator==(const CompositeParameter&, const CompositeParameter&) = default;
};

/// Unvalidated input. `parameters` may list universes in any order.
struct MultisetDescription {
    std::vector<UniverseSpec> universes;
    std::vector<ParameterSpec> parameters;
    std::vector<CompositeParameter> choices;
};

/// The restriction of a soft multiset to one universe: every parameter of
/// that universe paired with its approximate value set.
struct UniversePart {
    std::size_t universe = 0; ///< 0-based universe index
    Label universe_id;
    /// One entry per parameter in declaration order; subsets are listed in
    /// element declaration order.
    std::vector<std::pair<Label, std::vector<Label>>> mapping;

    const std::vector<Label>* find(const Label& parameter) const {
        auto it = std::find_if(mapping.begin(), mapping.end(),
                               [&](const auto& entry) { return entry.first == parameter; });
        return it == mapping.end() ? nullptr : &it->second;
    }

    friend bool operator==(const UniversePart&, const UniversePart&) = default;
};

class SoftMultiset;
SoftMultiset validate(MultisetDescription description);

/// A validated soft multiset. Only `validate` constructs one; the value is
/// immutable afterwards.
class SoftMultiset {
public:
    std::size_t universe_count() const noexcept { return universes_.size(); }
    const std::vector<UniverseSpec>& universes() const noexcept { return universes_; }
    /// One spec per universe, in universe order.
    const std::vector<ParameterSpec>& parameters() const noexcept { return parameters_; }
    const std::vector<CompositeParameter>& choices() const noexcept { return choices_; }

    const UniverseSpec& universe(std::size_t i) const { return universes_.at(i); }
    const ParameterSpec& parameter_space(std::size_t i) const { return parameters_.at(i); }

    std::optional<std::size_t> element_index(std::size_t universe, const Label& label) const {
        return lookup(element_index_.at(universe), label);
    }
    std::optional<std::size_t> parameter_index(std::size_t universe, const Label& label) const {
        return lookup(parameter_index_.at(universe), label);
    }

    /// Same universes (ids and element orders) and same parameter spaces.
    bool same_structure(const SoftMultiset& other) const {
        return universes_ == other.universes_ && parameters_ == other.parameters_;
    }

    MultisetDescription description() const { return {universes_, parameters_, choices_}; }

    friend bool operator==(const SoftMultiset& a, const SoftMultiset& b) {
        return a.universes_ == b.universes_ && a.parameters_ == b.parameters_ &&
               a.choices_ == b.choices_;
    }

private:
    using IndexMap = std::unordered_map<Label, std::size_t>;

    static std::optional<std::size_t> lookup(const IndexMap& map, const Label& label) {
        auto it = map.find(label);
        if (it == map.end())
            return std::nullopt;
        return it->second;
    }

    SoftMultiset() = default;
    friend SoftMultiset validate(MultisetDescription description);

    std::vector<UniverseSpec> universes_;
    std::vector<ParameterSpec> parameters_;
    std::vector<CompositeParameter> choices_;
    std::vector<IndexMap> element_index_;
    std::vector<IndexMap> parameter_index_;
};

/// Checks every structural constraint of a soft multiset and returns the
/// validated value. Parameter specs are reordered to universe order; all other
/// orderings are preserved exactly. Throws ValidationError naming the
/// offending label.
inline SoftMultiset validate(MultisetDescription description) {
    SoftMultiset result;
    const std::size_t count = description.universes.size();

    std::unordered_set<Label> universe_ids;
    std::unordered_map<Label, Label> owner; // element -> universe id
    for (const auto& universe : description.universes) {
        if (!universe_ids.insert(universe.id).second)
            throw ValidationError("duplicate universe id", universe.id);
        SoftMultiset::IndexMap index;
        for (const auto& element : universe.elements) {
            if (!index.emplace(element, index.size()).second)
                throw ValidationError("duplicate element in universe " + universe.id, element);
            auto [it, fresh] = owner.emplace(element, universe.id);
            if (!fresh)
                throw ValidationError("universes " + it->second + " and " + universe.id +
                                          " are not disjoint",
                                      element);
        }
        result.element_index_.push_back(std::move(index));
    }

    std::vector<std::optional<ParameterSpec>> ordered(count);
    for (auto& spec : description.parameters) {
        auto it = std::find_if(description.universes.begin(), description.universes.end(),
                               [&](const UniverseSpec& u) { return u.id == spec.universe; });
        if (it == description.universes.end())
            throw ValidationError("parameter space refers to an unknown universe", spec.universe);
        auto& slot = ordered[static_cast<std::size_t>(it - description.universes.begin())];
        if (slot)
            throw ValidationError("more than one parameter space for universe", spec.universe);
        slot = std::move(spec);
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (!ordered[i])
            throw ValidationError("missing parameter space for universe",
                                  description.universes[i].id);
        SoftMultiset::IndexMap index;
        for (const auto& name : ordered[i]->names)
            if (!index.emplace(name, index.size()).second)
                throw ValidationError("duplicate parameter in universe " + ordered[i]->universe,
                                      name);
        result.parameter_index_.push_back(std::move(index));
        result.parameters_.push_back(std::move(*ordered[i]));
    }

    std::unordered_set<Label> choice_names;
    std::vector<std::vector<Label>> tuples;
    for (const auto& choice : description.choices) {
        if (!choice_names.insert(choice.name).second)
            throw ValidationError("duplicate choice name", choice.name);
        if (choice.coordinates.size() != count)
            throw ValidationError("choice must name exactly one parameter per universe",
                                  choice.name);
        if (choice.approximations.size() != count)
            throw ValidationError("choice must give exactly one approximation per universe",
                                  choice.name);
        for (std::size_t i = 0; i < count; ++i) {
            const auto& universe = description.universes[i];
            if (!result.parameter_index_[i].contains(choice.coordinates[i]))
                throw ValidationError("choice " + choice.name + " uses a parameter outside E of " +
                                          universe.id,
                                      choice.coordinates[i]);
            std::unordered_set<Label> seen;
            for (const auto& element : choice.approximations[i]) {
                if (!result.element_index_[i].contains(element))
                    throw ValidationError("choice " + choice.name +
                                              " approximates with an element outside universe " +
                                              universe.id,
                                          element);
                if (!seen.insert(element).second)
                    throw ValidationError("choice " + choice.name + " repeats an element", element);
            }
        }
        if (std::find(tuples.begin(), tuples.end(), choice.coordinates) != tuples.end())
            throw ValidationError("duplicate coordinate tuple", choice.name);
        tuples.push_back(choice.coordinates);
    }

    result.universes_ = std::move(description.universes);
    result.choices_ = std::move(description.choices);
    return result;
}

/// The U_i-part of a soft multiset. A parameter's approximate value set is the
/// union of the i-th approximations of all choices whose i-th coordinate is
/// that parameter; parameters used by no choice map to the empty set.
inline UniversePart part(const SoftMultiset& multiset, std::size_t universe) {
    if (universe >= multiset.universe_count())
        throw std::out_of_range("universe index " + std::to_string(universe + 1) +
                                " out of range 1.." +
                                std::to_string(multiset.universe_count()));

    const auto& elements = multiset.universe(universe).elements;
    const auto& names = multiset.parameter_space(universe).names;

    std::vector<std::vector<bool>> member(names.size(), std::vector<bool>(elements.size(), false));
    for (const auto& choice : multiset.choices()) {
        const std::size_t column = *multiset.parameter_index(universe, choice.coordinates[universe]);
        for (const auto& element : choice.approximations[universe])
            member[column][*multiset.element_index(universe, element)] = true;
    }

    UniversePart result;
    result.universe = universe;
    result.universe_id = multiset.universe(universe).id;
    result.mapping.reserve(names.size());
    for (std::size_t c = 0; c < names.size(); ++c) {
        std::vector<Label> subset;
        for (std::size_t r = 0; r < elements.size(); ++r)
            if (member[c][r])
                subset.push_back(elements[r]);
        result.mapping.emplace_back(names[c], std::move(subset));
    }
    return result;
}

} // namespace softmatrix
