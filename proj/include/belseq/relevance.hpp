// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "belseq/formula.hpp"
#include "belseq/sequence.hpp"

namespace belseq {

/// Degree of relevance: a natural number or infinity (irrelevant).
class RelLevel {
public:
    constexpr RelLevel() : value_(std::nullopt) {}
    constexpr explicit RelLevel(std::size_t value) : value_(value) {}
    static constexpr RelLevel infinity() { return RelLevel(); }

    constexpr bool finite() const { return value_.has_value(); }
    /// Precondition: finite().
    constexpr std::size_t value() const { return *value_; }
    constexpr bool within(std::size_t k) const { return finite() && *value_ <= k; }

    friend constexpr bool operator==(const RelLevel&, const RelLevel&) = default;
    friend constexpr std::strong_ordering operator<=>(const RelLevel& a, const RelLevel& b) {
        if (a.finite() && b.finite()) return *a.value_ <=> *b.value_;
        if (a.finite() == b.finite()) return std::strong_ordering::equal;
        return a.finite() ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    /// "0", "1", ... or "infinity"
    std::string to_string() const;

private:
    std::optional<std::size_t> value_;
};

/// The set of formulas occurring in a sequence; duplicates collapse.
class FormulaSet {
public:
    FormulaSet() = default;
    FormulaSet(std::initializer_list<Formula> fs);
    explicit FormulaSet(const BeliefSequence& seq);

    bool insert(const Formula& f);
    bool contains(const Formula& f) const;
    bool subset_of(const FormulaSet& other) const;
    std::size_t size() const { return members_.size(); }
    const std::vector<Formula>& members() const { return members_; }

private:
    std::vector<Formula> members_;
};

bool logically_disjoint(const Formula& a, const Formula& b);
bool directly_relevant(const Formula& a, const Formula& b);

/// Formulas as nodes, keyed by their smallest languages; an edge joins two
/// nodes whose smallest languages intersect. Chains between two endpoint
/// languages run through nodes of the graph.
class RelevanceGraph {
public:
    struct Node {
        Formula formula;
        Language language;
    };

    RelevanceGraph() = default;
    explicit RelevanceGraph(const FormulaSet& ctx);
    explicit RelevanceGraph(const BeliefSequence& seq);
    explicit RelevanceGraph(std::vector<Node> nodes);

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    /// For every node, the fewest chain formulas χ1..χm (ending in that node)
    /// linking `from` to it; infinity when unreachable.
    std::vector<RelLevel> chain_lengths(const Language& from) const;

    /// rel between two endpoint languages with interior chain formulas drawn from the graph.
    RelLevel rel(const Language& from, const Language& to) const;
    /// Same, reusing chain_lengths(from).
    RelLevel rel(const Language& from, const Language& to, std::span<const RelLevel> lengths) const;

private:
    void connect();

    std::vector<Node> nodes_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Lowest k with a, b k-relevant with respect to ctx.
RelLevel rel(const Formula& a, const Formula& b, const FormulaSet& ctx);
bool k_relevant(const Formula& a, const Formula& b, const FormulaSet& ctx, std::size_t k);

/// rel(query, element, [[seq]]) for each element, in sequence order.
std::vector<std::pair<std::size_t, RelLevel>> relevance_profile(const Formula& query, const BeliefSequence& seq);
std::vector<std::pair<std::size_t, RelLevel>> relevance_profile(const Language& query_language,
                                                                const BeliefSequence& seq);

}  // namespace belseq
