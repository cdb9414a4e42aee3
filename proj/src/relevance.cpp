// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/relevance.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "belseq/logic.hpp"

namespace belseq {

std::string RelLevel::to_string() const { return finite() ? std::to_string(*value_) : "infinity"; }

FormulaSet::FormulaSet(std::initializer_list<Formula> fs) {
    for (const auto& f : fs) insert(f);
}

FormulaSet::FormulaSet(const BeliefSequence& seq) {
    for (const auto& e : seq.elements()) insert(e.formula);
}

bool FormulaSet::insert(const Formula& f) {
    if (contains(f)) return false;
    members_.push_back(f);
    return true;
}

bool FormulaSet::contains(const Formula& f) const {
    return std::find(members_.begin(), members_.end(), f) != members_.end();
}

bool FormulaSet::subset_of(const FormulaSet& other) const {
    return std::all_of(members_.begin(), members_.end(), [&](const Formula& f) { return other.contains(f); });
}

bool logically_disjoint(const Formula& a, const Formula& b) {
    return !smallest_language(a).intersects(smallest_language(b));
}

bool directly_relevant(const Formula& a, const Formula& b) { return !logically_disjoint(a, b); }

RelevanceGraph::RelevanceGraph(const FormulaSet& ctx) {
    nodes_.reserve(ctx.size());
    for (const auto& f : ctx.members()) nodes_.push_back({f, smallest_language(f)});
    connect();
}

RelevanceGraph::RelevanceGraph(const BeliefSequence& seq) {
    std::unordered_set<Formula> seen;
    for (const auto& e : seq.elements())
        if (seen.insert(e.formula).second) nodes_.push_back({e.formula, e.language});
    connect();
}

RelevanceGraph::RelevanceGraph(std::vector<Node> nodes) : nodes_(std::move(nodes)) { connect(); }

void RelevanceGraph::connect() {
    adjacency_.assign(nodes_.size(), {});
    edges_.clear();
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        for (std::size_t j = i + 1; j < nodes_.size(); ++j)
            if (nodes_[i].language.intersects(nodes_[j].language)) {
                adjacency_[i].push_back(j);
                adjacency_[j].push_back(i);
                edges_.emplace_back(i, j);
            }
}

std::vector<RelLevel> RelevanceGraph::chain_lengths(const Language& from) const {
    std::vector<RelLevel> length(nodes_.size(), RelLevel::infinity());
    std::deque<std::size_t> frontier;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].language.intersects(from)) {
            length[i] = RelLevel(1);
            frontier.push_back(i);
        }
    while (!frontier.empty()) {
        const std::size_t cur = frontier.front();
        frontier.pop_front();
        for (std::size_t next : adjacency_[cur])
            if (!length[next].finite()) {
                length[next] = RelLevel(length[cur].value() + 1);
                frontier.push_back(next);
            }
    }
    return length;
}

RelLevel RelevanceGraph::rel(const Language& from, const Language& to) const {
    if (from.intersects(to)) return RelLevel(0);
    return rel(from, to, chain_lengths(from));
}

RelLevel RelevanceGraph::rel(const Language& from, const Language& to, std::span<const RelLevel> lengths) const {
    if (from.intersects(to)) return RelLevel(0);
    RelLevel best = RelLevel::infinity();
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (lengths[i] < best && nodes_[i].language.intersects(to)) best = lengths[i];
    return best;
}

RelLevel rel(const Formula& a, const Formula& b, const FormulaSet& ctx) {
    return RelevanceGraph(ctx).rel(smallest_language(a), smallest_language(b));
}

bool k_relevant(const Formula& a, const Formula& b, const FormulaSet& ctx, std::size_t k) {
    return rel(a, b, ctx).within(k);
}

std::vector<std::pair<std::size_t, RelLevel>> relevance_profile(const Language& query_language,
                                                                const BeliefSequence& seq) {
    const RelevanceGraph graph(seq);
    const auto lengths = graph.chain_lengths(query_language);
    std::vector<std::pair<std::size_t, RelLevel>> out;
    out.reserve(seq.size());
    for (const auto& e : seq.elements()) out.emplace_back(e.index, graph.rel(query_language, e.language, lengths));
    return out;
}

std::vector<std::pair<std::size_t, RelLevel>> relevance_profile(const Formula& query, const BeliefSequence& seq) {
    return relevance_profile(smallest_language(query), seq);
}

}  // namespace belseq
