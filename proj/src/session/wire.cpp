// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/session/wire.hpp"

namespace belseq::wire {

json rel_json(const RelLevel& level) {
    if (!level.finite()) return "infinity";
    return level.value();
}

json language_json(const Language& lang) { return lang.sorted(); }

json sequence_json(const BeliefSequence& seq) {
    json elements = json::array();
    for (const auto& e : seq.elements())
        elements.push_back({{"index", e.index}, {"formula", render(e.formula)}, {"language", language_json(e.language)}});
    return {{"elements", std::move(elements)}, {"language", language_json(seq.language())}};
}

json query_json(const QueryContext& ctx, const QueryResult& result) {
    json gamma = json::array();
    for (const auto& e : result.gamma.accepted)
        gamma.push_back({{"index", e.index}, {"formula", render(e.formula)}, {"rel", rel_json(e.rel)}});
    json trace = json::array();
    for (const auto& e : result.gamma.trace)
        trace.push_back({{"index", e.index},
                         {"formula", render(e.formula)},
                         {"rel", rel_json(e.rel)},
                         {"decision", to_string(e.decision)}});
    return {{"answer", to_string(result.answer)},
            {"k_used", ctx.k},
            {"mode", to_string(ctx.mode)},
            {"query", render(ctx.query)},
            {"query_language", language_json(ctx.effective_language())},
            {"gamma", std::move(gamma)},
            {"trace", std::move(trace)}};
}

json relevance_json(const Formula& probe, const BeliefSequence& seq) {
    json profile = json::array();
    for (const auto& [index, level] : relevance_profile(probe, seq))
        profile.push_back({{"index", index}, {"formula", render(seq[index].formula)}, {"rel", rel_json(level)}});
    json edges = json::array();
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i].language.intersects(seq[j].language)) edges.push_back({i, j});
    return {{"formula", render(probe)},
            {"language", language_json(smallest_language(probe))},
            {"profile", std::move(profile)},
            {"edges", std::move(edges)}};
}

json error_json(std::string_view kind, std::string_view message, std::optional<std::size_t> position) {
    json out{{"error", kind}, {"message", message}};
    if (position) out["position"] = *position;
    return out;
}

Language parse_language(const json& atoms) {
    if (!atoms.is_array()) throw std::invalid_argument("query_language must be an array of atom names");
    Language lang;
    for (const auto& a : atoms) {
        if (!a.is_string() || !is_atom_name(a.get<std::string>()))
            throw std::invalid_argument("query_language holds an invalid atom name");
        lang.insert(a.get<std::string>());
    }
    return lang;
}

}  // namespace belseq::wire
