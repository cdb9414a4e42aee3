// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/inference.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>

#include "belseq/truth_table.hpp"

namespace belseq {

namespace testing {
namespace {
std::atomic<Mutant> active_mutant{Mutant::none};
}
void set_mutant(Mutant m) { active_mutant.store(m); }
Mutant mutant() { return active_mutant.load(std::memory_order_relaxed); }
}  // namespace testing

std::string_view to_string(Mode mode) { return mode == Mode::liberal ? "liberal" : "strict"; }

std::string_view to_string(Answer answer) {
    switch (answer) {
        case Answer::yes: return "yes";
        case Answer::no: return "no";
        case Answer::no_information: return "no_information";
    }
    return "";
}

std::string_view to_string(Decision decision) {
    switch (decision) {
        case Decision::accepted: return "accepted";
        case Decision::rejected_inconsistent: return "rejected_inconsistent";
        case Decision::rejected_irrelevant: return "rejected_irrelevant";
        case Decision::halted: return "halted";
    }
    return "";
}

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "liberal") return Mode::liberal;
    if (text == "strict") return Mode::strict;
    return std::nullopt;
}

Language QueryContext::effective_language() const {
    Language own = smallest_language(query);
    if (!query_language) return own;
    if (!own.subset_of(*query_language))
        throw std::invalid_argument("query language " + query_language->to_string() + " does not contain " +
                                    own.to_string());
    return *query_language;
}

std::vector<Formula> GammaResult::formulas() const {
    std::vector<Formula> out;
    out.reserve(accepted.size());
    for (const auto& a : accepted) out.push_back(a.formula);
    return out;
}

namespace {

// Every element with its rel, sorted by (rel ascending, index descending).
std::vector<RankedElement> ranked(const BeliefSequence& seq, const Language& query_language) {
    const auto profile = relevance_profile(query_language, seq);
    std::vector<RankedElement> out;
    out.reserve(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) out.push_back({seq[i].index, seq[i].formula, profile[i].second});
    const bool oldest_first = testing::mutant() == testing::Mutant::oldest_first;
    std::sort(out.begin(), out.end(), [&](const RankedElement& a, const RankedElement& b) {
        if (a.rel != b.rel) return a.rel < b.rel;
        return oldest_first ? a.index < b.index : a.index > b.index;
    });
    return out;
}

// Consistency test for accepted + {candidate}. Uses one running truth table
// when the candidates' atoms fit, otherwise the general decision procedure.
class ConsistencyTracker {
public:
    explicit ConsistencyTracker(const std::vector<RankedElement>& candidates) {
        Language lang;
        for (const auto& c : candidates) lang = lang.united(syntactic_language(c.formula));
        if (lang.size() <= TruthTable::max_vars) {
            vars_ = lang.sorted();
            table_.emplace(vars_, true);
        }
    }

    bool try_add(const Formula& f) {
        if (table_) {
            TruthTable next = *table_;
            next &= TruthTable::of(f, vars_);
            if (!next.any()) return false;
            table_ = std::move(next);
            return true;
        }
        accepted_.push_back(f);
        if (is_satisfiable(accepted_)) return true;
        accepted_.pop_back();
        return false;
    }

private:
    std::vector<std::string> vars_;
    std::optional<TruthTable> table_;
    std::vector<Formula> accepted_;
};

}  // namespace

std::vector<RankedElement> priority_order(const BeliefSequence& seq, const QueryContext& ctx) {
    auto all = ranked(seq, ctx.effective_language());
    std::erase_if(all, [&](const RankedElement& e) { return !e.rel.within(ctx.k); });
    return all;
}

GammaResult build_gamma(const BeliefSequence& seq, const Language& query_language, std::size_t k, Mode mode) {
    const auto order = ranked(seq, query_language);
    std::vector<RankedElement> candidates;
    for (const auto& e : order)
        if (e.rel.within(k)) candidates.push_back(e);

    GammaResult result;
    result.trace.reserve(order.size());
    ConsistencyTracker consistency(candidates);
    const bool accept_all = testing::mutant() == testing::Mutant::accept_all;
    bool halted = false;
    for (const auto& e : order) {
        Decision d;
        if (!e.rel.within(k)) {
            d = Decision::rejected_irrelevant;
        } else if (halted) {
            d = Decision::halted;
        } else if (consistency.try_add(e.formula) || accept_all) {
            d = Decision::accepted;
            result.accepted.push_back(e);
        } else if (mode == Mode::strict) {
            d = Decision::halted;
            halted = true;
        } else {
            d = Decision::rejected_inconsistent;
        }
        result.trace.push_back({e.index, e.formula, e.rel, d});
    }
    return result;
}

GammaResult build_gamma(const BeliefSequence& seq, const QueryContext& ctx) {
    return build_gamma(seq, ctx.effective_language(), ctx.k, ctx.mode);
}

bool infer(const BeliefSequence& seq, const QueryContext& ctx) {
    return entails(build_gamma(seq, ctx).formulas(), ctx.query);
}

QueryResult evaluate_query(const BeliefSequence& seq, const QueryContext& ctx) {
    QueryResult out{Answer::no_information, build_gamma(seq, ctx)};
    const auto gamma = out.gamma.formulas();
    if (entails(gamma, ctx.query)) out.answer = Answer::yes;
    else if (entails(gamma, Formula::negation(ctx.query))) out.answer = Answer::no;
    return out;
}

Answer answer_query(const BeliefSequence& seq, const QueryContext& ctx) { return evaluate_query(seq, ctx).answer; }

std::size_t saturation_level(const BeliefSequence& seq, const Language& query_language) {
    std::size_t level = 0;
    for (const auto& [index, r] : relevance_profile(query_language, seq))
        if (r.finite()) level = std::max(level, r.value());
    return level;
}

std::size_t saturation_level(const BeliefSequence& seq, const Formula& query) {
    return saturation_level(seq, smallest_language(query));
}

bool in_C(const BeliefSequence& seq, const Formula& query) {
    return infer(seq, {query, saturation_level(seq, query), Mode::liberal, std::nullopt});
}

std::vector<Formula> consequences(const BeliefSequence& seq, std::size_t k, const Language& lang, std::size_t cap) {
    const auto queries = enumerate_canonical_queries(lang, cap);
    // Queries sharing a smallest language share one gamma.
    std::map<Language, std::vector<Formula>> gammas;
    std::vector<Formula> out;
    for (const auto& q : queries) {
        auto it = gammas.find(q.language);
        if (it == gammas.end()) it = gammas.emplace(q.language, build_gamma(seq, q.language, k, Mode::liberal).formulas()).first;
        if (entails(it->second, q.formula)) out.push_back(q.formula);
    }
    return out;
}

}  // namespace belseq
