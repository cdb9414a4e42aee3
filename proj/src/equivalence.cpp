// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "belseq/truth_table.hpp"

namespace belseq {

namespace {

// Sequences must stay within one machine word of valuations.
constexpr std::size_t hard_cap = 5;

struct Universe {
    Language lang;
    std::vector<std::string> vars;
    std::vector<CanonicalQuery> queries;
    /// Query positions ordered by rendering, for witness selection.
    std::vector<std::size_t> witness_order;
    std::vector<Language> subject_matters;
};

Universe make_universe(const Language& lang, std::size_t var_cap) {
    if (lang.size() > std::min(var_cap, hard_cap)) throw CapExceeded(lang.size(), std::min(var_cap, hard_cap));
    Universe u{lang, lang.sorted(), enumerate_canonical_queries(lang, var_cap), {}, {}};
    std::vector<std::string> rendered;
    for (const auto& q : u.queries) rendered.push_back(render(q.formula));
    u.witness_order.resize(u.queries.size());
    for (std::size_t i = 0; i < u.queries.size(); ++i) u.witness_order[i] = i;
    std::stable_sort(u.witness_order.begin(), u.witness_order.end(),
                     [&](std::size_t x, std::size_t y) { return rendered[x] < rendered[y]; });
    std::map<Language, bool> seen;
    for (const auto& q : u.queries)
        if (seen.emplace(q.language, true).second) u.subject_matters.push_back(q.language);
    return u;
}

// What a sequence believes about one subject matter at saturation: the
// valuations of the universe compatible with its gamma, as truth bits.
struct SubjectView {
    std::size_t k;
    std::uint64_t models;
};

using Profile = std::map<Language, SubjectView>;

std::uint64_t models_over_universe(const std::vector<Formula>& gamma, const Language& subject, const Universe& u) {
    Language lang = u.lang;
    for (const auto& f : gamma) lang = lang.united(syntactic_language(f));
    if (lang.size() > TruthTable::max_vars) throw CapExceeded(lang.size(), TruthTable::max_vars);
    const auto vars = lang.sorted();
    TruthTable acc(vars, true);
    for (const auto& f : gamma) acc &= TruthTable::of(f, vars);
    const TruthTable on_subject = acc.project(subject.sorted());

    // Lift back: a universe valuation is compatible iff its restriction is.
    std::vector<unsigned> pos;
    for (const auto& atom : subject)
        pos.push_back(static_cast<unsigned>(std::find(u.vars.begin(), u.vars.end(), atom) - u.vars.begin()));
    std::uint64_t bits = 0;
    const std::uint64_t rows = std::uint64_t{1} << u.vars.size();
    for (std::uint64_t row = 0; row < rows; ++row) {
        std::uint64_t sub = 0;
        for (std::size_t b = 0; b < pos.size(); ++b)
            if ((row >> pos[b]) & 1u) sub |= std::uint64_t{1} << b;
        if (on_subject.bit(sub)) bits |= std::uint64_t{1} << row;
    }
    return bits;
}

Profile profile_of(const BeliefSequence& seq, const Universe& u) {
    Profile out;
    for (const auto& subject : u.subject_matters) {
        const std::size_t k = saturation_level(seq, subject);
        const auto gamma = build_gamma(seq, subject, k, Mode::liberal).formulas();
        out.emplace(subject, SubjectView{k, models_over_universe(gamma, subject, u)});
    }
    return out;
}

Answer answer_from(const SubjectView& view, std::uint64_t truth_bits) {
    if ((view.models & ~truth_bits) == 0) return Answer::yes;
    if ((view.models & truth_bits) == 0) return Answer::no;
    return Answer::no_information;
}

std::optional<EquivalenceWitness> first_difference(const Profile& pa, const Profile& pb, const Universe& u) {
    for (std::size_t i : u.witness_order) {
        const auto& q = u.queries[i];
        const SubjectView& va = pa.at(q.language);
        const SubjectView& vb = pb.at(q.language);
        const Answer a = answer_from(va, q.truth_bits);
        const Answer b = answer_from(vb, q.truth_bits);
        if (a != b) return EquivalenceWitness{{}, minimal_dnf(u.vars, q.truth_bits), std::max(va.k, vb.k), a, b};
    }
    return std::nullopt;
}

bool same_beliefs(const Profile& pa, const Profile& pb) {
    for (const auto& [subject, va] : pa)
        if (va.models != pb.at(subject).models) return false;
    return true;
}

std::size_t model_count(std::uint64_t bits) { return static_cast<std::size_t>(std::popcount(bits)); }

}  // namespace

EquivalenceVerdict equivalent_sequences(const BeliefSequence& a, const BeliefSequence& b, std::size_t var_cap) {
    const Universe u = make_universe(a.language().united(b.language()), var_cap);
    EquivalenceVerdict verdict;
    verdict.witness = first_difference(profile_of(a, u), profile_of(b, u), u);
    verdict.result = !verdict.witness.has_value();
    return verdict;
}

EquivalenceVerdict strongly_equivalent_bounded(const BeliefSequence& a, const BeliefSequence& b, std::size_t depth,
                                               std::size_t var_cap) {
    const Universe u = make_universe(a.language().united(b.language()), var_cap);

    // Weakest revisions first, then by truth bits.
    std::vector<const CanonicalQuery*> candidates;
    for (const auto& q : u.queries)
        if (!q.language.empty()) candidates.push_back(&q);
    std::stable_sort(candidates.begin(), candidates.end(), [](const CanonicalQuery* x, const CanonicalQuery* y) {
        return model_count(x->truth_bits) > model_count(y->truth_bits);
    });

    EquivalenceVerdict verdict;
    verdict.depth = depth;
    std::vector<std::vector<Formula>> layer{{}};
    for (std::size_t d = 0; d <= depth; ++d) {
        std::vector<std::vector<Formula>> next;
        for (const auto& chain : layer) {
            BeliefSequence ra = a;
            BeliefSequence rb = b;
            for (const auto& f : chain) {
                ra = ra.revised(f);
                rb = rb.revised(f);
            }
            const Profile pa = profile_of(ra, u);
            const Profile pb = profile_of(rb, u);
            if (!same_beliefs(pa, pb)) {
                verdict.result = false;
                verdict.witness = first_difference(pa, pb, u);
                verdict.witness->revisions = chain;
                return verdict;
            }
            if (d < depth)
                for (const auto* c : candidates) {
                    auto extended = chain;
                    extended.push_back(minimal_dnf(u.vars, c->truth_bits));
                    next.push_back(std::move(extended));
                }
        }
        layer = std::move(next);
    }
    return verdict;
}

bool subsumes(const BeliefSequence& a, const BeliefSequence& b, std::size_t var_cap) {
    const Universe u = make_universe(a.language().united(b.language()), var_cap);
    const Profile pa = profile_of(a, u);
    const Profile pb = profile_of(b, u);
    for (const auto& q : u.queries)
        if (answer_from(pb.at(q.language), q.truth_bits) == Answer::yes &&
            answer_from(pa.at(q.language), q.truth_bits) != Answer::yes)
            return false;
    return true;
}

std::string describe(const EquivalenceVerdict& verdict, bool strong) {
    const std::string what = strong ? "strongly equivalent" : "equivalent";
    std::string depth = strong ? " (searched depth " + std::to_string(verdict.depth) + ")" : "";
    if (verdict.result) return (strong ? what + " up to depth " + std::to_string(verdict.depth) : what);
    std::string out = "not " + what + depth;
    if (verdict.witness) {
        const auto& w = *verdict.witness;
        out += "; witness:";
        for (std::size_t i = 0; i < w.revisions.size(); ++i)
            out += (i == 0 ? " revise " : ", revise ") + render(w.revisions[i]);
        out += (w.revisions.empty() ? " query " : ", query ") + render(w.query) + " at k=" + std::to_string(w.k);
        out += " (" + std::string(to_string(w.answer_a)) + " vs " + std::string(to_string(w.answer_b)) + ")";
    }
    return out;
}

}  // namespace belseq
