// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/claims/reports.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "belseq/claims/generators.hpp"
#include "belseq/claims/oracles.hpp"
#include "belseq/equivalence.hpp"

namespace belseq::claims {

namespace {

constexpr std::size_t max_recorded = 10;

struct GenParams {
    std::size_t samples = 0;
    std::size_t vars = 4;
    Language epstein_pool;
};

using Check = std::function<bool(const Instance&)>;
using Generator = std::function<std::vector<Instance>(Rng&, const GenParams&)>;

struct ClaimDef {
    std::string id;
    std::string description;
    Status expected;
    std::string corpus;  // claims sharing a corpus name see the same instances
    Check check;
    std::vector<Instance> fixed;
    Generator generate;
};

Language language_of(const std::vector<std::string>& atoms) {
    return Language(std::set<std::string>(atoms.begin(), atoms.end()));
}

Formula F(std::string_view text) { return parse(text); }

std::vector<Formula> Fs(std::initializer_list<std::string_view> texts) {
    std::vector<Formula> out;
    for (auto t : texts) out.push_back(parse(t));
    return out;
}

FormulaSet set_of(const std::vector<Formula>& fs) {
    FormulaSet s;
    for (const auto& f : fs) s.insert(f);
    return s;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

std::uint64_t mix(std::uint64_t seed, std::string_view name) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    return seed ^ h;
}

QueryContext ask(const Formula& f, std::size_t k, Mode mode, std::optional<Language> lang = std::nullopt) {
    return QueryContext{f, k, mode, std::move(lang)};
}

std::set<std::size_t> accepted_indices(const GammaResult& g) {
    std::set<std::size_t> out;
    for (const auto& e : g.accepted) out.insert(e.index);
    return out;
}

bool consistent(const std::vector<Formula>& fs) {
    Language lang;
    for (const auto& f : fs) lang = lang.united(syntactic_language(f));
    if (lang.size() <= oracle_atom_cap) return satisfiable_oracle(fs);
    return is_satisfiable(fs);
}

bool R_l(const Formula& a, const Formula& b) { return directly_relevant(a, b); }
bool R_s(const Formula& a, const Formula& b) { return syntactic_language(a).intersects(syntactic_language(b)); }

// Deterministic equivalent rewrites, some padded with pool atoms.
std::vector<Formula> variants_of(const Formula& f, const Language& pool) {
    std::vector<Formula> out{f, Formula::negation(Formula::negation(f)), Formula::conjunction(f, f)};
    for (const auto& name : pool.sorted()) {
        const Formula a = Formula::atom(name);
        out.push_back(Formula::conjunction(f, Formula::disjunction(a, Formula::negation(a))));
        out.push_back(Formula::disjunction(f, Formula::conjunction(a, Formula::negation(a))));
        out.push_back(Formula::disjunction(Formula::conjunction(f, a), Formula::conjunction(f, Formula::negation(a))));
    }
    return out;
}

std::vector<Formula> canonical_pool(const Language& pool) {
    std::vector<Formula> out;
    for (const auto& q : enumerate_canonical_queries(pool, std::max<std::size_t>(pool.size(), 1)))
        out.push_back(q.formula);
    return out;
}

Mode random_mode(Rng& rng) { return rng.chance(50) ? Mode::liberal : Mode::strict; }

Formula distinct_variant(Rng& rng, const Formula& f, const std::vector<std::string>& pool) {
    Formula v = syntactic_variant(rng, f, pool);
    if (v == f) v = Formula::negation(Formula::negation(f));
    return v;
}

// ---- Epstein conditions ----------------------------------------------------

std::vector<Instance> pairs_of(const GenParams& p) {
    std::vector<Instance> out;
    const auto fs = canonical_pool(p.epstein_pool);
    for (const auto& a : fs)
        for (const auto& b : fs) out.push_back(Instance{.alpha = a, .beta = b});
    return out;
}

std::vector<Instance> triples_of(const GenParams& p) {
    std::vector<Instance> out;
    const auto fs = canonical_pool(p.epstein_pool);
    for (const auto& a : fs)
        for (const auto& b : fs)
            for (const auto& c : fs) out.push_back(Instance{.alpha = a, .beta = b, .gamma = c});
    return out;
}

std::vector<Instance> singles_of(const GenParams& p) {
    std::vector<Instance> out;
    for (const auto& a : canonical_pool(p.epstein_pool)) out.push_back(Instance{.alpha = a});
    return out;
}

// (alpha, beta, beta') with beta' an equivalent rewrite of beta, both directions.
std::vector<Instance> rewrites_of(const GenParams& p) {
    std::vector<Instance> out;
    const auto fs = canonical_pool(p.epstein_pool);
    for (const auto& a : fs)
        for (const auto& b : fs)
            for (const auto& v : variants_of(b, p.epstein_pool)) {
                out.push_back(Instance{.alpha = a, .beta = b, .gamma = v});
                if (!(v == b)) out.push_back(Instance{.alpha = a, .beta = v, .gamma = b});
            }
    return out;
}

std::vector<ClaimDef> epstein_defs() {
    std::vector<ClaimDef> defs;
    defs.push_back({"Related-R1", "R(a,b) iff R(~a,b)", Status::holds, "related-pairs",
                    [](const Instance& i) { return R_l(*i.alpha, *i.beta) == R_l(Formula::negation(*i.alpha), *i.beta); },
                    {}, [](Rng&, const GenParams& p) { return pairs_of(p); }});
    defs.push_back({"Related-R2", "R(a, b & c) iff R(a, b -> c)", Status::fails, "related-triples",
                    [](const Instance& i) {
                        return R_l(*i.alpha, Formula::conjunction(*i.beta, *i.gamma)) ==
                               R_l(*i.alpha, Formula::implication(*i.beta, *i.gamma));
                    },
                    {Instance{.alpha = F("p"), .beta = F("p"), .gamma = F("~p")}},
                    [](Rng&, const GenParams& p) { return triples_of(p); }});
    defs.push_back({"Related-R3", "R(a,b) iff R(b,a)", Status::holds, "related-pairs",
                    [](const Instance& i) { return R_l(*i.alpha, *i.beta) == R_l(*i.beta, *i.alpha); }, {},
                    [](Rng&, const GenParams& p) { return pairs_of(p); }});
    defs.push_back({"Related-R4", "R(a,a) for every a", Status::fails, "related-singles",
                    [](const Instance& i) { return R_l(*i.alpha, *i.alpha); },
                    {Instance{.alpha = F("p & ~p")}}, [](Rng&, const GenParams& p) { return singles_of(p); }});
    defs.push_back({"Related-R4-nonempty", "R(a,a) when the smallest language of a is nonempty", Status::holds,
                    "related-singles",
                    [](const Instance& i) { return smallest_language(*i.alpha).empty() || R_l(*i.alpha, *i.alpha); },
                    {Instance{.alpha = F("p & ~p")}}, [](Rng&, const GenParams& p) { return singles_of(p); }});
    defs.push_back({"Related-R5", "R(a, b -> c) iff R(a,b) or R(a,c)", Status::fails, "related-triples",
                    [](const Instance& i) {
                        return R_l(*i.alpha, Formula::implication(*i.beta, *i.gamma)) ==
                               (R_l(*i.alpha, *i.beta) || R_l(*i.alpha, *i.gamma));
                    },
                    {Instance{.alpha = F("p"), .beta = F("p"), .gamma = F("p")}},
                    [](Rng&, const GenParams& p) { return triples_of(p); }});
    defs.push_back({"Related-R5a", "R(a, b -> c) implies R(a,b) or R(a,c)", Status::holds, "related-triples",
                    [](const Instance& i) {
                        return !R_l(*i.alpha, Formula::implication(*i.beta, *i.gamma)) || R_l(*i.alpha, *i.beta) ||
                               R_l(*i.alpha, *i.gamma);
                    },
                    {}, [](Rng&, const GenParams& p) { return triples_of(p); }});
    defs.push_back({"Related-R6", "R(a,b) and b equivalent to b' imply R(a,b')", Status::holds, "related-rewrites",
                    [](const Instance& i) {
                        return !R_l(*i.alpha, *i.beta) || !equivalent(*i.beta, *i.gamma) || R_l(*i.alpha, *i.gamma);
                    },
                    {}, [](Rng&, const GenParams& p) { return rewrites_of(p); }});
    defs.push_back({"Overlap-R6", "syntactic overlap satisfies R6", Status::fails, "related-rewrites",
                    [](const Instance& i) {
                        return !R_s(*i.alpha, *i.beta) || !equivalent(*i.beta, *i.gamma) || R_s(*i.alpha, *i.gamma);
                    },
                    {Instance{.alpha = F("q"), .beta = F("p & (q | ~q)"), .gamma = F("p")}},
                    [](Rng&, const GenParams& p) { return rewrites_of(p); }});
    defs.push_back({"Related-implies-Overlap", "direct relevance implies syntactic overlap", Status::holds, "related-rewrites",
                    [](const Instance& i) { return !R_l(*i.alpha, *i.gamma) || R_s(*i.alpha, *i.gamma); }, {},
                    [](Rng&, const GenParams& p) { return rewrites_of(p); }});
    return defs;
}

// ---- Non-monotonic rules with equal-language premises ----------------------

std::optional<Language> rule_language(const Instance& i) {
    if (i.reading == Reading::literal) return std::nullopt;
    return smallest_language(*i.alpha).united(smallest_language(*i.beta));
}

bool derives(const BeliefSequence& s, const Formula& f, const Instance& i) {
    return infer(s, ask(f, i.k, i.mode, rule_language(i)));
}

std::vector<Instance> rule_corpus(Rng& rng, const GenParams& p, Reading reading, bool weakening) {
    const auto pool = atom_pool(3);
    std::vector<Instance> out;
    for (std::size_t n = 0; n < p.samples; ++n) {
        Instance in;
        in.sequence = random_sequence(rng, pool, 6).formulas();
        const Language sigma = random_language(rng, pool);
        in.alpha = random_function_on(rng, sigma);
        if (weakening) {
            in.beta = *in.alpha;
            for (int attempt = 0; attempt < 32; ++attempt) {
                const Formula b = Formula::disjunction(*in.alpha, random_function_on(rng, sigma));
                if (smallest_language(b) == sigma) {
                    in.beta = b;
                    break;
                }
            }
        } else {
            in.beta = random_function_on(rng, sigma);
        }
        in.k = rng.below(4);
        in.mode = random_mode(rng);
        in.reading = reading;
        out.push_back(std::move(in));
    }
    return out;
}

bool equal_languages(const Instance& i) { return smallest_language(*i.alpha) == smallest_language(*i.beta); }

std::vector<ClaimDef> rule_defs(Reading reading) {
    const std::string suffix = "-" + std::string(to_string(reading));
    const auto gen = [reading](bool weakening) {
        return [reading, weakening](Rng& rng, const GenParams& p) { return rule_corpus(rng, p, reading, weakening); };
    };
    const std::string corpus = "rule" + suffix;
    std::vector<ClaimDef> defs;
    defs.push_back({"Rule-WeakInclusion" + suffix, "a satisfiable: s*a derives a", Status::holds, corpus,
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        return !is_satisfiable({*i.alpha}) || derives(revise(s, *i.alpha), *i.alpha, i);
                    },
                    {}, gen(false)});
    defs.push_back({"Rule-CautiousMonotonicity" + suffix, "s derives a and b: s*a derives b", Status::holds, corpus,
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        if (!equal_languages(i) || !derives(s, *i.alpha, i) || !derives(s, *i.beta, i)) return true;
                        return derives(revise(s, *i.alpha), *i.beta, i);
                    },
                    {}, gen(false)});
    defs.push_back({"Rule-RationalMonotonicity" + suffix, "s derives b, not ~a: s*a derives b", Status::holds,
                    corpus,
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        if (!equal_languages(i) || !derives(s, *i.beta, i) ||
                            derives(s, Formula::negation(*i.alpha), i))
                            return true;
                        return derives(revise(s, *i.alpha), *i.beta, i);
                    },
                    {}, gen(false)});
    defs.push_back({"Rule-WeakCut" + suffix, "s*a derives b and s derives a: s derives b", Status::holds, corpus,
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        if (!equal_languages(i) || !derives(revise(s, *i.alpha), *i.beta, i) ||
                            !derives(s, *i.alpha, i))
                            return true;
                        return derives(s, *i.beta, i);
                    },
                    {}, gen(false)});
    std::vector<Instance> adjunction_fixed;
    adjunction_fixed.push_back(Instance{.sequence = Fs({"~p", "q", "p | ~q"}), .alpha = F("p | q"),
                                        .beta = F("p | ~q"), .k = 0, .mode = Mode::liberal, .reading = reading});
    defs.push_back({"Rule-Adjunction" + suffix, "s derives a and b: s derives a & b",
                    reading == Reading::literal ? Status::fails : Status::holds, corpus,
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        if (!equal_languages(i) || !derives(s, *i.alpha, i) || !derives(s, *i.beta, i)) return true;
                        return derives(s, Formula::conjunction(*i.alpha, *i.beta), i);
                    },
                    adjunction_fixed, gen(false)});
    defs.push_back({"Rule-RightWeakening" + suffix, "s derives a, a entails b: s derives b", Status::holds,
                    "rule-weakening" + suffix,
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        if (!equal_languages(i) || !derives(s, *i.alpha, i) || !entails({*i.alpha}, *i.beta))
                            return true;
                        return derives(s, *i.beta, i);
                    },
                    {}, gen(true)});
    return defs;
}

// ---- Relevance invariants --------------------------------------------------

std::vector<Instance> relevance_corpus(Rng& rng, const GenParams& p) {
    const auto pool = atom_pool(3);
    std::vector<Instance> out;
    for (std::size_t n = 0; n < p.samples; ++n) {
        Instance in;
        in.alpha = random_formula(rng, pool);
        in.beta = random_formula(rng, pool);
        const std::size_t ctx = rng.below(5);
        for (std::size_t j = 0; j < ctx; ++j) in.sequence.push_back(random_formula(rng, pool));
        const std::size_t more = rng.below(3);
        for (std::size_t j = 0; j < more; ++j) in.extra.push_back(random_formula(rng, pool));
        in.k = rng.below(4);
        out.push_back(std::move(in));
    }
    return out;
}

// extra holds an element-wise rewrite of the context, gamma a rewrite of alpha.
std::vector<Instance> rewritten_relevance_corpus(Rng& rng, const GenParams& p) {
    const auto pool = atom_pool(3);
    auto out = relevance_corpus(rng, p);
    for (auto& in : out) {
        in.extra.clear();
        for (const auto& f : in.sequence) in.extra.push_back(syntactic_variant(rng, f, pool));
        in.gamma = syntactic_variant(rng, *in.alpha, pool);
    }
    return out;
}

std::vector<Instance> oracle_language_corpus(Rng& rng, const GenParams& p) {
    std::vector<Instance> out;
    for (std::size_t n : {2, 3})
        for (const auto& f : canonical_pool(language_of(atom_pool(n)))) out.push_back(Instance{.alpha = f});
    const auto pool = atom_pool(3);
    for (std::size_t n = 0; n < p.samples; ++n) out.push_back(Instance{.alpha = random_formula(rng, pool)});
    return out;
}

std::vector<Instance> oracle_rel_corpus(Rng& rng, const GenParams& p) {
    std::vector<Instance> out;
    const auto two = canonical_pool(language_of(atom_pool(2)));
    for (const auto& a : two)
        for (const auto& b : two) {
            out.push_back(Instance{.alpha = a, .beta = b});
            for (const auto& c : two) out.push_back(Instance{.sequence = {c}, .alpha = a, .beta = b});
        }
    auto sampled = relevance_corpus(rng, p);
    out.insert(out.end(), sampled.begin(), sampled.end());
    return out;
}

std::vector<Instance> oracle_sat_corpus(Rng& rng, const GenParams& p) {
    const auto pool = atom_pool(std::min<std::size_t>(p.vars, oracle_atom_cap));
    std::vector<Instance> out;
    for (std::size_t n = 0; n < p.samples; ++n) {
        Instance in;
        const std::size_t len = rng.below(6);
        for (std::size_t j = 0; j < len; ++j) in.sequence.push_back(random_formula(rng, pool));
        out.push_back(std::move(in));
    }
    return out;
}

std::vector<ClaimDef> relevance_defs() {
    std::vector<ClaimDef> defs;
    const Generator plain = relevance_corpus;
    defs.push_back({"Rel-MonotoneK", "k-relevant implies (k+1)-relevant", Status::holds, "relevance",
                    [](const Instance& i) {
                        const auto ctx = set_of(i.sequence);
                        return !k_relevant(*i.alpha, *i.beta, ctx, i.k) ||
                               k_relevant(*i.alpha, *i.beta, ctx, i.k + 1);
                    },
                    {}, plain});
    defs.push_back({"Rel-ContextAntiMonotone", "larger context never raises rel", Status::holds, "relevance",
                    [](const Instance& i) {
                        auto wider = i.sequence;
                        wider.insert(wider.end(), i.extra.begin(), i.extra.end());
                        return rel(*i.alpha, *i.beta, set_of(wider)) <= rel(*i.alpha, *i.beta, set_of(i.sequence));
                    },
                    {}, plain});
    defs.push_back({"Rel-Symmetry", "rel(a,b) = rel(b,a)", Status::holds, "relevance",
                    [](const Instance& i) {
                        const auto ctx = set_of(i.sequence);
                        return rel(*i.alpha, *i.beta, ctx) == rel(*i.beta, *i.alpha, ctx);
                    },
                    {}, plain});
    defs.push_back({"Rel-Reflexivity-nonempty", "rel(a,a) = 0 when the language of a is nonempty",
                    Status::holds, "relevance",
                    [](const Instance& i) {
                        return smallest_language(*i.alpha).empty() ||
                               rel(*i.alpha, *i.alpha, set_of(i.sequence)) == RelLevel(0);
                    },
                    {Instance{.alpha = F("p & ~p")}}, plain});
    defs.push_back({"Rel-Reflexivity-unrestricted", "rel(a,a) = 0 for every a", Status::fails, "relevance",
                    [](const Instance& i) { return rel(*i.alpha, *i.alpha, set_of(i.sequence)) == RelLevel(0); },
                    {Instance{.alpha = F("p & ~p")}}, plain});
    defs.push_back({"Rel-DirectIndependentOfContext", "rel = 0 iff directly relevant, in any context",
                    Status::holds, "relevance",
                    [](const Instance& i) {
                        const bool direct = directly_relevant(*i.alpha, *i.beta);
                        return (rel(*i.alpha, *i.beta, set_of(i.sequence)) == RelLevel(0)) == direct &&
                               (rel(*i.alpha, *i.beta, set_of(i.extra)) == RelLevel(0)) == direct;
                    },
                    {}, plain});
    defs.push_back({"Rel-SemanticDetermination", "equivalent rewrites leave rel unchanged", Status::holds,
                    "relevance-rewrites",
                    [](const Instance& i) {
                        if (!equivalent(*i.alpha, *i.gamma) || i.sequence.size() != i.extra.size()) return true;
                        for (std::size_t j = 0; j < i.sequence.size(); ++j)
                            if (!equivalent(i.sequence[j], i.extra[j])) return true;
                        return rel(*i.alpha, *i.beta, set_of(i.sequence)) == rel(*i.gamma, *i.beta, set_of(i.extra));
                    },
                    {}, rewritten_relevance_corpus});
    defs.push_back({"Oracle-SmallestLanguage", "smallest language agrees with subset enumeration", Status::holds,
                    "oracle-language",
                    [](const Instance& i) { return smallest_language(*i.alpha) == smallest_language_oracle(*i.alpha); },
                    {Instance{.alpha = F("p & (q | ~q)")}, Instance{.alpha = F("p <-> p")}}, oracle_language_corpus});
    defs.push_back({"Oracle-Rel", "rel agrees with chain enumeration", Status::holds, "oracle-rel",
                    [](const Instance& i) {
                        const auto ctx = set_of(i.sequence);
                        return rel(*i.alpha, *i.beta, ctx) == rel_oracle(*i.alpha, *i.beta, ctx);
                    },
                    {Instance{.sequence = Fs({"p & q", "r & ~q"}), .alpha = F("p"), .beta = F("r & ~q")}},
                    oracle_rel_corpus});
    defs.push_back({"Oracle-Satisfiable", "both solvers agree with valuation enumeration", Status::holds,
                    "oracle-sat",
                    [](const Instance& i) {
                        const bool expected = satisfiable_oracle(i.sequence);
                        return is_satisfiable(i.sequence) == expected && sat::by_search(i.sequence) == expected &&
                               sat::by_truth_table(i.sequence) == expected;
                    },
                    {}, oracle_sat_corpus});
    return defs;
}

// ---- Sequence invariants ---------------------------------------------------

std::vector<Instance> gamma_corpus(Rng& rng, const GenParams& p) {
    const auto pool = atom_pool(p.vars);
    std::vector<Instance> out;
    for (std::size_t n = 0; n < p.samples; ++n) {
        Instance in;
        in.sequence = random_sequence(rng, pool, 8).formulas();
        in.gamma = random_formula(rng, pool);
        in.k = rng.below(4);
        in.mode = random_mode(rng);
        out.push_back(std::move(in));
    }
    return out;
}

// beta: a different formula with the same smallest language as gamma.
std::vector<Instance> same_language_corpus(Rng& rng, const GenParams& p) {
    auto out = gamma_corpus(rng, p);
    for (auto& in : out) {
        const Language l = smallest_language(*in.gamma);
        in.beta = l.empty() ? Formula::constant(rng.chance(50)) : random_function_on(rng, l);
    }
    return out;
}

// extra: the sequence with one element rewritten; beta: a rewrite of gamma.
std::vector<Instance> rewritten_sequence_corpus(Rng& rng, const GenParams& p) {
    const auto pool = atom_pool(p.vars);
    auto out = gamma_corpus(rng, p);
    for (auto& in : out) {
        in.extra = in.sequence;
        if (!in.extra.empty()) {
            const std::size_t j = rng.below(in.extra.size());
            in.extra[j] = syntactic_variant(rng, in.extra[j], pool);
        }
        in.beta = rng.chance(50) ? syntactic_variant(rng, *in.gamma, pool) : *in.gamma;
    }
    return out;
}

// beta: a revision, over atoms outside the pool half of the time.
std::vector<Instance> irrelevant_revision_corpus(Rng& rng, const GenParams& p) {
    const auto pool = atom_pool(p.vars);
    const auto all = atom_pool(8);
    const std::vector<std::string> fresh(all.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(p.vars, 6)),
                                         all.end());
    auto out = gamma_corpus(rng, p);
    for (auto& in : out) in.beta = random_formula(rng, rng.chance(50) ? fresh : pool);
    return out;
}

std::vector<Instance> agm_corpus(Rng& rng, const GenParams& p) {
    const auto pool = atom_pool(p.vars);
    auto out = gamma_corpus(rng, p);
    for (auto& in : out) in.beta = distinct_variant(rng, *in.gamma, pool);
    return out;
}

std::vector<Instance> subject_matter_corpus(Rng& rng, const GenParams& p) {
    const auto pool = atom_pool(3);
    std::vector<Instance> out;
    for (std::size_t n = 0; n < p.samples; ++n) {
        Instance in;
        in.sequence = random_sequence(rng, pool, 4).formulas();
        in.mode = random_mode(rng);
        out.push_back(std::move(in));
    }
    return out;
}

std::vector<Instance> lemma_corpus(Rng& rng, const GenParams& p) {
    auto out = rule_corpus(rng, p, Reading::literal, false);
    return out;
}

bool verdicts_agree(Answer a, Answer b) { return a == b; }

std::vector<ClaimDef> sequence_defs() {
    std::vector<ClaimDef> defs;
    const Generator corpus = gamma_corpus;
    defs.push_back({"Gamma-Consistency", "accepted set satisfiable; never both g and ~g", Status::holds, "gamma",
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        const auto g = build_gamma(s, ask(*i.gamma, i.k, i.mode));
                        if (!consistent(g.formulas())) return false;
                        return !(infer(s, ask(*i.gamma, i.k, i.mode)) &&
                                 infer(s, ask(Formula::negation(*i.gamma), i.k, i.mode)));
                    },
                    {}, corpus});
    defs.push_back({"Gamma-Relevance", "accepted elements are k-relevant to the query", Status::holds, "gamma",
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        const FormulaSet ctx(s);
                        for (const auto& e : build_gamma(s, ask(*i.gamma, i.k, i.mode)).trace) {
                            const bool relevant = k_relevant(e.formula, *i.gamma, ctx, i.k);
                            if ((e.decision == Decision::rejected_irrelevant) == relevant) return false;
                        }
                        return true;
                    },
                    {}, corpus});
    defs.push_back({"Gamma-Maximality", "liberal mode rejects only elements inconsistent with the accepted set",
                    Status::holds, "gamma",
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        const auto g = build_gamma(s, ask(*i.gamma, i.k, Mode::liberal));
                        auto accepted = g.formulas();
                        for (const auto& e : g.trace) {
                            if (e.decision != Decision::rejected_inconsistent) continue;
                            auto with = accepted;
                            with.push_back(e.formula);
                            if (consistent(with)) return false;
                        }
                        return true;
                    },
                    {}, corpus});
    defs.push_back({"Level-GammaInclusion", "Gamma at k is contained in Gamma at k+1", Status::holds, "gamma",
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        auto prev = accepted_indices(build_gamma(s, ask(*i.gamma, 0, i.mode)));
                        for (std::size_t k = 1; k <= s.size() + 1; ++k) {
                            auto next = accepted_indices(build_gamma(s, ask(*i.gamma, k, i.mode)));
                            if (!std::includes(next.begin(), next.end(), prev.begin(), prev.end())) return false;
                            prev = std::move(next);
                        }
                        return true;
                    },
                    {}, corpus});
    defs.push_back({"Level-NoVerdictFlip", "yes and no answers persist as k grows", Status::holds, "gamma",
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        Answer prev = answer_query(s, ask(*i.gamma, 0, i.mode));
                        for (std::size_t k = 1; k <= s.size() + 1; ++k) {
                            const Answer next = answer_query(s, ask(*i.gamma, k, i.mode));
                            if (prev != Answer::no_information && next != prev) return false;
                            prev = next;
                        }
                        return true;
                    },
                    {}, corpus});
    defs.push_back({"Strict-Prefix-Of-Liberal", "strict accepted list is a prefix of the liberal one", Status::holds,
                    "gamma",
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        const auto strict = build_gamma(s, ask(*i.gamma, i.k, Mode::strict)).accepted;
                        const auto liberal = build_gamma(s, ask(*i.gamma, i.k, Mode::liberal)).accepted;
                        if (strict.size() > liberal.size()) return false;
                        for (std::size_t j = 0; j < strict.size(); ++j)
                            if (strict[j].index != liberal[j].index) return false;
                        return true;
                    },
                    {Instance{.sequence = Fs({"p", "~p & ~q", "p | q"}), .gamma = F("p")}}, corpus});
    defs.push_back({"L-Determinism", "queries with equal smallest languages share Gamma", Status::holds,
                    "same-language",
                    [](const Instance& i) {
                        if (!(smallest_language(*i.gamma) == smallest_language(*i.beta))) return true;
                        const BeliefSequence s(i.sequence);
                        return accepted_indices(build_gamma(s, ask(*i.gamma, i.k, i.mode))) ==
                               accepted_indices(build_gamma(s, ask(*i.beta, i.k, i.mode)));
                    },
                    {}, same_language_corpus});
    defs.push_back({"Syntax-Independence", "equivalent rewrites leave answers unchanged", Status::holds,
                    "rewritten-sequence",
                    [](const Instance& i) {
                        if (i.sequence.size() != i.extra.size() || !equivalent(*i.gamma, *i.beta)) return true;
                        for (std::size_t j = 0; j < i.sequence.size(); ++j)
                            if (!equivalent(i.sequence[j], i.extra[j])) return true;
                        const BeliefSequence a(i.sequence), b(i.extra);
                        return verdicts_agree(answer_query(a, ask(*i.gamma, i.k, i.mode)),
                                              answer_query(b, ask(*i.beta, i.k, i.mode))) &&
                               accepted_indices(build_gamma(a, ask(*i.gamma, i.k, i.mode))) ==
                                   accepted_indices(build_gamma(b, ask(*i.beta, i.k, i.mode)));
                    },
                    {}, rewritten_sequence_corpus});
    defs.push_back({"Irrelevant-Revision-Stability", "a revision irrelevant to the query changes no answer",
                    Status::holds, "irrelevant-revision",
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        const BeliefSequence t = revise(s, *i.beta);
                        if (rel(*i.gamma, *i.beta, FormulaSet(t)).finite()) return true;
                        return answer_query(t, ask(*i.gamma, i.k, i.mode)) ==
                               answer_query(s, ask(*i.gamma, i.k, i.mode));
                    },
                    {Instance{.sequence = Fs({"p", "p -> q"}), .beta = F("r"), .gamma = F("q"), .k = 1}},
                    irrelevant_revision_corpus});
    defs.push_back({"Subject-Matter-Consistency", "yes-answered canonical queries over one subject are consistent",
                    Status::holds, "subject-matter",
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        const Language universe = language_of(atom_pool(3));
                        const auto queries = enumerate_canonical_queries(universe, 3);
                        for (std::size_t k = 0; k <= 3; ++k) {
                            std::map<Language, std::vector<Formula>> yes;
                            for (const auto& q : queries)
                                if (answer_query(s, ask(q.formula, k, i.mode)) == Answer::yes)
                                    yes[q.language].push_back(q.formula);
                            for (const auto& [lang, fs] : yes)
                                if (!satisfiable_oracle(fs)) return false;
                        }
                        return true;
                    },
                    {}, subject_matter_corpus});
    defs.push_back({"AGM-1", "s*g is a belief sequence extending s", Status::holds, "agm",
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        const BeliefSequence t = revise(s, *i.gamma);
                        if (t.size() != s.size() + 1 || !initial_segment(s, t) || !(t[s.size()].formula == *i.gamma))
                            return false;
                        for (std::size_t j = 0; j < t.size(); ++j)
                            if (t[j].index != j) return false;
                        return true;
                    },
                    {}, agm_corpus});
    defs.push_back({"AGM-2", "satisfiable g is derived from s*g", Status::holds, "agm",
                    [](const Instance& i) {
                        if (!is_satisfiable({*i.gamma})) return true;
                        return infer(revise(BeliefSequence(i.sequence), *i.gamma), ask(*i.gamma, i.k, i.mode));
                    },
                    {}, agm_corpus});
    defs.push_back({"AGM-3", "s*g and s*b agree on g when g and b are equivalent", Status::holds, "agm",
                    [](const Instance& i) {
                        if (*i.gamma == *i.beta || !equivalent(*i.gamma, *i.beta)) return true;
                        const BeliefSequence s(i.sequence);
                        return infer(revise(s, *i.gamma), ask(*i.gamma, i.k, i.mode)) ==
                               infer(revise(s, *i.beta), ask(*i.gamma, i.k, i.mode));
                    },
                    {}, agm_corpus});
    defs.push_back({"Lehmann-I2", "s*g answers yes to satisfiable g", Status::holds, "agm",
                    [](const Instance& i) {
                        if (!is_satisfiable({*i.gamma})) return true;
                        return answer_query(revise(BeliefSequence(i.sequence), *i.gamma),
                                            ask(*i.gamma, i.k, i.mode)) == Answer::yes;
                    },
                    {}, agm_corpus});
    defs.push_back({"Gamma-Extension-Lemma", "revising by a consistent same-language a prepends a to Gamma",
                    Status::holds, "lemma",
                    [](const Instance& i) {
                        if (!equal_languages(i)) return true;
                        const BeliefSequence s(i.sequence);
                        const auto before = build_gamma(s, ask(*i.beta, i.k, i.mode));
                        auto with = before.formulas();
                        with.push_back(*i.alpha);
                        if (!is_satisfiable(with)) return true;
                        auto expected = accepted_indices(before);
                        expected.insert(s.size());
                        return accepted_indices(build_gamma(revise(s, *i.alpha), ask(*i.beta, i.k, i.mode))) ==
                               expected;
                    },
                    {}, lemma_corpus});
    return defs;
}

// ---- Worked examples -------------------------------------------------------

bool same_members(std::vector<Formula> a, std::vector<Formula> b) {
    const auto key = [](const Formula& f) { return render(f); };
    std::vector<std::string> x, y;
    std::transform(a.begin(), a.end(), std::back_inserter(x), key);
    std::transform(b.begin(), b.end(), std::back_inserter(y), key);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

std::vector<ClaimDef> battery_defs() {
    const auto none = [](Rng&, const GenParams&) { return std::vector<Instance>{}; };
    std::vector<ClaimDef> defs;
    defs.push_back({"Battery-Maxiconsistent", "[p, ~p&~q, p|q]: Gamma for p at k=0 is {p|q, p}", Status::holds,
                    "battery",
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        const auto r = evaluate_query(s, ask(*i.alpha, i.k, i.mode));
                        return r.answer == Answer::yes && same_members(r.gamma.formulas(), i.extra);
                    },
                    {Instance{.sequence = Fs({"p", "~p & ~q", "p | q"}), .extra = Fs({"p | q", "p"}),
                              .alpha = F("p")}},
                    none});
    defs.push_back({"Battery-Strict-Halt", "[p, ~p&~q, p|q] strict: Gamma for p at k=0 is {p|q}", Status::holds,
                    "battery",
                    [](const Instance& i) {
                        const auto g = build_gamma(BeliefSequence(i.sequence), ask(*i.alpha, i.k, i.mode));
                        return same_members(g.formulas(), i.extra) && g.trace.size() == i.sequence.size() &&
                               g.trace[1].decision == Decision::halted;
                    },
                    {Instance{.sequence = Fs({"p", "~p & ~q", "p | q"}), .extra = Fs({"p | q"}), .alpha = F("p"),
                              .mode = Mode::strict}},
                    none});
    defs.push_back({"Battery-Both-Derivable", "[p&q, r&~q]: p at k=1 and r at k=0", Status::holds, "battery",
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        return answer_query(s, ask(*i.alpha, 1, i.mode)) == Answer::yes &&
                               answer_query(s, ask(*i.beta, 0, i.mode)) == Answer::yes;
                    },
                    {Instance{.sequence = Fs({"p & q", "r & ~q"}), .alpha = F("p"), .beta = F("r")}}, none});
    defs.push_back({"Battery-Non-Monotonic", "[p] derives p; [p, ~(p|q)] does not at any level", Status::holds,
                    "battery",
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        if (!infer(BeliefSequence(std::vector<Formula>{s[0].formula}), ask(*i.alpha, 0, i.mode))) return false;
                        const std::size_t top = saturation_level(s, *i.alpha);
                        for (std::size_t k = 0; k <= top; ++k)
                            if (infer(s, ask(*i.alpha, k, i.mode))) return false;
                        return true;
                    },
                    {Instance{.sequence = Fs({"p", "~(p | q)"}), .alpha = F("p")}}, none});
    defs.push_back({"Battery-Undermined", "[p&q]*(~p|~q): no information on p and ~p", Status::holds, "battery",
                    [](const Instance& i) {
                        const BeliefSequence s = revise(BeliefSequence(i.sequence), *i.beta);
                        for (std::size_t k = 0; k <= s.size(); ++k)
                            if (answer_query(s, ask(*i.alpha, k, i.mode)) != Answer::no_information ||
                                answer_query(s, ask(Formula::negation(*i.alpha), k, i.mode)) != Answer::no_information)
                                return false;
                        return true;
                    },
                    {Instance{.sequence = Fs({"p & q"}), .alpha = F("p"), .beta = F("~p | ~q")}}, none});
    defs.push_back({"Battery-Weak-Monotonicity-Failure", "[p, ~p&~q, q] derives p&q and ~p; revised by p&q not ~p",
                    Status::holds, "battery",
                    [](const Instance& i) {
                        const BeliefSequence s(i.sequence);
                        for (std::size_t k : {0u, 1u}) {
                            if (!infer(s, ask(*i.alpha, k, i.mode)) || !infer(s, ask(*i.beta, k, i.mode)))
                                return false;
                            if (infer(revise(s, *i.alpha), ask(*i.beta, k, i.mode))) return false;
                        }
                        return true;
                    },
                    {Instance{.sequence = Fs({"p", "~p & ~q", "q"}), .alpha = F("p & q"), .beta = F("~p")}}, none});
    defs.push_back({"Battery-Equivalence", "[~p&~q] and [p, ~p&~q] equivalent, not strongly; witness p|q",
                    Status::holds, "battery",
                    [](const Instance& i) {
                        const BeliefSequence a(i.sequence), b(i.extra);
                        if (!equivalent_sequences(a, b).result) return false;
                        const auto strong = strongly_equivalent_bounded(a, b, 1);
                        return !strong.result && strong.witness && strong.witness->revisions.size() == 1 &&
                               equivalent(strong.witness->revisions[0], *i.alpha);
                    },
                    {Instance{.sequence = Fs({"~p & ~q"}), .extra = Fs({"p", "~p & ~q"}), .alpha = F("p | q")}},
                    none});
    defs.push_back({"Battery-Revise-Verbatim", "revising [p, q, p&q, ~r] by ~p appends it unchanged", Status::holds,
                    "battery",
                    [](const Instance& i) {
                        const BeliefSequence t = revise(BeliefSequence(i.sequence), *i.alpha);
                        auto expected = i.sequence;
                        expected.push_back(*i.alpha);
                        return t.formulas() == expected && to_sequence_text(t) == "p\nq\np & q\n~r\n~p";
                    },
                    {Instance{.sequence = Fs({"p", "q", "p & q", "~r"}), .alpha = F("~p")}}, none});
    return defs;
}

const std::vector<ClaimDef>& registry() {
    static const std::vector<ClaimDef> all = [] {
        std::vector<ClaimDef> out;
        for (auto part : {epstein_defs(), rule_defs(Reading::literal), rule_defs(Reading::shared_language),
                          relevance_defs(), sequence_defs(), battery_defs()})
            for (auto& d : part) out.push_back(std::move(d));
        return out;
    }();
    return all;
}

const ClaimDef* find_def(std::string_view id) {
    for (const auto& d : registry())
        if (d.id == id) return &d;
    return nullptr;
}

std::vector<ClaimReport> run_defs(const std::vector<const ClaimDef*>& defs, std::uint64_t seed,
                                  const GenParams& params) {
    std::map<std::string, std::vector<Instance>> corpora;
    std::vector<ClaimReport> rows;
    for (const ClaimDef* d : defs) {
        auto it = corpora.find(d->corpus);
        if (it == corpora.end()) {
            Rng rng(mix(seed, d->corpus));
            it = corpora.emplace(d->corpus, d->generate(rng, params)).first;
        }
        ClaimReport row{d->id, d->description, d->expected, Status::holds, 0, 0, {}};
        const auto visit = [&](const Instance& in) {
            ++row.trials;
            if (d->check(in)) return;
            ++row.violations;
            if (row.counterexamples.size() < max_recorded) row.counterexamples.push_back(Counterexample::of(in));
        };
        // Fixed regression instances only count once the claim is exercised at all.
        if (!it->second.empty() || params.samples > 0 || d->corpus == "battery" || starts_with(d->corpus, "related"))
            for (const auto& in : d->fixed) visit(in);
        for (const auto& in : it->second) visit(in);
        row.status = row.violations == 0 ? Status::holds : Status::fails;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<const ClaimDef*> select(std::function<bool(const ClaimDef&)> pred) {
    std::vector<const ClaimDef*> out;
    for (const auto& d : registry())
        if (pred(d)) out.push_back(&d);
    return out;
}

}  // namespace

std::string_view to_string(Status status) { return status == Status::holds ? "holds" : "fails"; }

std::string_view to_string(Reading reading) { return reading == Reading::literal ? "literal" : "shared_language"; }

Counterexample Counterexample::of(const Instance& in) {
    Counterexample cx;
    for (const auto& f : in.sequence) cx.sequence.push_back(render(f));
    for (const auto& f : in.extra) cx.extra.push_back(render(f));
    if (in.alpha) cx.alpha = render(*in.alpha);
    if (in.beta) cx.beta = render(*in.beta);
    if (in.gamma) cx.gamma = render(*in.gamma);
    cx.k = in.k;
    cx.mode = std::string(belseq::to_string(in.mode));
    cx.reading = std::string(claims::to_string(in.reading));
    return cx;
}

Instance Counterexample::instance() const {
    Instance in;
    for (const auto& s : sequence) in.sequence.push_back(parse(s));
    for (const auto& s : extra) in.extra.push_back(parse(s));
    if (alpha) in.alpha = parse(*alpha);
    if (beta) in.beta = parse(*beta);
    if (gamma) in.gamma = parse(*gamma);
    in.k = k;
    in.mode = parse_mode(mode).value_or(Mode::liberal);
    in.reading = reading == "shared_language" ? Reading::shared_language : Reading::literal;
    return in;
}

std::string Counterexample::to_string() const {
    const auto list = [](const std::vector<std::string>& xs) {
        std::string out = "[";
        for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
        return out + "]";
    };
    std::string out;
    if (!sequence.empty()) out += "sequence=" + list(sequence) + " ";
    if (!extra.empty()) out += "extra=" + list(extra) + " ";
    if (alpha) out += "alpha=" + *alpha + " ";
    if (beta) out += "beta=" + *beta + " ";
    if (gamma) out += "gamma=" + *gamma + " ";
    return out + "k=" + std::to_string(k) + " mode=" + mode + " reading=" + reading;
}

std::vector<ClaimReport> epstein_report(const Language& atom_pool) {
    GenParams params;
    params.epstein_pool = atom_pool;
    return run_defs(select([](const ClaimDef& d) { return starts_with(d.corpus, "related"); }), 0, params);
}

std::vector<ClaimReport> prop2_report(std::size_t samples, std::uint64_t seed, Reading reading) {
    const std::string suffix = "-" + std::string(to_string(reading));
    GenParams params;
    params.samples = samples;
    return run_defs(select([&](const ClaimDef& d) {
                        return starts_with(d.id, "Rule-") && d.id.ends_with(suffix);
                    }),
                    seed, params);
}

std::vector<ClaimReport> structural_report(std::size_t samples, std::uint64_t seed, std::size_t vars) {
    GenParams params;
    params.samples = samples;
    params.vars = std::clamp<std::size_t>(vars, 1, 6);
    return run_defs(select([](const ClaimDef& d) { return !starts_with(d.corpus, "related") && !starts_with(d.id, "Rule-"); }),
                    seed, params);
}

bool ClaimsRun::conforms() const {
    return std::all_of(rows.begin(), rows.end(), [](const ClaimReport& r) { return r.conforms(); });
}

ClaimsRun run_all_claims(const ClaimsOptions& options) {
    ClaimsRun run;
    const auto append = [&](std::vector<ClaimReport> rows) {
        for (auto& r : rows) run.rows.push_back(std::move(r));
    };
    append(epstein_report(language_of(atom_pool(2))));
    append(prop2_report(options.samples, options.seed, Reading::literal));
    append(prop2_report(options.samples, options.seed, Reading::shared_language));
    append(structural_report(options.samples, options.seed, options.vars));
    return run;
}

std::optional<bool> replay_violates(const std::string& claim_id, const Counterexample& cx) {
    const ClaimDef* d = find_def(claim_id);
    if (!d) return std::nullopt;
    return !d->check(cx.instance());
}

std::string format_table(const std::vector<ClaimReport>& rows) {
    std::size_t width = 5;
    for (const auto& r : rows) width = std::max(width, r.id.size());
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(width)) << "claim" << "  expected  status  " << std::right
        << std::setw(8) << "trials" << std::setw(11) << "violations" << "  conforms\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(static_cast<int>(width)) << r.id << "  " << std::setw(8) << to_string(r.expected)
            << "  " << std::setw(6) << to_string(r.status) << "  " << std::right << std::setw(8) << r.trials
            << std::setw(11) << r.violations << "  " << (r.conforms() ? "yes" : "NO") << "\n";
        if (!r.counterexamples.empty()) out << "    e.g. " << r.counterexamples.front().to_string() << "\n";
    }
    return out.str();
}

std::string to_json(const std::vector<ClaimReport>& rows, bool pretty) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json cxs = nlohmann::json::array();
        for (const auto& c : r.counterexamples) {
            nlohmann::json j{{"sequence", c.sequence}, {"k", c.k}, {"mode", c.mode}, {"reading", c.reading}};
            if (!c.extra.empty()) j["extra"] = c.extra;
            if (c.alpha) j["alpha"] = *c.alpha;
            if (c.beta) j["beta"] = *c.beta;
            if (c.gamma) j["gamma"] = *c.gamma;
            cxs.push_back(std::move(j));
        }
        out.push_back({{"id", r.id},
                       {"description", r.description},
                       {"expected", to_string(r.expected)},
                       {"status", to_string(r.status)},
                       {"trials", r.trials},
                       {"violations", r.violations},
                       {"conforms", r.conforms()},
                       {"counterexamples", std::move(cxs)}});
    }
    return out.dump(pretty ? 2 : -1);
}

}  // namespace belseq::claims
