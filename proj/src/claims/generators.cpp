// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/claims/generators.hpp"

#include "belseq/logic.hpp"
#include "belseq/truth_table.hpp"

namespace belseq::claims {

std::vector<std::string> atom_pool(std::size_t n) {
    static const char* names[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
    if (n > std::size(names)) throw std::invalid_argument("atom pool too large");
    return {names, names + n};
}

Language random_language(Rng& rng, const std::vector<std::string>& pool) {
    while (true) {
        Language lang;
        for (const auto& a : pool)
            if (rng.chance(50)) lang.insert(a);
        if (!lang.empty()) return lang;
    }
}

Formula random_function_on(Rng& rng, const Language& lang) {
    const auto vars = lang.sorted();
    const std::uint64_t rows = std::uint64_t{1} << vars.size();
    const std::uint64_t mask = rows >= 64 ? ~0ull : ((std::uint64_t{1} << rows) - 1);
    while (true) {
        const std::uint64_t bits = rng.bits() & mask;
        const TruthTable t = TruthTable::from_bits(vars, bits);
        bool all_essential = true;
        for (unsigned i = 0; i < vars.size(); ++i) all_essential = all_essential && t.depends_on(i);
        if (all_essential) return canonical_formula(vars, bits);
    }
}

Formula syntactic_variant(Rng& rng, const Formula& f, const std::vector<std::string>& pool) {
    const Formula pad_atom = Formula::atom(pool[rng.below(pool.size())]);
    const Formula tautology = Formula::disjunction(pad_atom, Formula::negation(pad_atom));
    const Formula contradiction = Formula::conjunction(pad_atom, Formula::negation(pad_atom));
    switch (rng.below(6)) {
        case 0: return Formula::negation(Formula::negation(f));
        case 1: return Formula::conjunction(f, tautology);
        case 2: return Formula::disjunction(contradiction, f);
        case 3: return Formula::implication(Formula::negation(f), contradiction);
        case 4:
            if (f.op() == Op::Or)  // De Morgan
                return Formula::negation(Formula::conjunction(Formula::negation(f.lhs()), Formula::negation(f.rhs())));
            if (f.op() == Op::And)
                return Formula::negation(Formula::disjunction(Formula::negation(f.lhs()), Formula::negation(f.rhs())));
            return Formula::biconditional(f, Formula::constant(true));
        default:
            if (f.op() == Op::And || f.op() == Op::Or) return Formula::binary(f.op(), f.rhs(), f.lhs());
            return Formula::disjunction(f, f);
    }
}

Formula random_formula(Rng& rng, const std::vector<std::string>& pool) {
    if (rng.chance(5)) return Formula::constant(rng.chance(50));
    Language lang;
    for (const auto& a : pool)
        if (rng.chance(50)) lang.insert(a);
    const auto vars = lang.sorted();
    const std::uint64_t rows = std::uint64_t{1} << vars.size();
    const std::uint64_t mask = rows >= 64 ? ~0ull : ((std::uint64_t{1} << rows) - 1);
    Formula f = canonical_formula(vars, rng.bits() & mask);
    if (rng.chance(25)) f = syntactic_variant(rng, f, pool);
    return f;
}

BeliefSequence random_sequence(Rng& rng, const std::vector<std::string>& pool, std::size_t max_length) {
    const std::size_t n = rng.below(max_length + 1);
    std::vector<Formula> fs;
    fs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) fs.push_back(random_formula(rng, pool));
    return BeliefSequence(fs);
}

}  // namespace belseq::claims
