// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/logic.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "belseq/truth_table.hpp"
#include "dpll.hpp"

namespace belseq {

namespace sat {

bool by_truth_table(std::span<const Formula> fs) {
    Language lang;
    for (const auto& f : fs) lang = lang.united(syntactic_language(f));
    const auto vars = lang.sorted();
    TruthTable acc(vars, true);
    for (const auto& f : fs) {
        acc &= TruthTable::of(f, vars);
        if (!acc.any()) return false;
    }
    return acc.any();
}

bool by_search(std::span<const Formula> fs) { return detail::dpll_satisfiable(fs); }

}  // namespace sat

bool is_satisfiable(std::span<const Formula> fs) {
    Language lang;
    for (const auto& f : fs) lang = lang.united(syntactic_language(f));
    if (lang.size() <= TruthTable::max_vars) return sat::by_truth_table(fs);
    return sat::by_search(fs);
}

bool is_satisfiable(std::initializer_list<Formula> fs) {
    return is_satisfiable(std::span<const Formula>(fs.begin(), fs.size()));
}

bool entails(std::span<const Formula> fs, const Formula& f) {
    std::vector<Formula> all(fs.begin(), fs.end());
    all.push_back(Formula::negation(f));
    return !is_satisfiable(all);
}

bool entails(std::initializer_list<Formula> fs, const Formula& f) {
    return entails(std::span<const Formula>(fs.begin(), fs.size()), f);
}

bool equivalent(const Formula& a, const Formula& b) {
    const Formula differ = Formula::negation(Formula::biconditional(a, b));
    return !is_satisfiable({differ});
}

bool is_tautology(const Formula& f) { return !is_satisfiable({Formula::negation(f)}); }

bool is_contradiction(const Formula& f) { return !is_satisfiable({f}); }

Language smallest_language(const Formula& f) {
    const Language syntactic = syntactic_language(f);
    Language essential;
    if (syntactic.size() <= TruthTable::max_vars) {
        const auto vars = syntactic.sorted();
        const TruthTable table = TruthTable::of(f, vars);
        for (unsigned i = 0; i < vars.size(); ++i)
            if (table.depends_on(i)) essential.insert(vars[i]);
        return essential;
    }
    for (const auto& atom : syntactic) {
        const Formula hi = substitute(f, atom, true);
        const Formula lo = substitute(f, atom, false);
        if (!equivalent(hi, lo)) essential.insert(atom);
    }
    return essential;
}

Formula canonical_formula(const std::vector<std::string>& vars, std::uint64_t truth_bits) {
    const TruthTable table = TruthTable::from_bits(vars, truth_bits);
    if (!table.any()) return Formula::constant(false);
    if (table.all()) return Formula::constant(true);

    std::vector<unsigned> essential;
    for (unsigned i = 0; i < vars.size(); ++i)
        if (table.depends_on(i)) essential.push_back(i);

    // Lexicographic valuation order over the essential atoms: the first atom
    // is the most significant position and false precedes true.
    const std::size_t m = essential.size();
    std::optional<Formula> dnf;
    for (std::uint64_t lex = 0; lex < (std::uint64_t{1} << m); ++lex) {
        std::uint64_t row = 0;
        for (std::size_t pos = 0; pos < m; ++pos)
            if ((lex >> (m - 1 - pos)) & 1u) row |= std::uint64_t{1} << essential[pos];
        if (!table.bit(row)) continue;
        std::optional<Formula> term;
        for (std::size_t pos = 0; pos < m; ++pos) {
            Formula lit = Formula::atom(vars[essential[pos]]);
            if (((row >> essential[pos]) & 1u) == 0) lit = Formula::negation(lit);
            term = term ? Formula::conjunction(*term, lit) : lit;
        }
        dnf = dnf ? Formula::disjunction(*dnf, *term) : *term;
    }
    return *dnf;
}

namespace {

// A product term: atoms in `mask` are fixed to their bit in `value`.
struct Cube {
    std::uint64_t mask;
    std::uint64_t value;
    bool covers(std::uint64_t row) const { return (row & mask) == value; }
    int literals() const { return std::popcount(mask); }
};

void cover_search(const std::vector<Cube>& primes, const std::vector<std::uint64_t>& minterms,
                  std::vector<std::size_t>& chosen, std::vector<std::size_t>& best, int& best_literals) {
    const auto uncovered = std::find_if(minterms.begin(), minterms.end(), [&](std::uint64_t m) {
        return std::none_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return primes[c].covers(m); });
    });
    int literals = 0;
    for (std::size_t c : chosen) literals += primes[c].literals();
    if (uncovered == minterms.end()) {
        if (best.empty() || chosen.size() < best.size() || (chosen.size() == best.size() && literals < best_literals)) {
            best = chosen;
            best_literals = literals;
        }
        return;
    }
    if (!best.empty() && chosen.size() + 1 > best.size()) return;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!primes[i].covers(*uncovered)) continue;
        chosen.push_back(i);
        cover_search(primes, minterms, chosen, best, best_literals);
        chosen.pop_back();
    }
}

}  // namespace

Formula minimal_dnf(const std::vector<std::string>& vars, std::uint64_t truth_bits) {
    const TruthTable table = TruthTable::from_bits(vars, truth_bits);
    if (!table.any()) return Formula::constant(false);
    if (table.all()) return Formula::constant(true);
    const std::size_t n = vars.size();
    const std::uint64_t rows = std::uint64_t{1} << n;

    std::vector<std::uint64_t> minterms;
    for (std::uint64_t r = 0; r < rows; ++r)
        if (table.bit(r)) minterms.push_back(r);

    const auto implicant = [&](const Cube& c) {
        for (std::uint64_t r = 0; r < rows; ++r)
            if (c.covers(r) && !table.bit(r)) return false;
        return true;
    };
    std::vector<Cube> primes;
    for (std::uint64_t mask = 0; mask < rows; ++mask)
        for (std::uint64_t value = 0; value < rows; ++value) {
            if ((value & ~mask) != 0) continue;
            const Cube c{mask, value};
            if (!implicant(c)) continue;
            bool prime = true;
            for (std::size_t i = 0; i < n && prime; ++i)
                if ((mask >> i) & 1u) {
                    const std::uint64_t bit = std::uint64_t{1} << i;
                    prime = !implicant(Cube{mask & ~bit, value & ~bit});
                }
            if (prime) primes.push_back(c);
        }
    // Larger cubes first so the search meets short covers early.
    std::stable_sort(primes.begin(), primes.end(),
                     [](const Cube& a, const Cube& b) { return a.literals() < b.literals(); });

    std::vector<std::size_t> chosen, best;
    int best_literals = 0;
    cover_search(primes, minterms, chosen, best, best_literals);
    std::sort(best.begin(), best.end());

    std::optional<Formula> dnf;
    for (std::size_t c : best) {
        std::optional<Formula> term;
        for (std::size_t i = 0; i < n; ++i) {
            if (((primes[c].mask >> i) & 1u) == 0) continue;
            Formula lit = Formula::atom(vars[i]);
            if (((primes[c].value >> i) & 1u) == 0) lit = Formula::negation(lit);
            term = term ? Formula::conjunction(*term, lit) : lit;
        }
        dnf = dnf ? Formula::disjunction(*dnf, *term) : *term;
    }
    return *dnf;
}

std::vector<CanonicalQuery> enumerate_canonical_queries(const Language& lang, std::size_t cap) {
    if (lang.size() > cap) throw CapExceeded(lang.size(), cap);
    if (lang.size() > 5) throw CapExceeded(lang.size(), 5);
    const auto vars = lang.sorted();
    const std::uint64_t rows = std::uint64_t{1} << vars.size();
    const std::uint64_t functions = std::uint64_t{1} << rows;
    std::vector<CanonicalQuery> out;
    out.reserve(functions);
    for (std::uint64_t bits = 0; bits < functions; ++bits) {
        const TruthTable table = TruthTable::from_bits(vars, bits);
        Language essential;
        for (unsigned i = 0; i < vars.size(); ++i)
            if (table.depends_on(i)) essential.insert(vars[i]);
        out.push_back({canonical_formula(vars, bits), std::move(essential), bits});
    }
    return out;
}

}  // namespace belseq
