// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "belseq/formula.hpp"

namespace belseq {

/// Satisfiability of a finite set of formulas. Sets over at most
/// TruthTable::max_vars distinct atoms are decided by truth-table
/// enumeration, larger ones by DPLL search on a Tseitin encoding.
bool is_satisfiable(std::span<const Formula> fs);
bool is_satisfiable(std::initializer_list<Formula> fs);

/// fs |= f, i.e. fs + {~f} is unsatisfiable.
bool entails(std::span<const Formula> fs, const Formula& f);
bool entails(std::initializer_list<Formula> fs, const Formula& f);

/// a <-> b is a tautology.
bool equivalent(const Formula& a, const Formula& b);

bool is_tautology(const Formula& f);
bool is_contradiction(const Formula& f);

/// L_f: the atoms f essentially depends on. An atom is essential iff f with
/// the atom set to true is not equivalent to f with the atom set to false.
Language smallest_language(const Formula& f);

namespace sat {

/// The two decision routes behind is_satisfiable, exposed so they can be
/// checked against each other.
bool by_truth_table(std::span<const Formula> fs);
bool by_search(std::span<const Formula> fs);

}  // namespace sat

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t size, std::size_t cap)
        : std::runtime_error("language of " + std::to_string(size) + " atoms exceeds the enumeration cap of " +
                             std::to_string(cap)) {}
};

inline constexpr std::size_t default_enumeration_cap = 4;

/// One Boolean function over an enumerated language.
struct CanonicalQuery {
    Formula formula;
    /// smallest_language(formula)
    Language language;
    /// Bit j is the function value on valuation j of the enumerated language
    /// (atom i in sorted order is bit i of j).
    std::uint64_t truth_bits = 0;
};

/// The canonical representative of the function with the given truth bits
/// over `vars`: a constant, or the full DNF over the function's essential
/// atoms with terms in lexicographic valuation order.
Formula canonical_formula(const std::vector<std::string>& vars, std::uint64_t truth_bits);

/// A shortest sum of products for the same function (at most 6 atoms):
/// fewest terms, then fewest literals. Used for display.
Formula minimal_dnf(const std::vector<std::string>& vars, std::uint64_t truth_bits);

/// All 2^(2^|lang|) functions over lang, ordered by truth_bits.
std::vector<CanonicalQuery> enumerate_canonical_queries(const Language& lang,
                                                        std::size_t cap = default_enumeration_cap);

}  // namespace belseq
