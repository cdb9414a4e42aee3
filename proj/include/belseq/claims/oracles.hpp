// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "belseq/formula.hpp"
#include "belseq/relevance.hpp"

// Brute-force reference implementations. They evaluate formulas one
// valuation at a time and enumerate candidates literally, sharing no code
// path with the truth-table engine they check.
namespace belseq::claims {

inline constexpr std::size_t oracle_atom_cap = 4;
inline constexpr std::size_t oracle_ctx_cap = 6;

/// Smallest subset S of L(f) such that f's value never changes between
/// valuations that agree on S. Throws CapExceeded above oracle_atom_cap atoms.
Language smallest_language_oracle(const Formula& f);

/// Minimum k over every tuple chi_1..chi_k drawn from ctx (with repetition,
/// k <= |ctx|) satisfying the three adjacency clauses of k-relevance.
RelLevel rel_oracle(const Formula& a, const Formula& b, const FormulaSet& ctx);

/// Valuation-by-valuation satisfiability, for cross-checking the engine.
bool satisfiable_oracle(const std::vector<Formula>& fs);

}  // namespace belseq::claims
