// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "belseq/inference.hpp"
#include "belseq/sequence.hpp"

namespace belseq {

/// A revision chain and a query on which two sequences answer differently.
struct EquivalenceWitness {
    std::vector<Formula> revisions;
    Formula query;
    std::size_t k;
    Answer answer_a;
    Answer answer_b;
};

struct EquivalenceVerdict {
    bool result = true;
    std::optional<EquivalenceWitness> witness;
    /// Longest revision chain searched (0 for plain equivalence).
    std::size_t depth = 0;
};

// Consequence sets are compared over every canonical query of the union of
// both sequences' smallest languages, each query at the larger of the two
// saturation levels for its language. The first differing query is the
// lexicographically least rendering.

/// C(a) = C(b) over the enumerated query space.
EquivalenceVerdict equivalent_sequences(const BeliefSequence& a, const BeliefSequence& b,
                                        std::size_t var_cap = default_enumeration_cap);

/// Equivalence after every revision chain of length <= depth drawn from the
/// non-constant canonical formulas of the union language. A positive verdict
/// certifies only the searched depth.
EquivalenceVerdict strongly_equivalent_bounded(const BeliefSequence& a, const BeliefSequence& b,
                                               std::size_t depth = 1,
                                               std::size_t var_cap = default_enumeration_cap);

/// C(b) is contained in C(a).
bool subsumes(const BeliefSequence& a, const BeliefSequence& b, std::size_t var_cap = default_enumeration_cap);

/// Human-readable verdict line, e.g.
/// "not strongly equivalent (depth 1); witness: revise p | q, query p at k=0".
std::string describe(const EquivalenceVerdict& verdict, bool strong);

}  // namespace belseq
