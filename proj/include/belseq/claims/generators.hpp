// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "belseq/formula.hpp"
#include "belseq/sequence.hpp"

namespace belseq::claims {

/// Seeded source of randomness. Draws use only the raw mt19937_64 stream,
/// so a seed yields the same instances on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t bits() { return engine_(); }
    /// Uniform-ish in [0, n); n > 0.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    bool chance(unsigned percent) { return below(100) < percent; }

private:
    std::mt19937_64 engine_;
};

/// "p", "q", "r", "s", ... up to n atoms.
std::vector<std::string> atom_pool(std::size_t n);

/// A random function over a random subset of the pool, realized as its
/// canonical DNF and sometimes wrapped with redundant atoms or rewritten.
Formula random_formula(Rng& rng, const std::vector<std::string>& pool);

/// A random Boolean function over exactly `lang` with every atom essential.
Formula random_function_on(Rng& rng, const Language& lang);

/// Same function, different syntax (double negation, De Morgan, implication
/// forms, tautological padding).
Formula syntactic_variant(Rng& rng, const Formula& f, const std::vector<std::string>& pool);

BeliefSequence random_sequence(Rng& rng, const std::vector<std::string>& pool, std::size_t max_length);

/// A nonempty subset of the pool.
Language random_language(Rng& rng, const std::vector<std::string>& pool);

}  // namespace belseq::claims
