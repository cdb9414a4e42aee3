// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "belseq/formula.hpp"
#include "belseq/logic.hpp"
#include "belseq/relevance.hpp"
#include "belseq/sequence.hpp"

namespace belseq {

/// liberal: skip a formula that conflicts with the set built so far.
/// strict: stop at the first such formula.
enum class Mode { liberal, strict };
enum class Answer { yes, no, no_information };
enum class Decision { accepted, rejected_inconsistent, rejected_irrelevant, halted };

std::string_view to_string(Mode mode);
std::string_view to_string(Answer answer);
std::string_view to_string(Decision decision);
std::optional<Mode> parse_mode(std::string_view text);

struct QueryContext {
    Formula query;
    std::size_t k = 0;
    Mode mode = Mode::liberal;
    /// Overrides the language used to rank the sequence (defaults to
    /// smallest_language(query)); must contain it.
    std::optional<Language> query_language;

    /// The ranking language; throws std::invalid_argument when an override
    /// does not contain smallest_language(query).
    Language effective_language() const;
};

struct RankedElement {
    std::size_t index;
    Formula formula;
    RelLevel rel;
};

struct TraceEntry {
    std::size_t index;
    Formula formula;
    RelLevel rel;
    Decision decision;
};

struct GammaResult {
    /// In processing order.
    std::vector<RankedElement> accepted;
    /// Every element of the sequence once, by (rel, recency).
    std::vector<TraceEntry> trace;

    std::vector<Formula> formulas() const;
};

/// Elements with rel <= k to the query language, most relevant first and,
/// within a level, most recent first.
std::vector<RankedElement> priority_order(const BeliefSequence& seq, const QueryContext& ctx);

GammaResult build_gamma(const BeliefSequence& seq, const QueryContext& ctx);
/// The greedy construction for any probe with the given smallest language.
GammaResult build_gamma(const BeliefSequence& seq, const Language& query_language, std::size_t k, Mode mode);

bool infer(const BeliefSequence& seq, const QueryContext& ctx);

struct QueryResult {
    Answer answer;
    GammaResult gamma;
};

/// yes if gamma entails the query, no if it entails the negation,
/// otherwise no information.
QueryResult evaluate_query(const BeliefSequence& seq, const QueryContext& ctx);
Answer answer_query(const BeliefSequence& seq, const QueryContext& ctx);

/// Largest finite rel of an element to the query; beyond it, raising k
/// changes nothing.
std::size_t saturation_level(const BeliefSequence& seq, const Formula& query);
std::size_t saturation_level(const BeliefSequence& seq, const Language& query_language);

/// seq |-_k query for some k.
bool in_C(const BeliefSequence& seq, const Formula& query);

/// Canonical queries over lang inferable at level k, each asked in its own
/// smallest language.
std::vector<Formula> consequences(const BeliefSequence& seq, std::size_t k, const Language& lang,
                                  std::size_t cap = default_enumeration_cap);

namespace testing {

/// Deliberate engine faults for mutation testing of the conformance runner.
enum class Mutant { none, oldest_first, accept_all };
void set_mutant(Mutant mutant);
Mutant mutant();

}  // namespace testing

}  // namespace belseq
