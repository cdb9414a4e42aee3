// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "belseq/inference.hpp"

namespace belseq::claims {

enum class Status { holds, fails };

/// How a rule's queries pick their ranking language: each its own smallest
/// language, or the union of the languages of the formulas in the rule.
enum class Reading { literal, shared_language };

std::string_view to_string(Status status);
std::string_view to_string(Reading reading);

/// A concrete instance a claim is checked on. Unused fields stay empty.
struct Instance {
    std::vector<Formula> sequence;  // belief sequence, or relevance context
    std::vector<Formula> extra;     // second context / extra formulas
    std::optional<Formula> alpha;
    std::optional<Formula> beta;
    std::optional<Formula> gamma;
    std::size_t k = 0;
    Mode mode = Mode::liberal;
    Reading reading = Reading::literal;
};

/// An Instance with every formula rendered in the grammar.
struct Counterexample {
    std::vector<std::string> sequence;
    std::vector<std::string> extra;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
    std::optional<std::string> gamma;
    std::size_t k = 0;
    std::string mode = "liberal";
    std::string reading = "literal";

    static Counterexample of(const Instance& instance);
    Instance instance() const;
    std::string to_string() const;
};

struct ClaimReport {
    std::string id;
    std::string description;
    Status expected = Status::holds;
    Status status = Status::holds;
    std::size_t trials = 0;
    std::size_t violations = 0;
    /// The first few violating instances, fixed regression instances first.
    std::vector<Counterexample> counterexamples;

    /// Rows without trials are vacuous and conform.
    bool conforms() const { return trials == 0 || status == expected; }
};

/// Direct-relevance conditions R1-R6 and R5a over every canonical formula of
/// the pool (exhaustive; at most 2 atoms recommended).
std::vector<ClaimReport> epstein_report(const Language& atom_pool);

/// The non-monotonic rules with equal-language premises on random instances
/// over 3 atoms, sequences of length <= 6.
std::vector<ClaimReport> prop2_report(std::size_t samples, std::uint64_t seed, Reading reading);

/// Relevance and sequence invariants, oracle agreement, AGM-like postulates
/// and the worked-example battery. Random sequences use `vars` atoms.
std::vector<ClaimReport> structural_report(std::size_t samples, std::uint64_t seed, std::size_t vars = 4);

struct ClaimsOptions {
    std::size_t samples = 1000;
    std::uint64_t seed = 7;
    std::size_t vars = 4;
};

struct ClaimsRun {
    std::vector<ClaimReport> rows;
    bool conforms() const;
};

/// Every report, both readings of the rules.
ClaimsRun run_all_claims(const ClaimsOptions& options);

/// Re-checks a counterexample through the public operations. Returns true
/// when the claim is violated on it, nullopt for an unknown claim id.
std::optional<bool> replay_violates(const std::string& claim_id, const Counterexample& cx);

std::string format_table(const std::vector<ClaimReport>& rows);
std::string to_json(const std::vector<ClaimReport>& rows, bool pretty = false);

}  // namespace belseq::claims
