// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

// JSON shapes shared by the HTTP service and the CLI's --json output.

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "belseq/inference.hpp"

namespace belseq::wire {

using nlohmann::json;

/// An integer, or the string "infinity".
json rel_json(const RelLevel& level);
json language_json(const Language& lang);

/// {"elements": [{index, formula, language}], "language": [...]}
json sequence_json(const BeliefSequence& seq);

/// {answer, k_used, mode, query, query_language, gamma, trace}
json query_json(const QueryContext& ctx, const QueryResult& result);

/// {formula, language, profile: [{index, formula, rel}], edges: [[i, j]]}
/// Edges join directly relevant sequence elements.
json relevance_json(const Formula& probe, const BeliefSequence& seq);

json error_json(std::string_view kind, std::string_view message, std::optional<std::size_t> position = std::nullopt);

/// Reads a "query_language" array; throws std::invalid_argument on bad atoms.
Language parse_language(const json& atoms);

}  // namespace belseq::wire
