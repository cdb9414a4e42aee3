// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "belseq/formula.hpp"

namespace belseq {

struct SequenceElement {
    std::size_t index;
    Formula formula;
    /// smallest_language(formula), computed once when the element is appended.
    Language language;
};

/// Temporally ordered list of formulas; later elements are more recent.
/// Immutable value: revision returns a new sequence.
class BeliefSequence {
public:
    BeliefSequence() = default;
    explicit BeliefSequence(const std::vector<Formula>& formulas);

    BeliefSequence revised(const Formula& f) const;
    /// Drops the newest element (session management; not a revision).
    BeliefSequence without_last() const;

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const std::vector<SequenceElement>& elements() const { return elements_; }
    const SequenceElement& operator[](std::size_t i) const { return elements_[i]; }
    std::vector<Formula> formulas() const;

    /// Union of the elements' smallest languages.
    Language language() const;

    friend bool operator==(const BeliefSequence& a, const BeliefSequence& b);

private:
    std::vector<SequenceElement> elements_;
};

/// seq * f: concatenation.
BeliefSequence revise(const BeliefSequence& seq, const Formula& f);

/// True iff b extends a by zero or more trailing formulas.
bool initial_segment(const BeliefSequence& a, const BeliefSequence& b);

class SequenceFormatError : public std::runtime_error {
public:
    SequenceFormatError(std::size_t line, const ParseError& cause);
    /// One-based line number.
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Text format: one formula per line, oldest first; blank lines and lines
// starting with '#' are ignored.
BeliefSequence parse_sequence_text(std::string_view text);
std::string to_sequence_text(const BeliefSequence& seq);

BeliefSequence load_sequence_file(const std::string& path);
void save_sequence_file(const BeliefSequence& seq, const std::string& path);

}  // namespace belseq
