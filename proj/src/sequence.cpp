// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/sequence.hpp"

#include <fstream>
#include <sstream>

#include "belseq/logic.hpp"

namespace belseq {

BeliefSequence::BeliefSequence(const std::vector<Formula>& formulas) {
    elements_.reserve(formulas.size());
    for (const auto& f : formulas) elements_.push_back({elements_.size(), f, smallest_language(f)});
}

BeliefSequence BeliefSequence::revised(const Formula& f) const {
    BeliefSequence out = *this;
    const std::size_t next = elements_.empty() ? 0 : elements_.back().index + 1;
    out.elements_.push_back({next, f, smallest_language(f)});
    return out;
}

BeliefSequence BeliefSequence::without_last() const {
    BeliefSequence out = *this;
    if (!out.elements_.empty()) out.elements_.pop_back();
    return out;
}

std::vector<Formula> BeliefSequence::formulas() const {
    std::vector<Formula> out;
    out.reserve(elements_.size());
    for (const auto& e : elements_) out.push_back(e.formula);
    return out;
}

Language BeliefSequence::language() const {
    Language out;
    for (const auto& e : elements_) out = out.united(e.language);
    return out;
}

bool operator==(const BeliefSequence& a, const BeliefSequence& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].index != b[i].index || !(a[i].formula == b[i].formula)) return false;
    return true;
}

BeliefSequence revise(const BeliefSequence& seq, const Formula& f) { return seq.revised(f); }

bool initial_segment(const BeliefSequence& a, const BeliefSequence& b) {
    if (a.size() > b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i].formula == b[i].formula)) return false;
    return true;
}

SequenceFormatError::SequenceFormatError(std::size_t line, const ParseError& cause)
    : std::runtime_error("line " + std::to_string(line) + ": " + cause.what()),
      line_(line),
      column_(cause.position()) {}

BeliefSequence parse_sequence_text(std::string_view text) {
    std::vector<Formula> formulas;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#') {
            try {
                formulas.push_back(parse(line));
            } catch (const ParseError& e) {
                throw SequenceFormatError(line_no, e);
            }
        }
        start = end + 1;
    }
    return BeliefSequence(formulas);
}

std::string to_sequence_text(const BeliefSequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i != 0) out += '\n';
        out += render(seq[i].formula);
    }
    return out;
}

BeliefSequence load_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sequence_text(buf.str());
}

void save_sequence_file(const BeliefSequence& seq, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << to_sequence_text(seq);
    if (!seq.empty()) out << '\n';
}

}  // namespace belseq
