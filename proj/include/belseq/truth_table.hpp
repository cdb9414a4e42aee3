// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "belseq/formula.hpp"

namespace belseq {

/// Packed truth table of a Boolean function over an ordered variable list.
/// Layout follows belseq::kernels: variable i is bit i of the valuation index.
class TruthTable {
public:
    /// Largest variable count a table may be built for (2^20 bits = 128 KiB).
    static constexpr unsigned max_vars = 20;

    TruthTable(std::vector<std::string> vars, bool value);

    static TruthTable of(const Formula& f, const std::vector<std::string>& vars);
    static TruthTable variable(const std::vector<std::string>& vars, unsigned index);
    /// Table with bit j equal to bit j of `bits` (vars.size() <= 6).
    static TruthTable from_bits(std::vector<std::string> vars, std::uint64_t bits);

    const std::vector<std::string>& vars() const { return vars_; }
    unsigned num_vars() const { return static_cast<unsigned>(vars_.size()); }
    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    bool bit(std::uint64_t valuation) const { return (words_[valuation >> 6] >> (valuation & 63)) & 1u; }

    TruthTable& operator&=(const TruthTable& other);
    TruthTable& operator|=(const TruthTable& other);
    TruthTable& operator^=(const TruthTable& other);
    TruthTable& and_not(const TruthTable& other);
    TruthTable& invert();

    bool any() const;
    bool all() const;
    bool depends_on(unsigned var) const;
    std::uint64_t count() const;

    /// Existential projection onto `keep` (a subset of vars()), re-indexed to keep's order.
    TruthTable project(const std::vector<std::string>& keep) const;

    friend bool operator==(const TruthTable& a, const TruthTable& b) {
        return a.vars_ == b.vars_ && a.words_ == b.words_;
    }

private:
    std::vector<std::string> vars_;
    std::vector<std::uint64_t> words_;
};

}  // namespace belseq
