// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/truth_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "belseq/kernels.hpp"

namespace belseq {

namespace {

void check_same_vars(const TruthTable& a, const TruthTable& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("truth tables over different variables");
}

}  // namespace

TruthTable::TruthTable(std::vector<std::string> vars, bool value) : vars_(std::move(vars)) {
    if (vars_.size() > max_vars) throw std::length_error("truth table over too many variables");
    const auto n = num_vars();
    words_.assign(kernels::word_count(n), value ? kernels::valid_mask(n) : 0);
}

TruthTable TruthTable::variable(const std::vector<std::string>& vars, unsigned index) {
    TruthTable t(vars, false);
    const auto n = t.num_vars();
    if (index < 6) {
        const std::uint64_t w = kernels::var_pattern(index) & kernels::valid_mask(n);
        std::fill(t.words_.begin(), t.words_.end(), w);
    } else {
        for (std::size_t i = 0; i < t.words_.size(); ++i)
            if ((i >> (index - 6)) & 1u) t.words_[i] = ~0ull;
    }
    return t;
}

TruthTable TruthTable::from_bits(std::vector<std::string> vars, std::uint64_t bits) {
    if (vars.size() > 6) throw std::invalid_argument("from_bits needs at most 6 variables");
    TruthTable t(std::move(vars), false);
    t.words_[0] = bits & kernels::valid_mask(t.num_vars());
    return t;
}

TruthTable TruthTable::of(const Formula& f, const std::vector<std::string>& vars) {
    switch (f.op()) {
        case Op::True: return TruthTable(vars, true);
        case Op::False: return TruthTable(vars, false);
        case Op::Atom: {
            auto it = std::find(vars.begin(), vars.end(), f.atom_name());
            if (it == vars.end()) throw UnboundAtomError(f.atom_name());
            return variable(vars, static_cast<unsigned>(it - vars.begin()));
        }
        case Op::Not: return of(f.lhs(), vars).invert();
        case Op::And: {
            TruthTable t = of(f.lhs(), vars);
            return t &= of(f.rhs(), vars);
        }
        case Op::Or: {
            TruthTable t = of(f.lhs(), vars);
            return t |= of(f.rhs(), vars);
        }
        case Op::Implies: {
            TruthTable t = of(f.lhs(), vars).invert();
            return t |= of(f.rhs(), vars);
        }
        case Op::Iff: {
            TruthTable t = of(f.lhs(), vars);
            t ^= of(f.rhs(), vars);
            return t.invert();
        }
    }
    throw std::logic_error("unknown connective");
}

TruthTable& TruthTable::operator&=(const TruthTable& other) {
    check_same_vars(*this, other);
    kernels::active().bit_and(words_, other.words_);
    return *this;
}

TruthTable& TruthTable::operator|=(const TruthTable& other) {
    check_same_vars(*this, other);
    kernels::active().bit_or(words_, other.words_);
    return *this;
}

TruthTable& TruthTable::operator^=(const TruthTable& other) {
    check_same_vars(*this, other);
    kernels::active().bit_xor(words_, other.words_);
    return *this;
}

TruthTable& TruthTable::and_not(const TruthTable& other) {
    check_same_vars(*this, other);
    kernels::active().bit_andnot(words_, other.words_);
    return *this;
}

TruthTable& TruthTable::invert() {
    kernels::active().bit_not(words_);
    if (num_vars() < 6) words_[0] &= kernels::valid_mask(num_vars());
    return *this;
}

bool TruthTable::any() const { return kernels::active().any(words_); }

bool TruthTable::all() const {
    TruthTable c = *this;
    return !c.invert().any();
}

bool TruthTable::depends_on(unsigned var) const {
    return kernels::active().cofactors_differ(words_, var, num_vars());
}

std::uint64_t TruthTable::count() const { return kernels::active().popcount(words_); }

TruthTable TruthTable::project(const std::vector<std::string>& keep) const {
    std::vector<unsigned> kept_index;
    kept_index.reserve(keep.size());
    for (const auto& v : keep) {
        auto it = std::find(vars_.begin(), vars_.end(), v);
        if (it == vars_.end()) throw std::invalid_argument("projection variable '" + v + "' not in table");
        kept_index.push_back(static_cast<unsigned>(it - vars_.begin()));
    }
    TruthTable folded = *this;
    for (unsigned i = 0; i < num_vars(); ++i)
        if (std::find(kept_index.begin(), kept_index.end(), i) == kept_index.end())
            kernels::active().exists(folded.words_, i, num_vars());
    // After quantification every dropped variable is irrelevant; read it at value 0.
    TruthTable out(keep, false);
    const std::uint64_t rows = std::uint64_t{1} << keep.size();
    for (std::uint64_t j = 0; j < rows; ++j) {
        std::uint64_t src = 0;
        for (std::size_t b = 0; b < kept_index.size(); ++b)
            if ((j >> b) & 1u) src |= std::uint64_t{1} << kept_index[b];
        if (folded.bit(src)) out.words_[j >> 6] |= std::uint64_t{1} << (j & 63);
    }
    return out;
}

}  // namespace belseq
