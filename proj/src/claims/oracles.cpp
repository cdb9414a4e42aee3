// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/claims/oracles.hpp"

#include <bit>
#include <optional>

#include "belseq/logic.hpp"

namespace belseq::claims {

namespace {

Valuation valuation_of(const std::vector<std::string>& atoms, std::uint64_t bits) {
    Valuation v;
    for (std::size_t i = 0; i < atoms.size(); ++i) v.set(atoms[i], (bits >> i) & 1u);
    return v;
}

bool directly_related(const Language& a, const Language& b) { return a.intersects(b); }

}  // namespace

Language smallest_language_oracle(const Formula& f) {
    const auto atoms = syntactic_language(f).sorted();
    if (atoms.size() > oracle_atom_cap) throw CapExceeded(atoms.size(), oracle_atom_cap);
    const std::uint64_t rows = std::uint64_t{1} << atoms.size();
    std::vector<bool> value(rows);
    for (std::uint64_t r = 0; r < rows; ++r) value[r] = evaluate(f, valuation_of(atoms, r));

    std::optional<std::uint64_t> best;
    for (std::uint64_t subset = 0; subset < rows; ++subset) {
        if (best && std::popcount(subset) >= std::popcount(*best)) continue;
        // Two valuations agreeing on the subset must give the same value.
        bool determined = true;
        for (std::uint64_t r = 0; r < rows && determined; ++r)
            for (std::uint64_t s = 0; s < rows && determined; ++s)
                if ((r & subset) == (s & subset) && value[r] != value[s]) determined = false;
        if (determined) best = subset;
    }
    Language out;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if ((*best >> i) & 1u) out.insert(atoms[i]);
    return out;
}

RelLevel rel_oracle(const Formula& a, const Formula& b, const FormulaSet& ctx) {
    if (ctx.size() > oracle_ctx_cap) throw CapExceeded(ctx.size(), oracle_ctx_cap);
    const Language la = smallest_language_oracle(a);
    const Language lb = smallest_language_oracle(b);
    if (directly_related(la, lb)) return RelLevel(0);

    std::vector<Language> chi;
    for (const auto& f : ctx.members()) chi.push_back(smallest_language_oracle(f));
    const std::size_t n = chi.size();

    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> tuple(k, 0);
        while (true) {
            bool ok = directly_related(la, chi[tuple[0]]);
            for (std::size_t i = 0; ok && i + 1 < k; ++i) ok = directly_related(chi[tuple[i]], chi[tuple[i + 1]]);
            ok = ok && directly_related(chi[tuple[k - 1]], lb);
            if (ok) return RelLevel(k);
            std::size_t pos = 0;
            while (pos < k && ++tuple[pos] == n) tuple[pos++] = 0;
            if (pos == k) break;
        }
    }
    return RelLevel::infinity();
}

bool satisfiable_oracle(const std::vector<Formula>& fs) {
    Language lang;
    for (const auto& f : fs) lang = lang.united(syntactic_language(f));
    const auto atoms = lang.sorted();
    if (atoms.size() > 16) throw CapExceeded(atoms.size(), 16);
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << atoms.size()); ++r) {
        const Valuation v = valuation_of(atoms, r);
        bool all = true;
        for (const auto& f : fs)
            if (!evaluate(f, v)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

}  // namespace belseq::claims
