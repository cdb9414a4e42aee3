// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Bit-parallel kernels over packed truth tables.
//
// A truth table over n variables holds 2^n bits; valuation j is stored at bit
// (j & 63) of word (j >> 6), and variable i is true in valuation j iff bit i
// of j is set. Tables with n < 6 occupy one word and keep the unused high
// bits cleared.
namespace belseq::kernels {

enum class Backend { scalar, avx2 };

struct Ops {
    Backend backend;
    void (*bit_and)(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
    void (*bit_or)(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
    void (*bit_xor)(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
    // dst &= ~src
    void (*bit_andnot)(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
    // dst = ~dst; the caller re-applies the valid-bit mask for n < 6.
    void (*bit_not)(std::span<std::uint64_t> dst);
    bool (*any)(std::span<const std::uint64_t> src);
    // True when the two cofactors of `var` differ, i.e. the function depends on var.
    bool (*cofactors_differ)(std::span<const std::uint64_t> table, unsigned var, unsigned num_vars);
    // Existential quantification of `var` in place: both cofactors become their union.
    void (*exists)(std::span<std::uint64_t> table, unsigned var, unsigned num_vars);
    std::uint64_t (*popcount)(std::span<const std::uint64_t> src);
};

const Ops& scalar_ops();

// Returns nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const Ops* avx2_ops();

// The backend used by the library. Defaults to the fastest available one;
// BELSEQ_KERNELS=scalar in the environment forces the reference kernels.
const Ops& active();
void select(Backend backend);
std::string_view backend_name(Backend backend);

// Pattern word for variable var < 6 (bits j with bit var of j set).
constexpr std::uint64_t var_pattern(unsigned var) {
    constexpr std::uint64_t patterns[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
    };
    return patterns[var];
}

constexpr std::uint64_t valid_mask(unsigned num_vars) {
    return num_vars >= 6 ? ~0ull : ((1ull << (1u << num_vars)) - 1);
}

constexpr std::size_t word_count(unsigned num_vars) {
    return num_vars <= 6 ? 1 : (std::size_t{1} << (num_vars - 6));
}

}  // namespace belseq::kernels
