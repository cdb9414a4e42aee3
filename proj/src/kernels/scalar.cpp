// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include <bit>

#include "belseq/kernels.hpp"
#include "kernels_internal.hpp"

namespace belseq::kernels {
namespace {

void and_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

void or_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

void xor_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

void andnot_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= ~src[i];
}

void not_scalar(std::span<std::uint64_t> dst) {
    for (auto& w : dst) w = ~w;
}

bool any_scalar(std::span<const std::uint64_t> src) {
    for (auto w : src)
        if (w != 0) return true;
    return false;
}

std::uint64_t popcount_scalar(std::span<const std::uint64_t> src) {
    std::uint64_t n = 0;
    for (auto w : src) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
}

bool cofactors_differ_scalar(std::span<const std::uint64_t> table, unsigned var, unsigned num_vars) {
    if (var < 6) return detail::in_word_cofactors_differ(table, var, num_vars);
    const std::size_t stride = std::size_t{1} << (var - 6);
    for (std::size_t base = 0; base < table.size(); base += 2 * stride)
        for (std::size_t i = base; i < base + stride; ++i)
            if (table[i] != table[i + stride]) return true;
    return false;
}

void exists_scalar(std::span<std::uint64_t> table, unsigned var, unsigned num_vars) {
    if (var < 6) {
        detail::in_word_exists(table, var, num_vars);
        return;
    }
    const std::size_t stride = std::size_t{1} << (var - 6);
    for (std::size_t base = 0; base < table.size(); base += 2 * stride)
        for (std::size_t i = base; i < base + stride; ++i) {
            const std::uint64_t u = table[i] | table[i + stride];
            table[i] = u;
            table[i + stride] = u;
        }
}

}  // namespace

namespace detail {

bool in_word_cofactors_differ(std::span<const std::uint64_t> table, unsigned var, unsigned num_vars) {
    const unsigned shift = 1u << var;
    const std::uint64_t low = ~var_pattern(var) & valid_mask(num_vars);
    for (auto w : table)
        if (((w ^ (w >> shift)) & low) != 0) return true;
    return false;
}

void in_word_exists(std::span<std::uint64_t> table, unsigned var, unsigned num_vars) {
    const unsigned shift = 1u << var;
    const std::uint64_t high = var_pattern(var);
    const std::uint64_t mask = valid_mask(num_vars);
    for (auto& w : table) {
        std::uint64_t folded = (w & ~high) | ((w & high) >> shift);
        w = (folded | (folded << shift)) & mask;
    }
}

}  // namespace detail

const Ops& scalar_ops() {
    static const Ops ops{
        Backend::scalar, and_scalar,       or_scalar,    xor_scalar,      andnot_scalar,
        not_scalar,      any_scalar,       cofactors_differ_scalar,       exists_scalar,
        popcount_scalar,
    };
    return ops;
}

}  // namespace belseq::kernels
