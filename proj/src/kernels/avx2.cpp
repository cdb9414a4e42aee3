// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "belseq/kernels.hpp"
#include "kernels_internal.hpp"

namespace belseq::kernels {
namespace {

inline __m256i load(const std::uint64_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint64_t* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

template <class VecOp, class WordOp>
inline void binary(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, VecOp vop, WordOp wop) {
    std::size_t i = 0;
    const std::size_t n = dst.size();
    for (; i + 4 <= n; i += 4) store(dst.data() + i, vop(load(dst.data() + i), load(src.data() + i)));
    for (; i < n; ++i) dst[i] = wop(dst[i], src[i]);
}

void and_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    binary(dst, src, [](__m256i a, __m256i b) { return _mm256_and_si256(a, b); },
           [](std::uint64_t a, std::uint64_t b) { return a & b; });
}

void or_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    binary(dst, src, [](__m256i a, __m256i b) { return _mm256_or_si256(a, b); },
           [](std::uint64_t a, std::uint64_t b) { return a | b; });
}

void xor_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    binary(dst, src, [](__m256i a, __m256i b) { return _mm256_xor_si256(a, b); },
           [](std::uint64_t a, std::uint64_t b) { return a ^ b; });
}

void andnot_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    // _mm256_andnot_si256(a, b) computes ~a & b
    binary(dst, src, [](__m256i a, __m256i b) { return _mm256_andnot_si256(b, a); },
           [](std::uint64_t a, std::uint64_t b) { return a & ~b; });
}

void not_avx2(std::span<std::uint64_t> dst) {
    const __m256i ones = _mm256_set1_epi64x(-1);
    std::size_t i = 0;
    for (; i + 4 <= dst.size(); i += 4) store(dst.data() + i, _mm256_xor_si256(load(dst.data() + i), ones));
    for (; i < dst.size(); ++i) dst[i] = ~dst[i];
}

bool any_avx2(std::span<const std::uint64_t> src) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= src.size(); i += 4) acc = _mm256_or_si256(acc, load(src.data() + i));
    if (!_mm256_testz_si256(acc, acc)) return true;
    for (; i < src.size(); ++i)
        if (src[i] != 0) return true;
    return false;
}

std::uint64_t popcount_avx2(std::span<const std::uint64_t> src) {
    // No AVX2 popcount instruction; the hardware popcnt per word is the fastest option.
    std::uint64_t n = 0;
    for (auto w : src) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
}

bool cofactors_differ_avx2(std::span<const std::uint64_t> table, unsigned var, unsigned num_vars) {
    if (var < 6) return detail::in_word_cofactors_differ(table, var, num_vars);
    const std::size_t stride = std::size_t{1} << (var - 6);
    for (std::size_t base = 0; base < table.size(); base += 2 * stride) {
        std::size_t i = base;
        const std::size_t end = base + stride;
        for (; i + 4 <= end; i += 4) {
            __m256i diff = _mm256_xor_si256(load(table.data() + i), load(table.data() + i + stride));
            if (!_mm256_testz_si256(diff, diff)) return true;
        }
        for (; i < end; ++i)
            if (table[i] != table[i + stride]) return true;
    }
    return false;
}

void exists_avx2(std::span<std::uint64_t> table, unsigned var, unsigned num_vars) {
    if (var < 6) {
        detail::in_word_exists(table, var, num_vars);
        return;
    }
    const std::size_t stride = std::size_t{1} << (var - 6);
    for (std::size_t base = 0; base < table.size(); base += 2 * stride) {
        std::size_t i = base;
        const std::size_t end = base + stride;
        for (; i + 4 <= end; i += 4) {
            __m256i u = _mm256_or_si256(load(table.data() + i), load(table.data() + i + stride));
            store(table.data() + i, u);
            store(table.data() + i + stride, u);
        }
        for (; i < end; ++i) {
            const std::uint64_t u = table[i] | table[i + stride];
            table[i] = u;
            table[i + stride] = u;
        }
    }
}

}  // namespace

namespace detail {

const Ops& avx2_table() {
    static const Ops ops{
        Backend::avx2, and_avx2,       or_avx2,    xor_avx2,      andnot_avx2,
        not_avx2,      any_avx2,       cofactors_differ_avx2,     exists_avx2,
        popcount_avx2,
    };
    return ops;
}

}  // namespace detail
}  // namespace belseq::kernels
