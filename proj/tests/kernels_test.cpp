// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <vector>

#include "belseq/kernels.hpp"
#include "belseq/truth_table.hpp"
#include "doctest.h"

using namespace belseq;
using kernels::Ops;

namespace {

std::vector<std::uint64_t> random_table(std::mt19937_64& rng, unsigned n) {
    std::vector<std::uint64_t> t(kernels::word_count(n));
    for (auto& w : t) w = rng() & kernels::valid_mask(n);
    return t;
}

// Reference semantics straight from the bit layout.
bool bit_at(const std::vector<std::uint64_t>& t, std::uint64_t j) { return (t[j >> 6] >> (j & 63)) & 1u; }

bool depends_naive(const std::vector<std::uint64_t>& t, unsigned var, unsigned n) {
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j)
        if (((j >> var) & 1u) == 0 && bit_at(t, j) != bit_at(t, j | (std::uint64_t{1} << var))) return true;
    return false;
}

}  // namespace

TEST_CASE("scalar kernels match bit-level semantics") {
    std::mt19937_64 rng(11);
    const Ops& ops = kernels::scalar_ops();
    for (unsigned n = 0; n <= 12; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            auto t = random_table(rng, n);
            for (unsigned v = 0; v < n; ++v) {
                CHECK(ops.cofactors_differ(t, v, n) == depends_naive(t, v, n));
                auto e = t;
                ops.exists(e, v, n);
                for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
                    const std::uint64_t lo = j & ~(std::uint64_t{1} << v);
                    const std::uint64_t hi = j | (std::uint64_t{1} << v);
                    CHECK(bit_at(e, j) == (bit_at(t, lo) || bit_at(t, hi)));
                }
            }
        }
}

TEST_CASE("avx2 kernels are equivalent to the scalar reference") {
    const Ops* fast = kernels::avx2_ops();
    if (fast == nullptr) {
        MESSAGE("AVX2 unavailable; skipping equivalence check");
        return;
    }
    const Ops& ref = kernels::scalar_ops();
    std::mt19937_64 rng(29);
    for (unsigned n = 0; n <= 14; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            const auto a = random_table(rng, n);
            auto b = random_table(rng, n);
            if (trial % 5 == 0) b = a;  // exercise the all-equal paths

            auto binary = [&](auto Ops::*op) {
                auto x = a;
                auto y = a;
                (ref.*op)(x, b);
                (fast->*op)(y, b);
                CHECK(x == y);
            };
            binary(&Ops::bit_and);
            binary(&Ops::bit_or);
            binary(&Ops::bit_xor);
            binary(&Ops::bit_andnot);

            auto x = a;
            auto y = a;
            ref.bit_not(x);
            fast->bit_not(y);
            CHECK(x == y);

            std::vector<std::uint64_t> zero(a.size(), 0);
            CHECK(ref.any(a) == fast->any(a));
            CHECK(ref.any(zero) == fast->any(zero));
            CHECK_FALSE(fast->any(zero));
            CHECK(ref.popcount(a) == fast->popcount(a));

            for (unsigned v = 0; v < n; ++v) {
                CHECK(ref.cofactors_differ(a, v, n) == fast->cofactors_differ(a, v, n));
                auto ex = a;
                auto ey = a;
                ref.exists(ex, v, n);
                fast->exists(ey, v, n);
                CHECK(ex == ey);
            }
        }
}

TEST_CASE("truth tables agree across backends") {
    if (kernels::avx2_ops() == nullptr) return;
    const std::vector<std::string> vars = {"a", "b", "c", "d", "e", "f", "g", "h", "i"};
    const Formula f = parse("(a -> b) & (c | ~i) <-> (h & g | d)");
    kernels::select(kernels::Backend::scalar);
    const TruthTable s = TruthTable::of(f, vars);
    const bool sd = s.depends_on(8);
    kernels::select(kernels::Backend::avx2);
    const TruthTable v = TruthTable::of(f, vars);
    CHECK(s == v);
    CHECK(sd == v.depends_on(8));
    CHECK_FALSE(v.depends_on(4));
}

TEST_CASE("truth table projection") {
    const std::vector<std::string> vars = {"p", "q", "r"};
    // (p & q) | r projected onto {p}: both values of p remain possible.
    const TruthTable t = TruthTable::of(parse("p & q & ~r"), vars);
    const TruthTable onto_p = t.project({"p"});
    CHECK(onto_p.vars() == std::vector<std::string>{"p"});
    CHECK_FALSE(onto_p.bit(0));
    CHECK(onto_p.bit(1));
    const TruthTable onto_rq = t.project({"r", "q"});
    // only r=0, q=1 (row 0b10) survives
    CHECK(onto_rq.count() == 1);
    CHECK(onto_rq.bit(2));
}

TEST_CASE("backend selection") {
    kernels::select(kernels::Backend::scalar);
    CHECK(kernels::active().backend == kernels::Backend::scalar);
    if (kernels::avx2_ops() != nullptr) {
        kernels::select(kernels::Backend::avx2);
        CHECK(kernels::active().backend == kernels::Backend::avx2);
    } else {
        CHECK_THROWS(kernels::select(kernels::Backend::avx2));
    }
    CHECK(kernels::backend_name(kernels::Backend::avx2) == "avx2");
}
