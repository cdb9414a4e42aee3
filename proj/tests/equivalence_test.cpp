// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/claims/generators.hpp"
#include "belseq/equivalence.hpp"
#include "doctest.h"

using namespace belseq;

namespace {

Formula P(const char* text) { return parse(text); }

BeliefSequence seq_of(std::initializer_list<const char*> texts) {
    std::vector<Formula> fs;
    for (const char* t : texts) fs.push_back(parse(t));
    return BeliefSequence(fs);
}

// Direct route: ask every canonical query through answer_query.
bool equivalent_by_queries(const BeliefSequence& a, const BeliefSequence& b) {
    for (const auto& q : enumerate_canonical_queries(a.language().united(b.language()))) {
        const std::size_t k = std::max(saturation_level(a, q.formula), saturation_level(b, q.formula));
        const QueryContext ctx{q.formula, k, Mode::liberal, std::nullopt};
        if (answer_query(a, ctx) != answer_query(b, ctx)) return false;
    }
    return true;
}

bool subsumes_by_queries(const BeliefSequence& a, const BeliefSequence& b) {
    for (const auto& q : enumerate_canonical_queries(a.language().united(b.language())))
        if (in_C(b, q.formula) && !in_C(a, q.formula)) return false;
    return true;
}

void check_witness(const BeliefSequence& a, const BeliefSequence& b, const EquivalenceWitness& w) {
    BeliefSequence ra = a;
    BeliefSequence rb = b;
    for (const auto& f : w.revisions) {
        ra = revise(ra, f);
        rb = revise(rb, f);
    }
    const QueryContext ctx{w.query, w.k, Mode::liberal, std::nullopt};
    CHECK(answer_query(ra, ctx) == w.answer_a);
    CHECK(answer_query(rb, ctx) == w.answer_b);
    CHECK(w.answer_a != w.answer_b);
}

}  // namespace

TEST_CASE("equivalence of the classic pair") {
    const auto s1 = seq_of({"~p&~q"});
    const auto s2 = seq_of({"p", "~p&~q"});
    const auto plain = equivalent_sequences(s1, s2);
    CHECK(plain.result);
    CHECK_FALSE(plain.witness);

    const auto strong = strongly_equivalent_bounded(s1, s2, 1);
    CHECK_FALSE(strong.result);
    REQUIRE(strong.witness);
    REQUIRE(strong.witness->revisions.size() == 1);
    CHECK(equivalent(strong.witness->revisions[0], P("p | q")));
    CHECK(render(strong.witness->query) == "p");
    CHECK(strong.witness->answer_a == Answer::no_information);
    CHECK(strong.witness->answer_b == Answer::yes);
    check_witness(s1, s2, *strong.witness);
    CHECK(describe(strong, true) ==
          "not strongly equivalent (searched depth 1); witness: revise p | q, query p at k=0 "
          "(no_information vs yes)");

    CHECK(strongly_equivalent_bounded(s1, s2, 0).result);
}

TEST_CASE("inequivalent sequences yield a replayable witness") {
    const auto a = seq_of({"p"});
    const auto b = seq_of({"q"});
    const auto v = equivalent_sequences(a, b);
    CHECK_FALSE(v.result);
    REQUIRE(v.witness);
    CHECK(render(v.witness->query) == "p");
    CHECK(v.witness->k == 0);
    check_witness(a, b, *v.witness);
    CHECK(describe(v, false) == "not equivalent; witness: query p at k=0 (yes vs no_information)");

    const auto strong = strongly_equivalent_bounded(a, b, 0);
    CHECK_FALSE(strong.result);
    CHECK(strong.witness->revisions.empty());
}

TEST_CASE("reflexivity") {
    const auto s = seq_of({"p", "~p | q", "r & ~q"});
    CHECK(equivalent_sequences(s, s).result);
    CHECK(strongly_equivalent_bounded(s, s, 1).result);
    CHECK(subsumes(s, s));
    CHECK(describe(strongly_equivalent_bounded(s, s, 1), true) == "strongly equivalent up to depth 1");
}

TEST_CASE("subsumption") {
    CHECK(subsumes(seq_of({"p&q"}), seq_of({"p"})));
    CHECK_FALSE(subsumes(seq_of({"p"}), seq_of({"p&q"})));
    CHECK_FALSE(subsumes(seq_of({"p"}), seq_of({"q"})));
}

TEST_CASE("cap is enforced") {
    CHECK_THROWS_AS(equivalent_sequences(seq_of({"p & q & r & s & t"}), seq_of({"p"})), CapExceeded);
    CHECK_THROWS_AS(equivalent_sequences(seq_of({"p & q & r"}), seq_of({"p"}), 2), CapExceeded);
}

TEST_CASE("projection route agrees with query-by-query answering") {
    claims::Rng rng(41);
    const auto pool = claims::atom_pool(3);
    for (int i = 0; i < 120; ++i) {
        const auto a = claims::random_sequence(rng, pool, 4);
        const auto b = rng.chance(30) ? a.revised(claims::random_formula(rng, pool)) : claims::random_sequence(rng, pool, 4);
        const auto v = equivalent_sequences(a, b);
        CHECK(v.result == equivalent_by_queries(a, b));
        if (v.witness) check_witness(a, b, *v.witness);
        CHECK(subsumes(a, b) == subsumes_by_queries(a, b));
        CHECK(equivalent_sequences(b, a).result == v.result);
        CHECK((subsumes(a, b) && subsumes(b, a)) == v.result);
    }
}

TEST_CASE("depth monotonicity of bounded strong equivalence") {
    claims::Rng rng(43);
    const auto pool = claims::atom_pool(2);
    for (int i = 0; i < 40; ++i) {
        const auto a = claims::random_sequence(rng, pool, 3);
        const auto b = claims::random_sequence(rng, pool, 3);
        const bool d0 = strongly_equivalent_bounded(a, b, 0).result;
        const auto d1 = strongly_equivalent_bounded(a, b, 1);
        const bool d2 = strongly_equivalent_bounded(a, b, 2).result;
        CHECK(d0 == equivalent_sequences(a, b).result);
        if (d1.result) CHECK(d0);
        if (d2) CHECK(d1.result);
        if (!d1.result) {
            CHECK_FALSE(d2);
            check_witness(a, b, *d1.witness);
        }
    }
}
