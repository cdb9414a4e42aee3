// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/claims/generators.hpp"
#include "belseq/inference.hpp"
#include "doctest.h"

using namespace belseq;

namespace {

Formula P(const char* text) { return parse(text); }

BeliefSequence seq_of(std::initializer_list<const char*> texts) {
    std::vector<Formula> fs;
    for (const char* t : texts) fs.push_back(parse(t));
    return BeliefSequence(fs);
}

QueryContext ask(const char* q, std::size_t k = 0, Mode mode = Mode::liberal) { return {P(q), k, mode, std::nullopt}; }

std::vector<std::string> rendered(const std::vector<Formula>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(render(f));
    return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("revision appends verbatim") {
    const auto seq = seq_of({"p", "q", "p&q", "~r"});
    const auto revised = revise(seq, P("~p"));
    CHECK(revised == seq_of({"p", "q", "p&q", "~r", "~p"}));
    CHECK(seq.size() == 4);
    CHECK(revise(BeliefSequence{}, P("p")) == seq_of({"p"}));
    const auto twice = revise(seq_of({"p"}), P("p"));
    REQUIRE(twice.size() == 2);
    CHECK(twice[1].index == 1);
    CHECK(revise(seq_of({"p"}), P("p & (q | ~q)"))[1].formula == P("p & (q | ~q)"));
}

TEST_CASE("initial segments") {
    CHECK(initial_segment(seq_of({"p"}), seq_of({"p", "q"})));
    CHECK(initial_segment(seq_of({"p"}), seq_of({"p"})));
    CHECK_FALSE(initial_segment(seq_of({"q"}), seq_of({"p", "q"})));
    CHECK_FALSE(initial_segment(seq_of({"p", "q"}), seq_of({"p"})));
}

TEST_CASE("priority order sorts by relevance then recency") {
    const auto order = priority_order(seq_of({"p", "~p&~q", "q"}), ask("~p", 1));
    REQUIRE(order.size() == 3);
    CHECK(order[0].index == 1);
    CHECK(order[0].rel == RelLevel(0));
    CHECK(order[1].index == 0);
    CHECK(order[1].rel == RelLevel(0));
    CHECK(order[2].index == 2);
    CHECK(order[2].rel == RelLevel(1));

    const auto recency = priority_order(seq_of({"p", "~p&~q", "p|q"}), ask("p"));
    REQUIRE(recency.size() == 3);
    CHECK(recency[0].index == 2);
    CHECK(recency[1].index == 1);
    CHECK(recency[2].index == 0);

    CHECK(priority_order(BeliefSequence{}, ask("p")).empty());
    CHECK(priority_order(seq_of({"p", "~p&~q", "q"}), ask("~p", 0)).size() == 2);
}

TEST_CASE("gamma construction, liberal and strict") {
    const auto seq = seq_of({"p", "~p&~q", "p|q"});
    const auto liberal = build_gamma(seq, ask("p"));
    CHECK(rendered(liberal.formulas()) == Strings{"p | q", "p"});
    REQUIRE(liberal.trace.size() == 3);
    CHECK(liberal.trace[1].formula == P("~p&~q"));
    CHECK(liberal.trace[1].decision == Decision::rejected_inconsistent);

    const auto strict = build_gamma(seq, ask("p", 0, Mode::strict));
    CHECK(rendered(strict.formulas()) == Strings{"p | q"});
    CHECK(strict.trace[1].decision == Decision::halted);
    CHECK(strict.trace[2].decision == Decision::halted);

    CHECK(build_gamma(BeliefSequence{}, ask("p")).accepted.empty());

    const auto irrelevant = build_gamma(seq_of({"p&q", "r&~q", "s"}), ask("p"));
    REQUIRE(irrelevant.trace.size() == 3);
    CHECK(irrelevant.trace[1].decision == Decision::rejected_irrelevant);
    CHECK(irrelevant.trace[1].rel == RelLevel(1));
    CHECK(irrelevant.trace[2].rel == RelLevel::infinity());
}

TEST_CASE("inference and query answering") {
    CHECK(infer(seq_of({"p", "~p&~q", "p|q"}), ask("p")));
    CHECK(infer(seq_of({"p&q", "r&~q"}), ask("r")));
    CHECK(infer(BeliefSequence{}, ask("true")));
    CHECK(answer_query(seq_of({"p&q", "~p|~q"}), ask("p")) == Answer::no_information);
    CHECK(answer_query(seq_of({"p&q", "~p|~q"}), ask("~p")) == Answer::no_information);
    CHECK(answer_query(seq_of({"p", "~(p|q)"}), ask("p")) == Answer::no);
    CHECK(answer_query(seq_of({"p", "~p&~q", "q"}), ask("~p")) == Answer::yes);
    CHECK(answer_query(BeliefSequence{}, ask("p")) == Answer::no_information);
    CHECK(answer_query(seq_of({"p"}), ask("false")) == Answer::no);
}

TEST_CASE("query language override") {
    const auto seq = seq_of({"~p", "q", "p|~q"});
    CHECK(answer_query(seq, ask("p")) == Answer::no);
    QueryContext shared = ask("p");
    shared.query_language = Language{"p", "q"};
    CHECK(answer_query(seq, shared) == Answer::yes);
    shared.query_language = Language{"q"};
    CHECK_THROWS_AS(answer_query(seq, shared), std::invalid_argument);
}

TEST_CASE("saturation and C") {
    CHECK(saturation_level(seq_of({"p&q", "r&~q"}), P("p")) == 1);
    CHECK(saturation_level(BeliefSequence{}, P("p")) == 0);
    CHECK(saturation_level(seq_of({"q"}), P("p")) == 0);
    CHECK(in_C(seq_of({"p&q", "r&~q"}), P("p")));
    CHECK_FALSE(in_C(seq_of({"p"}), P("q")));
    CHECK(in_C(BeliefSequence{}, P("true")));
    // r reaches p through r -> q and q -> p
    const auto s = seq_of({"r", "r -> q", "q -> p"});
    CHECK(saturation_level(s, P("p")) == 2);
    CHECK(in_C(s, P("p")));
    CHECK_FALSE(infer(s, ask("p", 1)));
}

TEST_CASE("consequence sets over canonical queries") {
    CHECK(rendered(consequences(seq_of({"p"}), 0, Language{"p"})) == Strings{"p", "true"});
    CHECK(rendered(consequences(BeliefSequence{}, 0, Language{"p"})) == Strings{"true"});
    CHECK(rendered(consequences(seq_of({"p", "~p"}), 0, Language{"p"})) == Strings{"~p", "true"});
    CHECK_THROWS_AS(consequences(BeliefSequence{}, 0, Language{"p", "q", "r", "s", "t"}), CapExceeded);
}

TEST_CASE("worked-example battery") {
    const auto s = seq_of({"p", "~p&~q", "q"});
    for (std::size_t k : {0u, 1u}) {
        CHECK(answer_query(s, ask("p&q", k)) == Answer::yes);
        CHECK(answer_query(s, ask("~p", k)) == Answer::yes);
        CHECK(answer_query(revise(s, P("p&q")), ask("~p", k)) != Answer::yes);
    }
    for (std::size_t k = 0; k <= 3; ++k) {
        CHECK(infer(seq_of({"p"}), ask("p", k)));
        CHECK_FALSE(infer(seq_of({"p", "~(p|q)"}), ask("p", k)));
    }
    CHECK(answer_query(seq_of({"p&q", "r&~q"}), ask("p", 1)) == Answer::yes);
}

TEST_CASE("gamma invariants on random instances") {
    claims::Rng rng(77);
    const auto pool = claims::atom_pool(4);
    for (int i = 0; i < 300; ++i) {
        const auto seq = claims::random_sequence(rng, pool, 8);
        const Formula q = claims::random_formula(rng, pool);
        const std::size_t k = rng.below(3);
        const auto liberal = build_gamma(seq, QueryContext{q, k, Mode::liberal, std::nullopt});
        const auto strict = build_gamma(seq, QueryContext{q, k, Mode::strict, std::nullopt});
        CHECK(is_satisfiable(liberal.formulas()));
        CHECK(liberal.trace.size() == seq.size());
        for (const auto& e : liberal.accepted) CHECK(e.rel.within(k));
        for (const auto& t : liberal.trace)
            if (t.decision == Decision::rejected_inconsistent) {
                auto plus = liberal.formulas();
                plus.push_back(t.formula);
                CHECK_FALSE(is_satisfiable(plus));
            }
        REQUIRE(strict.accepted.size() <= liberal.accepted.size());
        for (std::size_t j = 0; j < strict.accepted.size(); ++j)
            CHECK(strict.accepted[j].index == liberal.accepted[j].index);
        const auto next = build_gamma(seq, QueryContext{q, k + 1, Mode::liberal, std::nullopt});
        for (const auto& e : liberal.accepted) {
            bool found = false;
            for (const auto& n : next.accepted) found = found || n.index == e.index;
            CHECK(found);
        }
    }
}

TEST_CASE("mutants change behaviour") {
    const auto seq = seq_of({"p", "~p&~q", "p|q"});
    testing::set_mutant(testing::Mutant::oldest_first);
    CHECK(answer_query(seq_of({"p", "~(p|q)"}), ask("p")) == Answer::yes);
    testing::set_mutant(testing::Mutant::accept_all);
    CHECK_FALSE(is_satisfiable(build_gamma(seq, ask("p")).formulas()));
    testing::set_mutant(testing::Mutant::none);
    CHECK(answer_query(seq, ask("p")) == Answer::yes);
}
