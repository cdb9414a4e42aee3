// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include <json.hpp>

#include "belseq/claims/generators.hpp"
#include "belseq/claims/reports.hpp"
#include "doctest.h"

using namespace belseq;
using namespace belseq::claims;

namespace {

const ClaimReport& row(const std::vector<ClaimReport>& rows, const std::string& id) {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const ClaimReport& r) { return r.id == id; });
    REQUIRE_MESSAGE(it != rows.end(), id);
    return *it;
}

void expect_replays(const std::vector<ClaimReport>& rows) {
    for (const auto& r : rows) {
        if (r.status == Status::fails) CHECK_FALSE(r.counterexamples.empty());
        for (const auto& cx : r.counterexamples) {
            INFO(r.id << ": " << cx.to_string());
            CHECK(replay_violates(r.id, cx) == std::optional<bool>(true));
        }
    }
}

Language two_atoms() { return Language{"p", "q"}; }

}  // namespace

TEST_CASE("epstein conditions over the two-atom pool") {
    const auto rows = epstein_report(two_atoms());
    for (const auto& r : rows) CHECK_MESSAGE(r.conforms(), r.id);
    for (auto id : {"Related-R1", "Related-R3", "Related-R6", "Related-R5a", "Related-R4-nonempty", "Related-implies-Overlap"}) {
        CHECK(row(rows, id).violations == 0);
        CHECK(row(rows, id).trials > 0);
    }

    const auto& r2 = row(rows, "Related-R2");
    REQUIRE(r2.status == Status::fails);
    const auto& w = r2.counterexamples.front();
    CHECK(w.alpha == "p");
    CHECK(w.beta == "p");
    CHECK(w.gamma == "~p");
    CHECK(row(rows, "Related-R5").status == Status::fails);
    CHECK(row(rows, "Related-R5").violations > 1);
    CHECK(row(rows, "Related-R4").counterexamples.front().alpha == "p & ~p");
    CHECK(row(rows, "Overlap-R6").status == Status::fails);
    expect_replays(rows);
}

TEST_CASE("equal-language rules under both readings") {
    const auto literal = prop2_report(300, 7, Reading::literal);
    const auto shared = prop2_report(300, 7, Reading::shared_language);
    CHECK(literal.size() == 6);
    CHECK(shared.size() == 6);
    for (const auto& r : literal) {
        CHECK_MESSAGE(r.conforms(), r.id);
        CHECK(r.trials >= 300);
    }
    for (const auto& r : shared) CHECK_MESSAGE(r.status == Status::holds, r.id);

    const auto& adj = row(literal, "Rule-Adjunction-literal");
    REQUIRE(adj.status == Status::fails);
    const auto& fixed = adj.counterexamples.front();
    CHECK(fixed.sequence == std::vector<std::string>{"~p", "q", "p | ~q"});
    CHECK(fixed.alpha == "p | q");
    CHECK(fixed.beta == "p | ~q");
    CHECK(fixed.k == 0);
    CHECK(row(shared, "Rule-Adjunction-shared_language").violations == 0);
    expect_replays(literal);
}

TEST_CASE("zero samples hold vacuously") {
    for (auto reading : {Reading::literal, Reading::shared_language})
        for (const auto& r : prop2_report(0, 3, reading)) {
            CHECK(r.trials == 0);
            CHECK(r.status == Status::holds);
        }
}

TEST_CASE("structural claims conform") {
    const auto rows = structural_report(150, 3);
    for (const auto& r : rows) CHECK_MESSAGE(r.conforms(), r.id << " violations=" << r.violations);
    CHECK(row(rows, "Rel-Reflexivity-unrestricted").counterexamples.front().alpha == "p & ~p");
    CHECK(row(rows, "Oracle-SmallestLanguage").trials >= 16 + 256 + 150);
    CHECK(row(rows, "Battery-Weak-Monotonicity-Failure").status == Status::holds);
    expect_replays(rows);
}

TEST_CASE("reports are deterministic in samples and seed") {
    const auto a = to_json(prop2_report(80, 11, Reading::literal));
    const auto b = to_json(prop2_report(80, 11, Reading::literal));
    CHECK(a == b);
    CHECK(to_json(structural_report(40, 5)) == to_json(structural_report(40, 5)));
}

TEST_CASE("json and table output") {
    const auto rows = epstein_report(two_atoms());
    const auto j = nlohmann::json::parse(to_json(rows));
    REQUIRE(j.is_array());
    CHECK(j.size() == rows.size());
    const auto r2 = std::find_if(j.begin(), j.end(), [](const auto& x) { return x["id"] == "Related-R2"; });
    REQUIRE(r2 != j.end());
    CHECK((*r2)["status"] == "fails");
    CHECK((*r2)["counterexamples"][0]["gamma"] == "~p");
    const std::string table = format_table(rows);
    CHECK(table.find("Related-R5a") != std::string::npos);
    CHECK(table.find("NO") == std::string::npos);
}

TEST_CASE("unknown claim ids do not replay") {
    CHECK_FALSE(replay_violates("No-Such-Claim", Counterexample{}).has_value());
}

TEST_CASE("a broken priority order is caught") {
    testing::set_mutant(testing::Mutant::oldest_first);
    const auto rows = structural_report(30, 1);
    testing::set_mutant(testing::Mutant::none);
    CHECK_FALSE(row(rows, "Battery-Weak-Monotonicity-Failure").conforms());
}

TEST_CASE("accepting inconsistent elements is caught") {
    testing::set_mutant(testing::Mutant::accept_all);
    const auto rows = structural_report(60, 1);
    testing::set_mutant(testing::Mutant::none);
    CHECK_FALSE(row(rows, "Gamma-Consistency").conforms());
}
