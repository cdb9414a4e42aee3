// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <thread>

#include <httplib.h>

#include "belseq/session/server.hpp"
#include "belseq/session/store.hpp"
#include "belseq/session/wire.hpp"
#include "doctest.h"

using namespace belseq;
using namespace belseq::session;
using wire::json;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("belseq_" + name + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    return dir;
}

// A server on an ephemeral port for the lifetime of the fixture.
struct LiveServer {
    SessionStore store;
    Server server{store};
    int port = -1;
    std::thread thread;

    LiveServer() {
        port = server.bind_any("127.0.0.1");
        REQUIRE(port > 0);
        thread = std::thread([this] { server.serve(); });
        server.wait_until_ready();
    }
    ~LiveServer() {
        server.stop();
        thread.join();
    }
    httplib::Client client() const { return httplib::Client("127.0.0.1", port); }
};

json post(httplib::Client& c, const std::string& path, const json& body, int expect) {
    auto res = c.Post(path, body.dump(), "application/json");
    REQUIRE(res);
    CHECK_MESSAGE(res->status == expect, path << " -> " << res->body);
    return json::parse(res->body);
}

json get(httplib::Client& c, const std::string& path, int expect) {
    auto res = c.Get(path);
    REQUIRE(res);
    CHECK_MESSAGE(res->status == expect, path << " -> " << res->body);
    return json::parse(res->body);
}

std::vector<std::string> formulas_of(const json& list) {
    std::vector<std::string> out;
    for (const auto& e : list) out.push_back(e["formula"]);
    return out;
}

}  // namespace

TEST_CASE("store: create, revise, pop, reset") {
    SessionStore store;
    const auto a = store.create({});
    const auto b = store.create({2, Mode::strict});
    CHECK(a.id != b.id);
    CHECK(a.sequence.empty());
    CHECK(store.get(b.id).defaults.k == 2);
    CHECK(store.get(b.id).defaults.mode == Mode::strict);

    CHECK(store.revise(a.id, parse("p")) == 0);
    CHECK(store.revise(a.id, parse("~p")) == 1);
    CHECK(store.export_text(a.id) == "p\n~p");
    CHECK(store.pop(a.id));
    CHECK(store.export_text(a.id) == "p");
    store.reset(a.id);
    CHECK(store.get(a.id).sequence.empty());
    CHECK_FALSE(store.pop(a.id));
    CHECK_THROWS_AS(store.revise("nope", parse("p")), SessionNotFound);
}

TEST_CASE("store: queries match the library and never mutate") {
    SessionStore store;
    const auto s = store.create({}, parse_sequence_text("p\n~p & ~q\np | q"));
    const QueryContext ctx{parse("p"), 0, Mode::liberal, std::nullopt};
    const auto before = store.export_text(s.id);
    const auto r1 = wire::query_json(ctx, store.query(s.id, ctx));
    const auto r2 = wire::query_json(ctx, store.query(s.id, ctx));
    CHECK(r1 == r2);
    CHECK(store.export_text(s.id) == before);
    CHECK(r1["answer"] == to_string(answer_query(store.get(s.id).sequence, ctx)));
    CHECK(formulas_of(r1["gamma"]) == std::vector<std::string>{"p | q", "p"});
}

TEST_CASE("store: log replay reconstructs identical exports") {
    const auto dir = scratch_dir("replay");
    std::string id, exported;
    {
        SessionStore store(dir);
        id = store.create({1, Mode::strict}, parse_sequence_text("# header\np\nq")).id;
        store.revise(id, parse("p & q -> r"));
        store.revise(id, parse("~(p | s)"));
        store.pop(id);
        store.revise(id, parse("r <-> s"));
        exported = store.export_text(id);
    }
    SessionStore reloaded(dir);
    CHECK(reloaded.export_text(id) == exported);
    CHECK(reloaded.get(id).defaults.k == 1);
    CHECK(reloaded.get(id).defaults.mode == Mode::strict);
    reloaded.reset(id);
    SessionStore again(dir);
    CHECK(again.export_text(id).empty());
    std::filesystem::remove_all(dir);
}

TEST_CASE("wire: rel levels and relevance views") {
    CHECK(wire::rel_json(RelLevel(2)) == 2);
    CHECK(wire::rel_json(RelLevel::infinity()) == "infinity");

    const auto seq = parse_sequence_text("p & q\nr & ~q");
    const auto view = wire::relevance_json(parse("p"), seq);
    REQUIRE(view["profile"].size() == 2);
    CHECK(view["profile"][0]["rel"] == 0);
    CHECK(view["profile"][1]["rel"] == 1);
    CHECK(view["edges"] == json::array({json::array({0, 1})}));
    CHECK(wire::relevance_json(parse("p"), BeliefSequence())["profile"].empty());
    CHECK(wire::relevance_json(parse("true"), parse_sequence_text("p"))["profile"][0]["rel"] == "infinity");
}

TEST_CASE("http: session lifecycle") {
    LiveServer live;
    auto c = live.client();

    const json s = post(c, "/sessions", json::object(), 201);
    const std::string id = s["id"];
    CHECK(s["k"] == 0);
    CHECK(s["mode"] == "liberal");
    CHECK(s["elements"].empty());
    const json s2 = post(c, "/sessions", {{"k", 2}, {"mode", "strict"}}, 201);
    CHECK(s2["id"] != id);
    CHECK(s2["k"] == 2);
    CHECK(s2["mode"] == "strict");

    const std::string base = "/sessions/" + id;
    CHECK(post(c, base + "/query", {{"formula", "p"}}, 200)["answer"] == "no_information");
    CHECK(post(c, base + "/revise", {{"formula", "p"}}, 200)["new_index"] == 0);
    const json r = post(c, base + "/revise", {{"formula", "~p"}}, 200);
    CHECK(r["new_index"] == 1);
    CHECK(formulas_of(r["elements"]) == std::vector<std::string>{"p", "~p"});

    auto exported = c.Get(base + "/export");
    REQUIRE(exported);
    CHECK(exported->body == "p\n~p");

    CHECK(post(c, base + "/pop", json::object(), 200)["popped"] == true);
    CHECK(get(c, base, 200)["elements"].size() == 1);
    CHECK(post(c, base + "/reset", json::object(), 200)["elements"].empty());
    CHECK(get(c, "/sessions", 200)["sessions"].size() == 2);
}

TEST_CASE("http: worked examples") {
    LiveServer live;
    auto c = live.client();
    const std::string id = post(c, "/sessions", {{"sequence", "p\n~p & ~q\np | q"}}, 201)["id"];
    const json q = post(c, "/sessions/" + id + "/query", {{"formula", "p"}, {"k", 0}}, 200);
    CHECK(q["answer"] == "yes");
    CHECK(q["k_used"] == 0);
    CHECK(q["mode"] == "liberal");
    CHECK(q["query"] == "p");
    CHECK(q["query_language"] == json::array({"p"}));
    CHECK(formulas_of(q["gamma"]) == std::vector<std::string>{"p | q", "p"});
    REQUIRE(q["trace"].size() == 3);
    CHECK(q["trace"][1]["decision"] == "rejected_inconsistent");

    const json strict = post(c, "/sessions/" + id + "/query", {{"formula", "p"}, {"mode", "strict"}}, 200);
    CHECK(formulas_of(strict["gamma"]) == std::vector<std::string>{"p | q"});
    CHECK(strict["trace"][1]["decision"] == "halted");

    const std::string other = post(c, "/sessions", {{"sequence", "p & q\nr & ~q"}}, 201)["id"];
    CHECK(post(c, "/sessions/" + other + "/query", {{"formula", "r"}}, 200)["answer"] == "yes");
    const json rel = get(c, "/sessions/" + other + "/relevance?formula=p", 200);
    CHECK(rel["profile"][1]["rel"] == 1);
    const json wide = post(c, "/sessions/" + other + "/query",
                           {{"formula", "p"}, {"query_language", {"p", "r"}}}, 200);
    CHECK(wide["query_language"] == json::array({"p", "r"}));
}

TEST_CASE("http: errors") {
    LiveServer live;
    auto c = live.client();
    const std::string id = post(c, "/sessions", json::object(), 201)["id"];
    const json err = post(c, "/sessions/" + id + "/revise", {{"formula", "p &"}}, 400);
    CHECK(err["error"] == "parse_error");
    CHECK(err["position"] == 3);
    CHECK(post(c, "/sessions/nope/revise", {{"formula", "p"}}, 404)["error"] == "not_found");
    get(c, "/sessions/nope", 404);
    post(c, "/sessions/" + id + "/query", {{"formula", "p"}, {"mode", "lenient"}}, 400);
    post(c, "/sessions/" + id + "/query", {{"formula", "p"}, {"k", -1}}, 400);
    post(c, "/sessions/" + id + "/query", {{"formula", "p & q"}, {"query_language", {"p"}}}, 400);
    const json bad_file = post(c, "/sessions", {{"sequence", "p\nq |"}}, 400);
    CHECK(bad_file["line"] == 2);
    get(c, "/sessions/" + id + "/relevance", 400);
    auto res = c.Post("/sessions/" + id + "/revise", "not json", "application/json");
    REQUIRE(res);
    CHECK(res->status == 400);
}
