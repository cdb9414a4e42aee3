// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "belseq/cli/commands.hpp"
#include "belseq/session/store.hpp"
#include "belseq/session/wire.hpp"
#include "doctest.h"

using namespace belseq;
using namespace belseq::cli;
using nlohmann::json;

namespace {

struct Scratch {
    std::filesystem::path dir;
    explicit Scratch(const std::string& name)
        : dir(std::filesystem::temp_directory_path() / ("belseq_cli_" + name + "_" + std::to_string(::getpid()))) {
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
    }
    ~Scratch() { std::filesystem::remove_all(dir); }
    std::string write(const std::string& name, const std::string& text) const {
        const auto path = dir / name;
        std::ofstream(path) << text;
        return path.string();
    }
};

std::string run_lines(Repl& repl, std::initializer_list<const char*> lines, std::string* errors = nullptr) {
    std::ostringstream out, err;
    for (const char* l : lines) repl.execute(l, out, err);
    if (errors) *errors = err.str();
    return out.str();
}

}  // namespace

TEST_CASE("repl: worked examples") {
    Repl repl;
    CHECK(run_lines(repl, {"revise p", "revise ~p&~q", "revise p|q", "query p"}) ==
          "[0] p\n[1] ~p & ~q\n[2] p | q\nyes\n");
    const std::string trace = run_lines(repl, {"gamma p 0"});
    CHECK(trace.find("rejected_inconsistent  ~p & ~q") != std::string::npos);
    CHECK(trace.find("answer: yes") != std::string::npos);

    Scratch s("repl");
    const auto file = s.write("pq.txt", "# one belief\np & q\n");
    Repl other;
    CHECK(run_lines(other, {("load " + file).c_str(), "revise ~p|~q", "query p", "query ~p"}).ends_with(
        "no information\nno information\n"));
}

TEST_CASE("repl: errors keep the state") {
    Repl repl;
    std::string errors;
    run_lines(repl, {"revise p", "query p &"}, &errors);
    CHECK(errors.find("syntax error at offset 3") != std::string::npos);
    CHECK(repl.sequence().size() == 1);
    run_lines(repl, {"revise q |", "set k x", "set mode lenient", "frobnicate", "load /no/such/file"}, &errors);
    CHECK(repl.sequence().size() == 1);
    CHECK(repl.k() == 0);
    CHECK(repl.mode() == Mode::liberal);
    CHECK(errors.find("unknown command") != std::string::npos);
}

TEST_CASE("repl: settings, save and load") {
    Scratch s("save");
    const auto file = (s.dir / "seq.txt").string();
    Repl repl;
    run_lines(repl, {"set k 2", "set mode strict", "revise p & q", "revise r & ~q", ("save " + file).c_str()});
    CHECK(repl.k() == 2);
    CHECK(repl.mode() == Mode::strict);
    std::ifstream in(file);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == "p & q\nr & ~q\n");
    CHECK(run_lines(repl, {"rel p"}) == "    0  0         p & q\n    1  1         r & ~q\n");
    CHECK(run_lines(repl, {"lang p & (q | ~q)"}) == "{p}\n");
    run_lines(repl, {"pop", "reset", ("load " + file).c_str()});
    CHECK(repl.sequence().size() == 2);
    CHECK(run_lines(repl, {"query r 0"}) == "yes\n");
    CHECK(run_lines(repl, {"query q 0"}) == "no\n");
    CHECK(run_lines(repl, {"query p 1"}) == "yes\n");
    CHECK(run_lines(repl, {"query s"}) == "no information\n");
    CHECK(repl.execute("quit", std::cout, std::cerr) == Repl::Status::quit);
}

TEST_CASE("run: scripts and json output") {
    Scratch s("run");
    const auto script = s.write("ex.txt", "revise p\nrevise ~p&~q\nrevise p|q\nquery p\n");
    std::ostringstream out, err;
    CHECK(run_command(script, {0, Mode::liberal, true}, out, err) == 0);
    const json j = json::parse(out.str());
    CHECK(j["answer"] == "yes");
    CHECK(j["gamma"][0]["formula"] == "p | q");
    CHECK(j["gamma"][1]["formula"] == "p");
    CHECK(j["trace"].size() == 3);

    std::ostringstream none, none_err;
    CHECK(run_command(s.write("empty.txt", ""), {}, none, none_err) == 0);
    CHECK(none.str().empty());

    std::ostringstream bad, bad_err;
    CHECK(run_command(s.write("bad.txt", "revise p\nrevise q |\nquery p\n"), {}, bad, bad_err) == 2);
    CHECK(bad_err.str().starts_with("line 2: error:"));
    CHECK(bad.str() == "[0] p\n");
    std::ostringstream missing, missing_err;
    CHECK(run_command((s.dir / "absent.txt").string(), {}, missing, missing_err) == 2);
}

TEST_CASE("repl, script runner and api agree") {
    const std::vector<std::string> formulas{"p", "~p & ~q", "q", "p -> r", "~r | s"};
    const std::vector<std::string> queries{"p", "~p", "q", "p & q", "r", "s", "p | s"};
    session::SessionStore store;
    const auto id = store.create({}).id;
    Repl repl({0, Mode::liberal, true});
    std::ostringstream sink, err;
    std::string script;
    for (const auto& f : formulas) {
        store.revise(id, parse(f));
        repl.execute("revise " + f, sink, err);
        script += "revise " + f + "\n";
    }
    Scratch s("agree");
    for (const auto& q : queries)
        for (std::size_t k = 0; k <= 2; ++k) {
            const QueryContext ctx{parse(q), k, Mode::liberal, std::nullopt};
            const std::string api = wire::query_json(ctx, store.query(id, ctx)).dump();
            std::ostringstream out;
            repl.execute("query " + q + " " + std::to_string(k), out, err);
            CHECK(json::parse(out.str()).dump() == api);
            std::ostringstream ran;
            run_command(s.write("q.txt", script + "query " + q + " " + std::to_string(k) + "\n"), {0, Mode::liberal, true},
                        ran, err);
            CHECK(json::parse(ran.str()).dump() == api);
            CHECK(json::parse(api)["answer"] == to_string(answer_query(store.get(id).sequence, ctx)));
        }
    CHECK(err.str().empty());
}

TEST_CASE("equiv command") {
    Scratch s("equiv");
    const auto a = s.write("a.txt", "~p & ~q\n");
    const auto b = s.write("b.txt", "p\n~p & ~q\n");
    std::ostringstream out, err;
    CHECK(equiv_command(a, b, {}, out, err) == 0);
    CHECK(out.str() == "equivalent\n");

    std::ostringstream strong;
    CHECK(equiv_command(a, b, {true, 1, 4, false}, strong, err) == 1);
    CHECK(strong.str().find("not strongly equivalent") == 0);
    CHECK(strong.str().find("witness: revise p | q, query p") != std::string::npos);

    std::ostringstream plain;
    CHECK(equiv_command(s.write("p.txt", "p\n"), s.write("q.txt", "q\n"), {}, plain, err) == 1);
    CHECK(plain.str().find("not equivalent; witness: query p") == 0);

    std::ostringstream js;
    CHECK(equiv_command(a, b, {true, 1, 4, true}, js, err) == 1);
    CHECK(json::parse(js.str())["witness"]["revisions"][0] == "p | q");

    std::ostringstream bad, bad_err;
    CHECK(equiv_command(a, s.write("bad.txt", "p &\n"), {}, bad, bad_err) == 2);
    CHECK(bad_err.str().find("error") == 0);
}

TEST_CASE("check-claims exit codes") {
    std::ostringstream out;
    CHECK(check_claims_command({0, 7, 4}, false, out) == 0);
    std::ostringstream js;
    CHECK(check_claims_command({20, 7, 3}, true, js) == 0);
    CHECK(json::parse(js.str())["conforms"] == true);

    testing::set_mutant(testing::Mutant::oldest_first);
    std::ostringstream broken;
    const int code = check_claims_command({20, 7, 3}, false, broken);
    testing::set_mutant(testing::Mutant::none);
    CHECK(code == 1);
}

TEST_CASE("serve fails on an occupied port") {
    httplib::Server blocker;
    const int port = blocker.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread t([&] { blocker.listen_after_bind(); });
    blocker.wait_until_ready();
    std::ostringstream out, err;
    CHECK(serve_command("127.0.0.1", port, std::nullopt, out, err) == 2);
    CHECK(err.str().find("cannot bind") != std::string::npos);
    blocker.stop();
    t.join();
}

TEST_CASE("serve fails on an unusable store") {
    Scratch s("store");
    const auto file = s.write("not_a_dir", "x");
    std::ostringstream out, err;
    CHECK(serve_command("127.0.0.1", 0, file + "/sub", out, err) == 2);
}
