// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/cli/commands.hpp"

#include <fstream>
#include <iostream>

#include "belseq/equivalence.hpp"
#include "belseq/session/server.hpp"
#include "belseq/session/wire.hpp"

namespace belseq::cli {

int run_command(const std::string& script_path, const ReplOptions& options, std::ostream& out, std::ostream& err) {
    std::ifstream in(script_path);
    if (!in) {
        err << "error: cannot read " << script_path << "\n";
        return 2;
    }
    Repl repl(options);
    return run_script(repl, in, out, err);
}

int check_claims_command(const claims::ClaimsOptions& options, bool json, std::ostream& out) {
    const auto run = claims::run_all_claims(options);
    if (json) {
        out << "{\"conforms\":" << (run.conforms() ? "true" : "false") << ",\"rows\":" << claims::to_json(run.rows)
            << "}\n";
    } else {
        out << claims::format_table(run.rows);
        std::size_t mismatches = 0;
        for (const auto& r : run.rows) mismatches += r.conforms() ? 0 : 1;
        out << "\n" << run.rows.size() << " claims, " << mismatches << " not matching the expected status\n";
    }
    return run.conforms() ? 0 : 1;
}

int equiv_command(const std::string& file_a, const std::string& file_b, const EquivOptions& options,
                  std::ostream& out, std::ostream& err) {
    try {
        const BeliefSequence a = load_sequence_file(file_a);
        const BeliefSequence b = load_sequence_file(file_b);
        const EquivalenceVerdict v = options.strong
                                         ? strongly_equivalent_bounded(a, b, options.depth, options.vars)
                                         : equivalent_sequences(a, b, options.vars);
        if (options.json) {
            wire::json j{{"equivalent", v.result},
                         {"strong", options.strong},
                         {"depth", v.depth},
                         {"description", describe(v, options.strong)}};
            if (v.witness) {
                wire::json revisions = wire::json::array();
                for (const auto& f : v.witness->revisions) revisions.push_back(render(f));
                j["witness"] = {{"revisions", revisions},
                                {"query", render(v.witness->query)},
                                {"k", v.witness->k},
                                {"answer_a", to_string(v.witness->answer_a)},
                                {"answer_b", to_string(v.witness->answer_b)}};
            }
            out << j.dump() << "\n";
        } else {
            out << describe(v, options.strong) << "\n";
        }
        return v.result ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int serve_command(const std::string& host, int port, const std::optional<std::string>& store_dir, std::ostream& out,
                  std::ostream& err) {
    std::unique_ptr<session::SessionStore> store;
    try {
        store = std::make_unique<session::SessionStore>(
            store_dir ? std::optional<std::filesystem::path>(*store_dir) : std::nullopt);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    session::Server server(*store);
    const int bound = port == 0 ? server.bind_any(host) : (server.bind(host, port) ? port : -1);
    if (bound < 0) {
        err << "error: cannot bind " << host << ":" << port << "\n";
        return 2;
    }
    out << "listening on http://" << host << ":" << bound << std::endl;
    return server.serve() ? 0 : 2;
}

}  // namespace belseq::cli
