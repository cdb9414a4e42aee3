// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

// belseq: relevance-sensitive inference over belief sequences.

#include <iostream>
#include <map>

#include <unistd.h>

#include <CLI11.hpp>

#include "belseq/cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace belseq;

    CLI::App app{"Relevance-sensitive inference over belief sequences"};
    app.require_subcommand(0, 1);

    std::size_t k = 0;
    std::string mode_text = "liberal";
    bool json = false;
    app.add_option("--k", k, "Default relevance level")->capture_default_str();
    app.add_option("--mode", mode_text, "Inference mode")
        ->check(CLI::IsMember({"liberal", "strict"}))
        ->capture_default_str();
    app.add_flag("--json", json, "Machine-readable output");

    auto* repl_cmd = app.add_subcommand("repl", "Interactive session (the default)");
    repl_cmd->fallthrough();

    std::string script;
    auto* run_cmd = app.add_subcommand("run", "Execute a script of REPL commands");
    run_cmd->add_option("script", script, "Script file")->required();
    run_cmd->fallthrough();

    claims::ClaimsOptions claim_opts;
    std::string mutant = "none";
    auto* claims_cmd = app.add_subcommand("check-claims", "Run the conformance report");
    claims_cmd->add_option("--samples", claim_opts.samples, "Random instances per claim")->capture_default_str();
    claims_cmd->add_option("--seed", claim_opts.seed, "Random seed")->capture_default_str();
    claims_cmd->add_option("--vars", claim_opts.vars, "Atoms in random sequences")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    claims_cmd->add_option("--mutant", mutant, "Run against a deliberately broken engine")
        ->check(CLI::IsMember({"none", "oldest_first", "accept_all"}))
        ->group("");
    claims_cmd->fallthrough();

    std::string file_a, file_b;
    cli::EquivOptions equiv_opts;
    auto* equiv_cmd = app.add_subcommand("equiv", "Compare two sequence files");
    equiv_cmd->add_option("a", file_a, "First sequence file")->required();
    equiv_cmd->add_option("b", file_b, "Second sequence file")->required();
    equiv_cmd->add_flag("--strong", equiv_opts.strong, "Also compare after revisions");
    equiv_cmd->add_option("--depth", equiv_opts.depth, "Revision depth for --strong")->capture_default_str();
    equiv_cmd->add_option("--vars", equiv_opts.vars, "Enumeration cap on atoms")->capture_default_str();
    equiv_cmd->fallthrough();

    int port = 8080;
    std::string host = "127.0.0.1";
    std::string store_dir;
    auto* serve_cmd = app.add_subcommand("serve", "Host the session HTTP API");
    serve_cmd->add_option("--port", port, "TCP port, 0 for any")->capture_default_str();
    serve_cmd->add_option("--host", host, "Bind address")->capture_default_str();
    serve_cmd->add_option("--store", store_dir, "Directory for session logs");
    serve_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const cli::ReplOptions repl_opts{k, *parse_mode(mode_text), json};

    if (*run_cmd) return cli::run_command(script, repl_opts, std::cout, std::cerr);
    if (*claims_cmd) {
        static const std::map<std::string, testing::Mutant> mutants{
            {"none", testing::Mutant::none},
            {"oldest_first", testing::Mutant::oldest_first},
            {"accept_all", testing::Mutant::accept_all}};
        testing::set_mutant(mutants.at(mutant));
        return cli::check_claims_command(claim_opts, json, std::cout);
    }
    if (*equiv_cmd) {
        equiv_opts.json = json;
        return cli::equiv_command(file_a, file_b, equiv_opts, std::cout, std::cerr);
    }
    if (*serve_cmd)
        return cli::serve_command(host, port, store_dir.empty() ? std::nullopt : std::optional(store_dir), std::cout,
                                  std::cerr);

    cli::Repl repl(repl_opts);
    return cli::run_interactive(repl, std::cin, std::cout, std::cerr, ::isatty(STDIN_FILENO) != 0);
}
