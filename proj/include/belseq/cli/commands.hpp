// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

// Subcommands of the belseq tool. Each returns the process exit code.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "belseq/claims/reports.hpp"
#include "belseq/cli/repl.hpp"

namespace belseq::cli {

/// 0 on success, 2 when the script cannot be read or a command fails.
int run_command(const std::string& script_path, const ReplOptions& options, std::ostream& out, std::ostream& err);

/// 0 when every claim matches its expected status, 1 otherwise.
int check_claims_command(const claims::ClaimsOptions& options, bool json, std::ostream& out);

struct EquivOptions {
    bool strong = false;
    std::size_t depth = 1;
    std::size_t vars = 4;
    bool json = false;
};

/// 0 equivalent, 1 not equivalent, 2 on unreadable input or a cap error.
int equiv_command(const std::string& file_a, const std::string& file_b, const EquivOptions& options,
                  std::ostream& out, std::ostream& err);

/// Blocks while serving. 2 when the store cannot be opened or the port bound.
int serve_command(const std::string& host, int port, const std::optional<std::string>& store_dir, std::ostream& out,
                  std::ostream& err);

}  // namespace belseq::cli
