// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "belseq/inference.hpp"

namespace belseq::cli {

struct ReplOptions {
    std::size_t k = 0;
    Mode mode = Mode::liberal;
    /// Queries print the session_api response object instead of text.
    bool json = false;
};

/// Command interpreter shared by the interactive REPL and script runner.
class Repl {
public:
    enum class Status { ok, error, quit };

    explicit Repl(ReplOptions options = {});

    /// Runs one command line. Errors go to `err` and leave the state as it was.
    Status execute(std::string_view line, std::ostream& out, std::ostream& err);

    const BeliefSequence& sequence() const { return sequence_; }
    std::size_t k() const { return options_.k; }
    Mode mode() const { return options_.mode; }
    const std::optional<std::string>& path() const { return path_; }

private:
    Status dispatch(std::string_view command, std::string_view rest, std::ostream& out);

    ReplOptions options_;
    BeliefSequence sequence_;
    std::optional<std::string> path_;
};

/// Interactive loop. Returns the process exit code.
int run_interactive(Repl& repl, std::istream& in, std::ostream& out, std::ostream& err, bool prompt = true);

/// Runs every line of a script and stops at the first failing command.
/// Returns 0, or 2 after an error.
int run_script(Repl& repl, std::istream& in, std::ostream& out, std::ostream& err);

std::string help_text();

}  // namespace belseq::cli
