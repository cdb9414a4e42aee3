// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/cli/repl.hpp"

#include <charconv>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "belseq/session/wire.hpp"

namespace belseq::cli {

namespace {

struct CommandError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<std::size_t> to_size(std::string_view s) {
    std::size_t v = 0;
    if (s.empty()) return std::nullopt;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

Formula formula_arg(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw CommandError("expected a formula");
    return parse(text);
}

// "F [k]": a trailing all-digit word is the level, since atom names never are.
std::pair<Formula, std::optional<std::size_t>> formula_and_level(std::string_view rest) {
    rest = trim(rest);
    const auto space = rest.find_last_of(" \t");
    if (space != std::string_view::npos)
        if (auto k = to_size(rest.substr(space + 1))) return {formula_arg(rest.substr(0, space)), k};
    return {formula_arg(rest), std::nullopt};
}

std::string_view answer_text(Answer a) { return a == Answer::no_information ? "no information" : to_string(a); }

void print_trace(std::ostream& out, const QueryContext& ctx, const QueryResult& r) {
    out << "answer: " << answer_text(r.answer) << "  (k=" << ctx.k << ", mode=" << to_string(ctx.mode)
        << ", language " << ctx.effective_language().to_string() << ")\n";
    out << "  rel       index  decision               formula\n";
    for (const auto& e : r.gamma.trace)
        out << "  " << std::left << std::setw(8) << e.rel.to_string() << "  " << std::right << std::setw(5) << e.index
            << "  " << std::left << std::setw(21) << to_string(e.decision) << "  " << render(e.formula) << "\n"
            << std::right;
}

}  // namespace

Repl::Repl(ReplOptions options) : options_(options) {}

std::string help_text() {
    return "commands:\n"
           "  revise F        append F to the sequence\n"
           "  query F [k]     answer yes / no / no information\n"
           "  gamma F [k]     show how the answer set is built\n"
           "  rel F           relevance of each element to F\n"
           "  lang F          smallest language of F\n"
           "  show            print the sequence and defaults\n"
           "  set k N         default relevance level\n"
           "  set mode M      liberal or strict\n"
           "  save [FILE]     write the sequence file\n"
           "  load FILE       replace the sequence from a file\n"
           "  pop             drop the newest element\n"
           "  reset           clear the sequence\n"
           "  help, quit\n";
}

Repl::Status Repl::execute(std::string_view line, std::ostream& out, std::ostream& err) {
    line = trim(line);
    if (line.empty() || line.front() == '#') return Status::ok;
    const auto space = line.find_first_of(" \t");
    const std::string_view command = line.substr(0, space);
    const std::string_view rest = space == std::string_view::npos ? std::string_view{} : line.substr(space + 1);
    try {
        return dispatch(command, rest, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const SequenceFormatError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return Status::error;
}

Repl::Status Repl::dispatch(std::string_view command, std::string_view rest, std::ostream& out) {
    const bool json = options_.json;
    if (command == "quit" || command == "exit") return Status::quit;
    if (command == "help") {
        out << help_text();
    } else if (command == "revise") {
        const Formula f = formula_arg(rest);
        sequence_ = sequence_.revised(f);
        if (!json) out << "[" << sequence_.size() - 1 << "] " << render(f) << "\n";
    } else if (command == "query" || command == "gamma") {
        auto [f, k] = formula_and_level(rest);
        const QueryContext ctx{f, k.value_or(options_.k), options_.mode, std::nullopt};
        const QueryResult r = evaluate_query(sequence_, ctx);
        if (json)
            out << wire::query_json(ctx, r).dump() << "\n";
        else if (command == "query")
            out << answer_text(r.answer) << "\n";
        else
            print_trace(out, ctx, r);
    } else if (command == "rel") {
        const Formula f = formula_arg(rest);
        if (json) {
            out << wire::relevance_json(f, sequence_).dump() << "\n";
        } else {
            for (const auto& [index, level] : relevance_profile(f, sequence_))
                out << std::setw(5) << index << "  " << std::left << std::setw(8) << level.to_string() << std::right
                    << "  " << render(sequence_[index].formula) << "\n";
        }
    } else if (command == "lang") {
        const Formula f = formula_arg(rest);
        const Language l = smallest_language(f);
        if (json)
            out << wire::json{{"formula", render(f)}, {"language", wire::language_json(l)}}.dump() << "\n";
        else
            out << l.to_string() << "\n";
    } else if (command == "show") {
        if (json) {
            auto j = wire::sequence_json(sequence_);
            j["k"] = options_.k;
            j["mode"] = to_string(options_.mode);
            out << j.dump() << "\n";
        } else {
            out << "k=" << options_.k << " mode=" << to_string(options_.mode) << "\n";
            if (sequence_.empty()) out << "(empty)\n";
            for (const auto& e : sequence_.elements())
                out << std::setw(5) << e.index << "  " << render(e.formula) << "\n";
        }
    } else if (command == "set") {
        const std::string_view r = trim(rest);
        const auto space = r.find_first_of(" \t");
        const std::string_view key = r.substr(0, space);
        const std::string_view value = space == std::string_view::npos ? std::string_view{} : trim(r.substr(space));
        if (key == "k") {
            const auto k = to_size(value);
            if (!k) throw CommandError("set k expects a non-negative integer");
            options_.k = *k;
        } else if (key == "mode") {
            const auto m = parse_mode(value);
            if (!m) throw CommandError("set mode expects liberal or strict");
            options_.mode = *m;
        } else {
            throw CommandError("set expects k or mode");
        }
    } else if (command == "save") {
        const std::string_view target = trim(rest);
        if (target.empty() && !path_) throw CommandError("save expects a file name");
        const std::string file = target.empty() ? *path_ : std::string(target);
        save_sequence_file(sequence_, file);
        path_ = file;
        if (!json) out << "saved " << sequence_.size() << " formulas to " << file << "\n";
    } else if (command == "load") {
        const std::string file(trim(rest));
        if (file.empty()) throw CommandError("load expects a file name");
        sequence_ = load_sequence_file(file);
        path_ = file;
        if (!json) out << "loaded " << sequence_.size() << " formulas from " << file << "\n";
    } else if (command == "pop") {
        if (sequence_.empty()) throw CommandError("the sequence is empty");
        sequence_ = sequence_.without_last();
    } else if (command == "reset") {
        sequence_ = BeliefSequence();
    } else {
        throw CommandError("unknown command '" + std::string(command) + "' (try help)");
    }
    return Status::ok;
}

int run_interactive(Repl& repl, std::istream& in, std::ostream& out, std::ostream& err, bool prompt) {
    std::string line;
    while (true) {
        if (prompt) out << "belseq> " << std::flush;
        if (!std::getline(in, line)) break;
        if (repl.execute(line, out, err) == Repl::Status::quit) break;
    }
    return 0;
}

int run_script(Repl& repl, std::istream& in, std::ostream& out, std::ostream& err) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::ostringstream errors;
        const auto status = repl.execute(line, out, errors);
        if (status == Repl::Status::quit) break;
        if (status == Repl::Status::error) {
            err << "line " << lineno << ": " << errors.str();
            return 2;
        }
    }
    return 0;
}

}  // namespace belseq::cli
