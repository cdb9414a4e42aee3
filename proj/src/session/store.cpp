// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/session/store.hpp"

#include <chrono>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

namespace belseq::session {

namespace {

std::int64_t now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

bool valid_id(const std::string& id) {
    if (id.empty() || id.size() > 64) return false;
    for (char c : id)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') return false;
    return true;
}

}  // namespace

SessionStore::SessionStore(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {
    if (!dir_) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    if (ec) throw StorageError("cannot create store directory " + dir_->string() + ": " + ec.message());
    for (const auto& entry : std::filesystem::directory_iterator(*dir_))
        if (entry.is_regular_file() && entry.path().extension() == ".log") replay(entry.path());
}

void SessionStore::replay(const std::filesystem::path& log) {
    std::ifstream in(log);
    if (!in) throw StorageError("cannot read " + log.string());
    Session s;
    s.id = log.stem().string();
    if (!valid_id(s.id)) throw StorageError(log.string() + ": not a session log name");
    std::string line;
    std::size_t lineno = 0;
    bool created = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream words(line);
        std::string op;
        words >> op;
        const auto bad = [&] { return StorageError(log.string() + ":" + std::to_string(lineno) + ": bad log line"); };
        if (op == "create") {
            std::string mode;
            words >> s.defaults.k >> mode >> s.created_ms;
            const auto m = parse_mode(mode);
            if (!words || !m) throw bad();
            s.defaults.mode = *m;
            s.updated_ms = s.created_ms;
            created = true;
            continue;
        }
        if (!created) throw bad();
        words >> s.updated_ms;
        if (!words) throw bad();
        if (op == "revise") {
            std::string text;
            std::getline(words >> std::ws, text);
            s.sequence = s.sequence.revised(parse(text));
        } else if (op == "pop") {
            if (!s.sequence.empty()) s.sequence = s.sequence.without_last();
        } else if (op == "reset") {
            s.sequence = BeliefSequence();
        } else {
            throw bad();
        }
    }
    if (!created) throw StorageError(log.string() + ": missing create record");
    sessions_[s.id] = std::move(s);
}

void SessionStore::append(const std::string& id, const std::string& line) {
    if (!dir_) return;
    std::ofstream out(*dir_ / (id + ".log"), std::ios::app);
    out << line << '\n';
    out.flush();
    if (!out) throw StorageError("cannot append to the log of session " + id);
}

std::string SessionStore::fresh_id() {
    static thread_local std::mt19937_64 engine{std::random_device{}()};
    while (true) {
        std::ostringstream out;
        out << std::hex << (engine() & 0xffffffffffffull);
        std::string id = "s" + out.str();
        if (!sessions_.count(id) && !(dir_ && std::filesystem::exists(*dir_ / (id + ".log")))) return id;
    }
}

Session& SessionStore::find(const std::string& id) {
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw SessionNotFound(id);
    return it->second;
}

const Session& SessionStore::find(const std::string& id) const {
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw SessionNotFound(id);
    return it->second;
}

Session SessionStore::create(const Defaults& defaults, const BeliefSequence& initial) {
    std::unique_lock lock(mutex_);
    Session s;
    s.id = fresh_id();
    s.defaults = defaults;
    s.created_ms = s.updated_ms = now_ms();
    append(s.id, "create " + std::to_string(defaults.k) + " " + std::string(to_string(defaults.mode)) + " " +
                     std::to_string(s.created_ms));
    for (const auto& e : initial.elements()) {
        s.sequence = s.sequence.revised(e.formula);
        append(s.id, "revise " + std::to_string(s.updated_ms) + " " + render(e.formula));
    }
    return sessions_[s.id] = std::move(s);
}

Session SessionStore::get(const std::string& id) const {
    std::shared_lock lock(mutex_);
    return find(id);
}

std::vector<std::string> SessionStore::ids() const {
    std::shared_lock lock(mutex_);
    std::vector<std::string> out;
    for (const auto& [id, _] : sessions_) out.push_back(id);
    return out;
}

std::size_t SessionStore::revise(const std::string& id, const Formula& f) {
    std::unique_lock lock(mutex_);
    Session& s = find(id);
    const std::int64_t t = now_ms();
    append(id, "revise " + std::to_string(t) + " " + render(f));
    s.sequence = s.sequence.revised(f);
    s.updated_ms = t;
    return s.sequence.size() - 1;
}

bool SessionStore::pop(const std::string& id) {
    std::unique_lock lock(mutex_);
    Session& s = find(id);
    if (s.sequence.empty()) return false;
    const std::int64_t t = now_ms();
    append(id, "pop " + std::to_string(t));
    s.sequence = s.sequence.without_last();
    s.updated_ms = t;
    return true;
}

void SessionStore::reset(const std::string& id) {
    std::unique_lock lock(mutex_);
    Session& s = find(id);
    const std::int64_t t = now_ms();
    append(id, "reset " + std::to_string(t));
    s.sequence = BeliefSequence();
    s.updated_ms = t;
}

QueryResult SessionStore::query(const std::string& id, const QueryContext& ctx) const {
    BeliefSequence seq;
    {
        std::shared_lock lock(mutex_);
        seq = find(id).sequence;
    }
    return evaluate_query(seq, ctx);
}

std::string SessionStore::export_text(const std::string& id) const {
    std::shared_lock lock(mutex_);
    return to_sequence_text(find(id).sequence);
}

}  // namespace belseq::session
