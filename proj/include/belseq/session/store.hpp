// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "belseq/inference.hpp"

namespace belseq::session {

struct Defaults {
    std::size_t k = 0;
    Mode mode = Mode::liberal;
};

struct Session {
    std::string id;
    BeliefSequence sequence;
    Defaults defaults;
    std::int64_t created_ms = 0;
    std::int64_t updated_ms = 0;
};

class SessionNotFound : public std::runtime_error {
public:
    explicit SessionNotFound(const std::string& id) : std::runtime_error("no session " + id), id_(id) {}
    const std::string& id() const { return id_; }

private:
    std::string id_;
};

class StorageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sessions in memory, optionally backed by one append-only log per session
/// in `dir` (<id>.log). Logs found in `dir` are replayed on construction.
///
/// Log lines:
///   create <k> <mode> <ms>
///   revise <ms> <formula>
///   pop <ms>
///   reset <ms>
class SessionStore {
public:
    explicit SessionStore(std::optional<std::filesystem::path> dir = std::nullopt);

    Session create(const Defaults& defaults, const BeliefSequence& initial = {});
    Session get(const std::string& id) const;
    std::vector<std::string> ids() const;

    /// Returns the index of the new element.
    std::size_t revise(const std::string& id, const Formula& f);
    /// Drops the newest element; false when the sequence was empty.
    bool pop(const std::string& id);
    void reset(const std::string& id);

    QueryResult query(const std::string& id, const QueryContext& ctx) const;
    std::string export_text(const std::string& id) const;

private:
    Session& find(const std::string& id);
    const Session& find(const std::string& id) const;
    void append(const std::string& id, const std::string& line);
    void replay(const std::filesystem::path& log);
    std::string fresh_id();

    std::optional<std::filesystem::path> dir_;
    std::map<std::string, Session> sessions_;
    mutable std::shared_mutex mutex_;
};

}  // namespace belseq::session
