// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>

#include "belseq/session/store.hpp"

namespace belseq::session {

/// HTTP front end over a SessionStore.
///
///   POST /sessions                      {"k"?, "mode"?, "sequence"? (text format)}
///   GET  /sessions
///   GET  /sessions/{id}
///   POST /sessions/{id}/revise          {"formula"}
///   POST /sessions/{id}/query           {"formula", "k"?, "mode"?, "query_language"?}
///   GET  /sessions/{id}/relevance?formula=...
///   POST /sessions/{id}/pop
///   POST /sessions/{id}/reset
///   GET  /sessions/{id}/export          text/plain
class Server {
public:
    explicit Server(SessionStore& store);
    ~Server();
    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    /// Blocks until stop(). False when the address cannot be bound.
    bool listen(const std::string& host, int port);
    /// False when the address cannot be bound.
    bool bind(const std::string& host, int port);
    /// Binds an ephemeral port; returns it, or -1.
    int bind_any(const std::string& host);
    /// Serves on a port taken by bind or bind_any. Blocks until stop().
    bool serve();
    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace belseq::session
