// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/session/server.hpp"

#include <httplib.h>

#include "belseq/session/wire.hpp"

namespace belseq::session {

namespace {

using wire::json;

struct BadRequest : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void send(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

json body_of(const httplib::Request& req) {
    if (req.body.empty()) return json::object();
    json j = json::parse(req.body, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw BadRequest("request body must be a JSON object");
    return j;
}

Formula formula_field(const json& body, const char* name = "formula") {
    if (!body.contains(name) || !body[name].is_string()) throw BadRequest(std::string("missing string field \"") + name + "\"");
    return parse(body[name].get<std::string>());
}

std::size_t k_field(const json& body, std::size_t fallback) {
    if (!body.contains("k")) return fallback;
    if (!body["k"].is_number_integer() || body["k"].get<long long>() < 0)
        throw BadRequest("k must be a non-negative integer");
    return body["k"].get<std::size_t>();
}

Mode mode_field(const json& body, Mode fallback) {
    if (!body.contains("mode")) return fallback;
    const auto m = body["mode"].is_string() ? parse_mode(body["mode"].get<std::string>()) : std::nullopt;
    if (!m) throw BadRequest("mode must be \"liberal\" or \"strict\"");
    return *m;
}

json session_json(const Session& s) {
    json out = wire::sequence_json(s.sequence);
    out["id"] = s.id;
    out["k"] = s.defaults.k;
    out["mode"] = to_string(s.defaults.mode);
    out["created_ms"] = s.created_ms;
    out["updated_ms"] = s.updated_ms;
    return out;
}

// Maps library errors onto status codes.
template <class Fn>
httplib::Server::Handler guarded(Fn fn) {
    return [fn](const httplib::Request& req, httplib::Response& res) {
        try {
            fn(req, res);
        } catch (const SessionNotFound& e) {
            send(res, 404, wire::error_json("not_found", e.what()));
        } catch (const ParseError& e) {
            send(res, 400, wire::error_json("parse_error", e.what(), e.position()));
        } catch (const SequenceFormatError& e) {
            json err = wire::error_json("parse_error", e.what(), e.column());
            err["line"] = e.line();
            send(res, 400, err);
        } catch (const BadRequest& e) {
            send(res, 400, wire::error_json("bad_request", e.what()));
        } catch (const std::invalid_argument& e) {
            send(res, 400, wire::error_json("bad_request", e.what()));
        } catch (const StorageError& e) {
            send(res, 500, wire::error_json("storage", e.what()));
        }
    };
}

}  // namespace

struct Server::Impl {
    SessionStore& store;
    httplib::Server http;

    explicit Impl(SessionStore& s) : store(s) { routes(); }

    void routes() {
        // Plain SO_REUSEADDR: an occupied port must fail to bind.
        http.set_socket_options([](socket_t sock) {
            int yes = 1;
            setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
        });
        http.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
        http.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
            res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
            res.set_header("Access-Control-Allow-Headers", "Content-Type");
            res.status = 204;
        });

        http.Post("/sessions", guarded([this](const httplib::Request& req, httplib::Response& res) {
            const json body = body_of(req);
            Defaults d;
            d.k = k_field(body, 0);
            d.mode = mode_field(body, Mode::liberal);
            BeliefSequence initial;
            if (body.contains("sequence")) {
                if (!body["sequence"].is_string()) throw BadRequest("sequence must be text in the sequence file format");
                initial = parse_sequence_text(body["sequence"].get<std::string>());
            }
            send(res, 201, session_json(store.create(d, initial)));
        }));
        http.Get("/sessions", guarded([this](const httplib::Request&, httplib::Response& res) {
            send(res, 200, json{{"sessions", store.ids()}});
        }));
        http.Get(R"(/sessions/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
            send(res, 200, session_json(store.get(req.matches[1])));
        }));
        http.Post(R"(/sessions/([^/]+)/revise)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            const std::string id = req.matches[1];
            store.get(id);
            const Formula f = formula_field(body_of(req));
            const std::size_t index = store.revise(id, f);
            json out = session_json(store.get(id));
            out["new_index"] = index;
            send(res, 200, out);
        }));
        http.Post(R"(/sessions/([^/]+)/query)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            const std::string id = req.matches[1];
            const Session s = store.get(id);
            const json body = body_of(req);
            QueryContext ctx{formula_field(body), k_field(body, s.defaults.k), mode_field(body, s.defaults.mode),
                             std::nullopt};
            if (body.contains("query_language") && !body["query_language"].is_null())
                ctx.query_language = wire::parse_language(body["query_language"]);
            ctx.effective_language();
            send(res, 200, wire::query_json(ctx, evaluate_query(s.sequence, ctx)));
        }));
        http.Get(R"(/sessions/([^/]+)/relevance)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            const Session s = store.get(req.matches[1]);
            if (!req.has_param("formula")) throw BadRequest("missing query parameter \"formula\"");
            send(res, 200, wire::relevance_json(parse(req.get_param_value("formula")), s.sequence));
        }));
        http.Post(R"(/sessions/([^/]+)/pop)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            const std::string id = req.matches[1];
            const bool popped = store.pop(id);
            json out = session_json(store.get(id));
            out["popped"] = popped;
            send(res, 200, out);
        }));
        http.Post(R"(/sessions/([^/]+)/reset)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            const std::string id = req.matches[1];
            store.reset(id);
            send(res, 200, session_json(store.get(id)));
        }));
        http.Get(R"(/sessions/([^/]+)/export)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            res.status = 200;
            res.set_content(store.export_text(req.matches[1]), "text/plain");
        }));
    }
};

Server::Server(SessionStore& store) : impl_(std::make_unique<Impl>(store)) {}

Server::~Server() { stop(); }

bool Server::listen(const std::string& host, int port) { return impl_->http.listen(host, port); }

bool Server::bind(const std::string& host, int port) { return impl_->http.bind_to_port(host, port); }

int Server::bind_any(const std::string& host) { return impl_->http.bind_to_any_port(host); }

bool Server::serve() { return impl_->http.listen_after_bind(); }

void Server::stop() {
    if (impl_) impl_->http.stop();
}

void Server::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace belseq::session
