// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "belseq/formula.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace belseq {

struct Formula::Node {
    Op op;
    std::string name;
    std::optional<Formula> lhs;
    std::optional<Formula> rhs;
    std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Language

Language::Language(std::initializer_list<std::string> atoms) : atoms_(atoms) {}

bool Language::intersects(const Language& other) const {
    auto a = atoms_.begin();
    auto b = other.atoms_.begin();
    while (a != atoms_.end() && b != other.atoms_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a;
        else ++b;
    }
    return false;
}

bool Language::subset_of(const Language& other) const {
    return std::includes(other.atoms_.begin(), other.atoms_.end(), atoms_.begin(), atoms_.end());
}

Language Language::united(const Language& other) const {
    Language out = *this;
    out.atoms_.insert(other.atoms_.begin(), other.atoms_.end());
    return out;
}

Language Language::intersected(const Language& other) const {
    Language out;
    std::set_intersection(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end(),
                          std::inserter(out.atoms_, out.atoms_.end()));
    return out;
}

std::string Language::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& a : atoms_) {
        if (!first) out += ", ";
        out += a;
        first = false;
    }
    return out + "}";
}

bool is_atom_name(std::string_view name) {
    if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
    for (char c : name)
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
    return name != "true" && name != "false";
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::constant(bool value) {
    static const Formula t{std::make_shared<const Node>(Node{Op::True, {}, std::nullopt, std::nullopt, 0x51ed27})};
    static const Formula f{std::make_shared<const Node>(Node{Op::False, {}, std::nullopt, std::nullopt, 0xfa15e})};
    return value ? t : f;
}

Formula Formula::atom(std::string name) {
    if (!is_atom_name(name)) throw std::invalid_argument("invalid atom name '" + name + "'");
    const std::size_t h = mix(static_cast<std::size_t>(Op::Atom), std::hash<std::string>{}(name));
    return Formula{std::make_shared<const Node>(Node{Op::Atom, std::move(name), std::nullopt, std::nullopt, h})};
}

Formula Formula::negation(Formula child) {
    const std::size_t h = mix(static_cast<std::size_t>(Op::Not), child.node_->hash);
    return Formula{std::make_shared<const Node>(Node{Op::Not, {}, std::move(child), std::nullopt, h})};
}

Formula Formula::binary(Op op, Formula lhs, Formula rhs) {
    if (op != Op::And && op != Op::Or && op != Op::Implies && op != Op::Iff)
        throw std::invalid_argument("not a binary connective");
    const std::size_t h = mix(mix(static_cast<std::size_t>(op), lhs.node_->hash), rhs.node_->hash);
    return Formula{std::make_shared<const Node>(Node{op, {}, std::move(lhs), std::move(rhs), h})};
}

Formula Formula::conjunction(Formula lhs, Formula rhs) { return binary(Op::And, std::move(lhs), std::move(rhs)); }
Formula Formula::disjunction(Formula lhs, Formula rhs) { return binary(Op::Or, std::move(lhs), std::move(rhs)); }
Formula Formula::implication(Formula lhs, Formula rhs) { return binary(Op::Implies, std::move(lhs), std::move(rhs)); }
Formula Formula::biconditional(Formula lhs, Formula rhs) { return binary(Op::Iff, std::move(lhs), std::move(rhs)); }

Op Formula::op() const { return node_->op; }

const std::string& Formula::atom_name() const {
    if (node_->op != Op::Atom) throw std::logic_error("formula is not an atom");
    return node_->name;
}

const Formula& Formula::lhs() const {
    if (!node_->lhs) throw std::logic_error("formula has no operand");
    return *node_->lhs;
}

const Formula& Formula::rhs() const {
    if (!node_->rhs) throw std::logic_error("formula has no right operand");
    return *node_->rhs;
}

std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    const Formula::Node& x = *a.node_;
    const Formula::Node& y = *b.node_;
    if (x.hash != y.hash || x.op != y.op || x.name != y.name) return false;
    return x.lhs == y.lhs && x.rhs == y.rhs;
}

// ---------------------------------------------------------------------------
// Valuation

bool Valuation::value(const std::string& atom) const {
    auto it = values_.find(atom);
    if (it == values_.end()) throw UnboundAtomError(atom);
    return it->second;
}

Language Valuation::language() const {
    Language out;
    for (const auto& [atom, _] : values_) out.insert(atom);
    return out;
}

bool evaluate(const Formula& f, const Valuation& v) {
    switch (f.op()) {
        case Op::True: return true;
        case Op::False: return false;
        case Op::Atom: return v.value(f.atom_name());
        case Op::Not: return !evaluate(f.lhs(), v);
        case Op::And: return evaluate(f.lhs(), v) && evaluate(f.rhs(), v);
        case Op::Or: return evaluate(f.lhs(), v) || evaluate(f.rhs(), v);
        case Op::Implies: return !evaluate(f.lhs(), v) || evaluate(f.rhs(), v);
        case Op::Iff: return evaluate(f.lhs(), v) == evaluate(f.rhs(), v);
    }
    return false;
}

namespace {

void collect_atoms(const Formula& f, Language& out) {
    switch (f.op()) {
        case Op::True:
        case Op::False: return;
        case Op::Atom: out.insert(f.atom_name()); return;
        case Op::Not: collect_atoms(f.lhs(), out); return;
        default:
            collect_atoms(f.lhs(), out);
            collect_atoms(f.rhs(), out);
    }
}

}  // namespace

Language syntactic_language(const Formula& f) {
    Language out;
    collect_atoms(f, out);
    return out;
}

Formula substitute(const Formula& f, const std::string& atom, bool value) {
    switch (f.op()) {
        case Op::True:
        case Op::False: return f;
        case Op::Atom: return f.atom_name() == atom ? Formula::constant(value) : f;
        case Op::Not: return Formula::negation(substitute(f.lhs(), atom, value));
        default: return Formula::binary(f.op(), substitute(f.lhs(), atom, value), substitute(f.rhs(), atom, value));
    }
}

std::size_t formula_size(const Formula& f) {
    switch (f.op()) {
        case Op::True:
        case Op::False:
        case Op::Atom: return 1;
        case Op::Not: return 1 + formula_size(f.lhs());
        default: return 1 + formula_size(f.lhs()) + formula_size(f.rhs());
    }
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("syntax error at offset " + std::to_string(position) + ": " + message),
      position_(position),
      detail_(message) {}

namespace {

enum class Tok { Ident, True, False, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string_view text;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\r' || src_[pos_] == '\n'))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Tok::End, start, {}};
        const char c = src_[pos_];
        if (c >= 'a' && c <= 'z') {
            while (pos_ < src_.size() && ((src_[pos_] >= 'a' && src_[pos_] <= 'z') ||
                                          (src_[pos_] >= '0' && src_[pos_] <= '9') || src_[pos_] == '_'))
                ++pos_;
            std::string_view word = src_.substr(start, pos_ - start);
            if (word == "true") return {Tok::True, start, word};
            if (word == "false") return {Tok::False, start, word};
            return {Tok::Ident, start, word};
        }
        switch (c) {
            case '~': ++pos_; return {Tok::Not, start, "~"};
            case '&': ++pos_; return {Tok::And, start, "&"};
            case '|': ++pos_; return {Tok::Or, start, "|"};
            case '(': ++pos_; return {Tok::LParen, start, "("};
            case ')': ++pos_; return {Tok::RParen, start, ")"};
            case '-':
                if (src_.substr(pos_, 2) == "->") {
                    pos_ += 2;
                    return {Tok::Implies, start, "->"};
                }
                break;
            case '<':
                if (src_.substr(pos_, 3) == "<->") {
                    pos_ += 3;
                    return {Tok::Iff, start, "<->"};
                }
                break;
            default: break;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    Formula parse_all() {
        Formula f = parse_iff();
        if (cur_.kind != Tok::End) throw ParseError("unexpected '" + std::string(cur_.text) + "'", cur_.pos);
        return f;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    Formula parse_iff() {
        Formula lhs = parse_implies();
        while (cur_.kind == Tok::Iff) {
            advance();
            lhs = Formula::biconditional(std::move(lhs), parse_implies());
        }
        return lhs;
    }

    Formula parse_implies() {
        Formula lhs = parse_or();
        if (cur_.kind != Tok::Implies) return lhs;
        advance();
        return Formula::implication(std::move(lhs), parse_implies());
    }

    Formula parse_or() {
        Formula lhs = parse_and();
        while (cur_.kind == Tok::Or) {
            advance();
            lhs = Formula::disjunction(std::move(lhs), parse_and());
        }
        return lhs;
    }

    Formula parse_and() {
        Formula lhs = parse_unary();
        while (cur_.kind == Tok::And) {
            advance();
            lhs = Formula::conjunction(std::move(lhs), parse_unary());
        }
        return lhs;
    }

    Formula parse_unary() {
        switch (cur_.kind) {
            case Tok::Not:
                advance();
                return Formula::negation(parse_unary());
            case Tok::True: advance(); return Formula::constant(true);
            case Tok::False: advance(); return Formula::constant(false);
            case Tok::Ident: {
                std::string name(cur_.text);
                advance();
                return Formula::atom(std::move(name));
            }
            case Tok::LParen: {
                advance();
                Formula inner = parse_iff();
                if (cur_.kind != Tok::RParen) throw ParseError(expected("')'"), cur_.pos);
                advance();
                return inner;
            }
            default: throw ParseError(expected("a formula"), cur_.pos);
        }
    }

    std::string expected(const std::string& what) const {
        if (cur_.kind == Tok::End) return "expected " + what + " but reached end of input";
        return "expected " + what + " but found '" + std::string(cur_.text) + "'";
    }

    Lexer lexer_;
    Token cur_{Tok::End, 0, {}};
};

// Binding strength; higher binds tighter.
int precedence(Op op) {
    switch (op) {
        case Op::Iff: return 1;
        case Op::Implies: return 2;
        case Op::Or: return 3;
        case Op::And: return 4;
        case Op::Not: return 5;
        default: return 6;
    }
}

const char* symbol(Op op) {
    switch (op) {
        case Op::And: return " & ";
        case Op::Or: return " | ";
        case Op::Implies: return " -> ";
        case Op::Iff: return " <-> ";
        default: return "";
    }
}

void render_into(const Formula& f, std::string& out) {
    switch (f.op()) {
        case Op::True: out += "true"; return;
        case Op::False: out += "false"; return;
        case Op::Atom: out += f.atom_name(); return;
        case Op::Not: {
            out += '~';
            const bool wrap = precedence(f.lhs().op()) < precedence(Op::Not);
            if (wrap) out += '(';
            render_into(f.lhs(), out);
            if (wrap) out += ')';
            return;
        }
        default: break;
    }
    const int p = precedence(f.op());
    const bool right_assoc = f.op() == Op::Implies;
    const int lp = precedence(f.lhs().op());
    const int rp = precedence(f.rhs().op());
    const bool wrap_l = lp < p || (lp == p && right_assoc);
    const bool wrap_r = rp < p || (rp == p && !right_assoc);
    if (wrap_l) out += '(';
    render_into(f.lhs(), out);
    if (wrap_l) out += ')';
    out += symbol(f.op());
    if (wrap_r) out += '(';
    render_into(f.rhs(), out);
    if (wrap_r) out += ')';
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Formula& f) {
    std::string out;
    render_into(f, out);
    return out;
}

}  // namespace belseq
