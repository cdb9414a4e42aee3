// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace belseq {

enum class Op : unsigned char { True, False, Atom, Not, And, Or, Implies, Iff };

/// A finite set of propositional atoms.
class Language {
public:
    Language() = default;
    Language(std::initializer_list<std::string> atoms);
    explicit Language(std::set<std::string> atoms) : atoms_(std::move(atoms)) {}

    bool contains(const std::string& atom) const { return atoms_.count(atom) != 0; }
    bool empty() const { return atoms_.empty(); }
    std::size_t size() const { return atoms_.size(); }
    void insert(const std::string& atom) { atoms_.insert(atom); }

    bool intersects(const Language& other) const;
    bool subset_of(const Language& other) const;
    Language united(const Language& other) const;
    Language intersected(const Language& other) const;

    const std::set<std::string>& atoms() const { return atoms_; }
    std::vector<std::string> sorted() const { return {atoms_.begin(), atoms_.end()}; }
    auto begin() const { return atoms_.begin(); }
    auto end() const { return atoms_.end(); }

    /// "{p, q}"
    std::string to_string() const;

    friend bool operator==(const Language&, const Language&) = default;
    friend auto operator<=>(const Language& a, const Language& b) { return a.atoms_ <=> b.atoms_; }

private:
    std::set<std::string> atoms_;
};

/// True iff `name` matches [a-z][a-z0-9_]* and is not a reserved constant.
bool is_atom_name(std::string_view name);

/// Immutable propositional formula. Copies share structure.
class Formula {
public:
    static Formula constant(bool value);
    static Formula atom(std::string name);
    static Formula negation(Formula child);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);
    static Formula implication(Formula lhs, Formula rhs);
    static Formula biconditional(Formula lhs, Formula rhs);
    static Formula binary(Op op, Formula lhs, Formula rhs);

    Op op() const;
    bool is_constant() const { return op() == Op::True || op() == Op::False; }
    const std::string& atom_name() const;
    /// Operand of Not, left operand of binary connectives.
    const Formula& lhs() const;
    const Formula& rhs() const;
    std::size_t hash() const;

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// Total assignment on a language.
class Valuation {
public:
    Valuation() = default;
    Valuation(std::initializer_list<std::pair<const std::string, bool>> values) : values_(values) {}
    void set(const std::string& atom, bool value) { values_[atom] = value; }
    bool defines(const std::string& atom) const { return values_.count(atom) != 0; }
    bool value(const std::string& atom) const;
    Language language() const;

private:
    std::map<std::string, bool> values_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    /// Zero-based byte offset into the input.
    std::size_t position() const { return position_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

class UnboundAtomError : public std::runtime_error {
public:
    explicit UnboundAtomError(const std::string& atom)
        : std::runtime_error("atom '" + atom + "' has no value in the valuation"), atom_(atom) {}
    const std::string& atom() const { return atom_; }

private:
    std::string atom_;
};

// Grammar, loosest to tightest: <->  ->  |  &  ~
// '->' associates to the right, the other binary connectives to the left.
Formula parse(std::string_view text);
std::string render(const Formula& f);

bool evaluate(const Formula& f, const Valuation& v);

/// L(f): the atoms that occur in f.
Language syntactic_language(const Formula& f);

/// Replaces every occurrence of `atom` with the given constant.
Formula substitute(const Formula& f, const std::string& atom, bool value);

std::size_t formula_size(const Formula& f);

}  // namespace belseq

template <>
struct std::hash<belseq::Formula> {
    std::size_t operator()(const belseq::Formula& f) const { return f.hash(); }
};
