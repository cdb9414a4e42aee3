// Copyright (C) 2026 The belseq authors
// SPDX-License-Identifier: Apache-2.0

#include "dpll.hpp"

#include <cstdlib>
#include <map>
#include <vector>

namespace belseq::detail {
namespace {

using Clause = std::vector<int>;

// Tseitin encoding; literals are +/-(var index), variables start at 1.
class Encoder {
public:
    int encode(const Formula& f) {
        switch (f.op()) {
            case Op::True: return truth();
            case Op::False: return -truth();
            case Op::Atom: {
                auto [it, inserted] = atoms_.try_emplace(f.atom_name(), 0);
                if (inserted) it->second = fresh();
                return it->second;
            }
            case Op::Not: return -encode(f.lhs());
            default: break;
        }
        const int a = encode(f.lhs());
        const int b = encode(f.rhs());
        const int x = fresh();
        switch (f.op()) {
            case Op::And:
                clauses_.push_back({-x, a});
                clauses_.push_back({-x, b});
                clauses_.push_back({x, -a, -b});
                break;
            case Op::Or:
                clauses_.push_back({-x, a, b});
                clauses_.push_back({x, -a});
                clauses_.push_back({x, -b});
                break;
            case Op::Implies:
                clauses_.push_back({-x, -a, b});
                clauses_.push_back({x, a});
                clauses_.push_back({x, -b});
                break;
            case Op::Iff:
                clauses_.push_back({-x, -a, b});
                clauses_.push_back({-x, a, -b});
                clauses_.push_back({x, a, b});
                clauses_.push_back({x, -a, -b});
                break;
            default: break;
        }
        return x;
    }

    void assert_true(int lit) { clauses_.push_back({lit}); }
    int num_vars() const { return next_ - 1; }
    std::vector<Clause>& clauses() { return clauses_; }

private:
    int fresh() { return next_++; }
    int truth() {
        if (true_var_ == 0) {
            true_var_ = fresh();
            clauses_.push_back({true_var_});
        }
        return true_var_;
    }

    std::map<std::string, int> atoms_;
    std::vector<Clause> clauses_;
    int next_ = 1;
    int true_var_ = 0;
};

class Dpll {
public:
    Dpll(std::vector<Clause> clauses, int num_vars)
        : clauses_(std::move(clauses)), value_(static_cast<std::size_t>(num_vars) + 1, 0) {}

    bool solve() {
        if (!propagate()) return false;
        const int var = pick();
        if (var == 0) return true;
        for (int lit : {var, -var}) {
            const std::size_t mark = trail_.size();
            assign(lit);
            if (solve()) return true;
            undo(mark);
        }
        return false;
    }

private:
    int lit_value(int lit) const {
        const int v = value_[static_cast<std::size_t>(std::abs(lit))];
        return lit > 0 ? v : -v;
    }

    void assign(int lit) {
        value_[static_cast<std::size_t>(std::abs(lit))] = lit > 0 ? 1 : -1;
        trail_.push_back(std::abs(lit));
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            value_[static_cast<std::size_t>(trail_.back())] = 0;
            trail_.pop_back();
        }
    }

    // Unit propagation to fixpoint; false on conflict.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& clause : clauses_) {
                int unassigned = 0;
                int last = 0;
                bool satisfied = false;
                for (int lit : clause) {
                    const int v = lit_value(lit);
                    if (v > 0) {
                        satisfied = true;
                        break;
                    }
                    if (v == 0) {
                        ++unassigned;
                        last = lit;
                    }
                }
                if (satisfied) continue;
                if (unassigned == 0) return false;
                if (unassigned == 1) {
                    assign(last);
                    changed = true;
                }
            }
        }
        return true;
    }

    // First unassigned variable of the first unsatisfied clause; 0 when all hold.
    int pick() const {
        for (const auto& clause : clauses_) {
            int candidate = 0;
            bool satisfied = false;
            for (int lit : clause) {
                const int v = lit_value(lit);
                if (v > 0) {
                    satisfied = true;
                    break;
                }
                if (v == 0 && candidate == 0) candidate = std::abs(lit);
            }
            if (!satisfied) return candidate;
        }
        return 0;
    }

    std::vector<Clause> clauses_;
    std::vector<int> value_;
    std::vector<int> trail_;
};

}  // namespace

bool dpll_satisfiable(std::span<const Formula> fs) {
    Encoder enc;
    for (const auto& f : fs) enc.assert_true(enc.encode(f));
    Dpll solver(std::move(enc.clauses()), enc.num_vars());
    return solver.solve();
}

}  // namespace belseq::detail
