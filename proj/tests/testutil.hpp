#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lazyasp/assignment.hpp"
#include "lazyasp/nogood.hpp"
#include "lazyasp/oracle.hpp"
#include "lazyasp/syntax.hpp"

namespace testutil {

// Textbook recursive Luby definition, 1-based:
//   luby(i) = 2^(k-1)            if i = 2^k - 1
//   luby(i) = luby(i - 2^(k-1) + 1)  if 2^(k-1) <= i < 2^k - 1
inline uint64_t luby_reference(uint64_t i) {
    uint64_t k = 1;
    while (((uint64_t{1} << k) - 1) < i) ++k;
    if (i == (uint64_t{1} << k) - 1) return uint64_t{1} << (k - 1);
    return luby_reference(i - (uint64_t{1} << (k - 1)) + 1);
}

// Random safe program over at most 3 predicates (arity <= 2), at most 3
// constants and at most 8 rules.  Head and negative-body variables are drawn
// from the positive body's variables, so safety holds by construction.
inline std::string random_program_text(std::mt19937_64& rng) {
    auto pick = [&rng](uint64_t n) { return rng() % n; };
    const std::string preds[3] = {"p", "q", "r"};
    uint64_t arity[3] = {pick(3), pick(2), pick(2)};
    uint64_t n_constants = 1 + pick(3);
    const std::string constants[3] = {"1", "2", "3"};
    const std::string variables[2] = {"X", "Y"};

    lazyasp::Program program;
    uint64_t n_rules = 2 + pick(7);
    for (uint64_t r = 0; r < n_rules; ++r) {
        lazyasp::Rule rule;
        bool constraint = pick(4) == 0;
        uint64_t n_pos = pick(3);
        if (constraint && n_pos == 0) n_pos = 1;

        std::set<std::string> vars_in_pos;
        for (uint64_t i = 0; i < n_pos; ++i) {
            uint64_t pi = pick(3);
            lazyasp::Atom atom;
            atom.predicate = preds[pi];
            for (uint64_t k = 0; k < arity[pi]; ++k) {
                if (pick(2) == 0) {
                    const std::string& v = variables[pick(2)];
                    atom.terms.push_back(lazyasp::variable(v));
                    vars_in_pos.insert(v);
                } else {
                    atom.terms.push_back(lazyasp::constant(constants[pick(n_constants)]));
                }
            }
            rule.positive_body.push_back(std::move(atom));
        }
        std::vector<std::string> safe_vars(vars_in_pos.begin(), vars_in_pos.end());
        auto safe_atom = [&]() {
            uint64_t pi = pick(3);
            lazyasp::Atom atom;
            atom.predicate = preds[pi];
            for (uint64_t k = 0; k < arity[pi]; ++k) {
                if (!safe_vars.empty() && pick(2) == 0) {
                    atom.terms.push_back(lazyasp::variable(safe_vars[pick(safe_vars.size())]));
                } else {
                    atom.terms.push_back(lazyasp::constant(constants[pick(n_constants)]));
                }
            }
            return atom;
        };
        uint64_t n_neg = pick(3);
        for (uint64_t i = 0; i < n_neg; ++i) rule.negative_body.push_back(safe_atom());
        if (!constraint) rule.head = safe_atom();
        program.rules.push_back(std::move(rule));
    }
    return program.to_string();
}

// Draws programs until one fits the oracle budget.  Small budgets keep the
// subset enumeration fast enough for large suites.
inline std::string random_oracle_program_text(uint64_t seed, size_t atom_budget = 12) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::string text = random_program_text(rng);
        try {
            lazyasp::brute_force_answer_sets(lazyasp::parse_program(text), atom_budget);
            return text;
        } catch (const std::length_error&) {
            continue;
        }
    }
    throw std::runtime_error("could not sample a budget-sized program");
}

// Reference propagation: scans every nogood every round until nothing
// changes, applying the same forcing rules as the store.  Values strengthen
// monotonically, so the fixpoint is order-independent and comparable with
// the watched-literal engine's result.
struct PropagationReference {
    bool conflict = false;
    std::map<lazyasp::AtomId, lazyasp::TruthValue> values;

    lazyasp::TruthValue value(lazyasp::AtomId a) const {
        auto it = values.find(a);
        return it == values.end() ? lazyasp::TruthValue::Unassigned : it->second;
    }
    bool satisfied(lazyasp::Lit l) const {
        lazyasp::TruthValue v = value(l.atom());
        return l.positive() ? lazyasp::is_positive(v) : v == lazyasp::TruthValue::False;
    }
};

inline PropagationReference propagate_reference(
    const std::vector<lazyasp::NoGood>& nogoods,
    std::map<lazyasp::AtomId, lazyasp::TruthValue> initial) {
    using lazyasp::TruthValue;
    PropagationReference ref;
    ref.values = std::move(initial);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const lazyasp::NoGood& ng : nogoods) {
            size_t unsat = 0;
            size_t open = SIZE_MAX;
            for (size_t i = 0; i < ng.size(); ++i) {
                if (!ref.satisfied(ng.lits[i])) {
                    ++unsat;
                    open = i;
                }
            }
            if (unsat == 0) {
                ref.conflict = true;
                return ref;
            }
            if (unsat != 1) continue;
            bool all_pos_true = true;
            for (const lazyasp::Lit& l : ng.lits) {
                if (l.positive() && ref.value(l.atom()) != TruthValue::True) all_pos_true = false;
            }
            lazyasp::Lit l = ng.lits[open];
            TruthValue v = ref.value(l.atom());
            bool head = ng.head_index == static_cast<int32_t>(open);
            if (l.positive()) {
                if (v == TruthValue::Unassigned) {
                    ref.values[l.atom()] = TruthValue::False;
                    changed = true;
                }
            } else if (v == TruthValue::Unassigned) {
                ref.values[l.atom()] = head && all_pos_true ? TruthValue::True : TruthValue::Mbt;
                changed = true;
            } else if (v == TruthValue::Mbt && head && all_pos_true) {
                ref.values[l.atom()] = TruthValue::True;
                changed = true;
            }
        }
    }
    return ref;
}

// Random nogoods over a small atom universe; roughly half of those with a
// negative literal are head-marked.
inline std::vector<lazyasp::NoGood> random_nogoods(std::mt19937_64& rng, size_t n_atoms,
                                                   size_t n_nogoods) {
    auto pick = [&rng](uint64_t n) { return rng() % n; };
    std::vector<lazyasp::NoGood> out;
    for (size_t i = 0; i < n_nogoods; ++i) {
        std::vector<lazyasp::AtomId> atoms(n_atoms);
        for (size_t k = 0; k < n_atoms; ++k) atoms[k] = static_cast<lazyasp::AtomId>(k);
        std::shuffle(atoms.begin(), atoms.end(), rng);
        size_t size = 1 + pick(std::min<size_t>(4, n_atoms));
        lazyasp::NoGood ng;
        std::vector<size_t> negatives;
        for (size_t k = 0; k < size; ++k) {
            bool positive = pick(2) == 0;
            if (!positive) negatives.push_back(k);
            ng.lits.push_back(lazyasp::Lit(atoms[k], positive));
        }
        if (!negatives.empty() && pick(2) == 0) {
            ng.head_index = static_cast<int32_t>(negatives[pick(negatives.size())]);
        }
        out.push_back(std::move(ng));
    }
    return out;
}

}  // namespace testutil
