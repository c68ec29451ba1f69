#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lazyasp/assignment.hpp"
#include "lazyasp/atom_table.hpp"
#include "lazyasp/nogood.hpp"
#include "lazyasp/syntax.hpp"

namespace lazyasp {

// One instance of a program rule under a ground substitution.
struct GroundRule {
    uint32_t rule_index = 0;
    std::string subst_key;  // substitution rendered as text, unique per instance
    AtomId head = kNoAtom;  // kNoAtom for constraints
    std::vector<AtomId> positive_body;
    std::vector<AtomId> negative_body;
    AtomId body_atom = kNoAtom;  // set when the rule has a negative body
};

enum class Strictness { Strict, Permissive };

// Strict grounds an instance once every positive body atom is TRUE or MBT;
// permissive once every positive body atom is interned and none is FALSE.
struct GroundingMode {
    Strictness rules = Strictness::Strict;
    Strictness constraints = Strictness::Permissive;
};

// Incremental bottom-up grounder.  Joins run semi-naive: every call processes
// the atoms that became relevant since the last call (newly TRUE/MBT for
// strict statements, newly interned for permissive ones) against the
// predicate-indexed extensions.  Each (rule, substitution) pair is emitted at
// most once per run.
class Grounder {
public:
    Grounder(const Program& program, AtomTable& table, GroundingMode mode);

    void notify_positive(AtomId a);
    void notify_interned(AtomId a);

    // Emits ground instances that became derivable under the current
    // assignment.  Interns head, negative body and body-representing atoms of
    // everything it emits.
    std::vector<GroundRule> ground_step(const Assignment& a);

    size_t emitted_count() const { return emitted_.size(); }

private:
    struct Candidate {
        uint32_t rule_index;
        std::string key;
        std::string subst_key;
        std::vector<AtomId> positive_body;
        std::optional<Atom> head;
        std::vector<Atom> negative_body;
    };

    void complete(uint32_t rule_index, Strictness mode, const std::map<std::string, std::string>& subst,
                  const std::vector<AtomId>& pos_ids, const Assignment& a,
                  std::vector<GroundRule>& out);
    void extend(uint32_t rule_index, Strictness mode, std::map<std::string, std::string>& subst,
                std::vector<AtomId>& pos_ids, size_t next, size_t delta_pos, const Assignment& a,
                std::vector<GroundRule>& out);
    void emit(Candidate cand, std::vector<GroundRule>& out);
    bool blocked(const Candidate& cand, const Assignment& a) const;

    const Program& program_;
    AtomTable& table_;
    GroundingMode mode_;

    std::vector<AtomId> queued_positive_;
    std::vector<AtomId> queued_interned_;
    std::unordered_set<std::string> emitted_;
    std::unordered_set<std::string> blocked_keys_;
    std::vector<Candidate> blocked_;
    bool started_ = false;
};

// Translates a ground rule into nogoods:
//   constraint:            { B+ } u { not B- }
//   rule, no negation:     { B+, not h }            with h head-marked
//   rule with negation:    { B+, not B-, not beta } with beta head-marked,
//                          { beta, not b } per b in B+,
//                          { beta, b' }    per b' in B-,
//                          { beta, B+, not h } with h head-marked
// beta is the rule's body-representing atom and the solver's only kind of
// choice point.  Tautological nogoods (an atom on both signs) are dropped.
std::vector<NoGood> rule_to_nogoods(const GroundRule& gr);

struct ChoiceInfo {
    AtomId body_atom = kNoAtom;
    AtomId head = kNoAtom;
    std::vector<AtomId> positive_body;
    std::vector<AtomId> negative_body;
};

// Body-representing atoms registered as guessable choice points.
class ChoiceRegistry {
public:
    void add(const GroundRule& gr);
    bool is_choice(AtomId a) const { return info_.count(a) > 0; }
    const ChoiceInfo& info(AtomId a) const { return info_.at(a); }
    const std::vector<AtomId>& all() const { return order_; }

    // A choice point may be guessed only while its rule's positive body is
    // fully TRUE or MBT.
    bool applicable(AtomId a, const Assignment& assignment) const;

private:
    std::vector<AtomId> order_;
    std::unordered_map<AtomId, ChoiceInfo> info_;
};

}  // namespace lazyasp
