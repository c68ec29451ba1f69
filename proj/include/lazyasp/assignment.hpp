#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

#include "lazyasp/nogood.hpp"

namespace lazyasp {

// Truth values ordered by strength: TRUE > MBT ("must be true") > the rest.
// Both TRUE and MBT satisfy positive literals; only FALSE satisfies negative
// ones.  MBT marks atoms required true whose deriving rule has not fired yet.
enum class TruthValue : uint8_t { Unassigned = 0, False = 1, Mbt = 2, True = 3 };

inline bool is_positive(TruthValue v) { return v >= TruthValue::Mbt; }

inline const char* to_string(TruthValue v) {
    switch (v) {
        case TruthValue::Unassigned: return "unassigned";
        case TruthValue::False: return "false";
        case TruthValue::Mbt: return "mbt";
        case TruthValue::True: return "true";
    }
    return "?";
}

// Reason markers for trail entries that were not forced by a nogood.
inline constexpr uint32_t kReasonChoice = UINT32_MAX;
inline constexpr uint32_t kNoNoGood = UINT32_MAX;

struct TrailEntry {
    AtomId atom;
    TruthValue value;
    uint32_t level;
    uint32_t reason;  // forcing nogood id, or kReasonChoice
    int32_t prev;     // index of the overwritten entry; >= 0 only for MBT->TRUE promotions
};

enum class AssignResult { Ok, NoOp, Conflict };

// Trail-based assignment over the growing atom universe.  Promotions from MBT
// to TRUE push a second entry linked to the first, so backjumping can restore
// the weaker value.  Entries at level 0 survive every backjump.
class Assignment {
public:
    void ensure_capacity(size_t atom_count);

    TruthValue value(AtomId a) const {
        return a < value_.size() ? value_[a] : TruthValue::Unassigned;
    }
    bool satisfied(Lit l) const {
        TruthValue v = value(l.atom());
        return l.positive() ? is_positive(v) : v == TruthValue::False;
    }
    bool assigned(AtomId a) const { return value(a) != TruthValue::Unassigned; }

    uint32_t decision_level() const { return level_; }
    void new_decision_level() { ++level_; }

    // Records value for atom at the current decision level.  Weaker or equal
    // re-assignments are no-ops; an MBT->TRUE upgrade records a promotion
    // entry; contradictory requests report a conflict for the caller to blame
    // on the requesting nogood.
    AssignResult assign(AtomId atom, TruthValue value, uint32_t reason);

    // Removes every entry above target_level, saving phases via phase_hook.
    void backjump(uint32_t target_level);

    bool is_locked(uint32_t nogood_id) const {
        return nogood_id < lock_count_.size() && lock_count_[nogood_id] > 0;
    }

    const std::vector<TrailEntry>& trail() const { return trail_; }
    size_t qhead = 0;  // propagation cursor into the trail

    // Entry where the literal first became satisfied: for a positive literal
    // on a promoted atom that is the MBT entry, not the promotion.
    int32_t satisfier_index(Lit l) const;
    uint32_t satisfier_level(Lit l) const { return trail_[satisfier_index(l)].level; }

    // Level of the atom's earliest live entry.
    uint32_t level(AtomId a) const;
    uint32_t reason(AtomId a) const;

    size_t mbt_count() const { return mbt_count_; }
    std::vector<AtomId> mbt_atoms() const;

    // Decision entries in trail order, as the literals they satisfy.
    std::vector<Lit> decision_literals() const;

    // Called with (atom, last value) on unassignment and on promotion.
    std::function<void(AtomId, TruthValue)> phase_hook;
    // Called when an atom freshly becomes TRUE or MBT (not on promotion).
    std::function<void(AtomId)> positive_hook;

private:
    void push(AtomId atom, TruthValue value, uint32_t reason, int32_t prev);

    std::vector<TruthValue> value_;
    std::vector<int32_t> entry_of_;  // current trail entry per atom, -1 if unassigned
    std::vector<TrailEntry> trail_;
    std::vector<uint32_t> lock_count_;
    uint32_t level_ = 0;
    size_t mbt_count_ = 0;
};

}  // namespace lazyasp
