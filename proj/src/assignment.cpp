#include "lazyasp/assignment.hpp"

namespace lazyasp {

void Assignment::ensure_capacity(size_t atom_count) {
    if (value_.size() < atom_count) {
        value_.resize(atom_count, TruthValue::Unassigned);
        entry_of_.resize(atom_count, -1);
    }
}

void Assignment::push(AtomId atom, TruthValue value, uint32_t reason, int32_t prev) {
    ensure_capacity(atom + 1);
    trail_.push_back({atom, value, level_, reason, prev});
    value_[atom] = value;
    entry_of_[atom] = static_cast<int32_t>(trail_.size()) - 1;
    if (reason != kReasonChoice) {
        if (lock_count_.size() <= reason) lock_count_.resize(reason + 1, 0);
        ++lock_count_[reason];
    }
}

AssignResult Assignment::assign(AtomId atom, TruthValue requested, uint32_t reason) {
    assert(requested != TruthValue::Unassigned);
    ensure_capacity(atom + 1);
    TruthValue current = value_[atom];

    if (current == TruthValue::Unassigned) {
        push(atom, requested, reason, -1);
        if (requested == TruthValue::Mbt) ++mbt_count_;
        if (is_positive(requested) && positive_hook) positive_hook(atom);
        return AssignResult::Ok;
    }
    if (requested == TruthValue::False || current == TruthValue::False)
        return current == requested ? AssignResult::NoOp : AssignResult::Conflict;
    if (requested == TruthValue::True && current == TruthValue::Mbt) {
        push(atom, TruthValue::True, reason, entry_of_[atom]);
        --mbt_count_;
        if (phase_hook) phase_hook(atom, TruthValue::True);
        return AssignResult::Ok;
    }
    return AssignResult::NoOp;  // equal value, or MBT request on a TRUE atom
}

void Assignment::backjump(uint32_t target_level) {
    assert(target_level <= level_);
    while (!trail_.empty() && trail_.back().level > target_level) {
        const TrailEntry e = trail_.back();
        trail_.pop_back();
        if (e.reason != kReasonChoice) --lock_count_[e.reason];
        if (phase_hook) phase_hook(e.atom, e.value);
        if (e.prev >= 0) {
            // Undo a promotion: the atom falls back to its MBT entry.
            value_[e.atom] = trail_[e.prev].value;
            entry_of_[e.atom] = e.prev;
            ++mbt_count_;
        } else {
            if (e.value == TruthValue::Mbt) --mbt_count_;
            value_[e.atom] = TruthValue::Unassigned;
            entry_of_[e.atom] = -1;
        }
    }
    level_ = target_level;
    if (qhead > trail_.size()) qhead = trail_.size();
}

int32_t Assignment::satisfier_index(Lit l) const {
    int32_t idx = entry_of_[l.atom()];
    assert(idx >= 0);
    assert(satisfied(l));
    if (l.positive() && trail_[idx].prev >= 0) idx = trail_[idx].prev;
    return idx;
}

uint32_t Assignment::level(AtomId a) const {
    int32_t idx = entry_of_[a];
    assert(idx >= 0);
    if (trail_[idx].prev >= 0) idx = trail_[idx].prev;
    return trail_[idx].level;
}

uint32_t Assignment::reason(AtomId a) const {
    int32_t idx = entry_of_[a];
    assert(idx >= 0);
    return trail_[idx].reason;
}

std::vector<AtomId> Assignment::mbt_atoms() const {
    std::vector<AtomId> out;
    for (const TrailEntry& e : trail_)
        if (value_[e.atom] == TruthValue::Mbt && e.prev < 0) out.push_back(e.atom);
    return out;
}

std::vector<Lit> Assignment::decision_literals() const {
    std::vector<Lit> out;
    for (const TrailEntry& e : trail_) {
        if (e.reason != kReasonChoice) continue;
        assert(e.value == TruthValue::True || e.value == TruthValue::False);
        out.push_back(Lit(e.atom, e.value == TruthValue::True));
    }
    return out;
}

}  // namespace lazyasp
