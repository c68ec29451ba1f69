#pragma once

#include <cstdint>
#include <vector>

#include "lazyasp/assignment.hpp"
#include "lazyasp/grounding.hpp"
#include "lazyasp/nogood.hpp"
#include "lazyasp/search_control.hpp"

namespace lazyasp {

// Picks the next choice point (always a rule-body atom whose rule is
// applicable: every positive body atom holds).  Returns kNoAtom when no
// applicable unassigned choice point remains.
class DecisionHeuristic {
public:
    virtual ~DecisionHeuristic() = default;
    virtual void on_ground_rule(const GroundRule& gr) = 0;
    // Store nogoods produced by grounding, for the initial scoring pass.
    virtual void on_static_nogood(const NoGoodStore& store, uint32_t id) = 0;
    virtual void on_atom_seen(AtomId atom) = 0;
    virtual void on_conflict() = 0;
    virtual AtomId pick(const Assignment& a, const ChoiceRegistry& reg) = 0;
};

// Binary max-heap over atom activities with an index for in-place reheap.
// Ties break toward the lower atom id so runs are reproducible.
class ActivityHeap {
public:
    void insert(AtomId id);
    bool contains(AtomId id) const;
    bool empty() const { return heap_.empty(); }
    AtomId top() const { return heap_.front(); }
    AtomId pop();
    double activity(AtomId id) const { return id < activity_.size() ? activity_[id] : 0.0; }
    // Raises the atom's activity to at least `value` and reheaps.
    void raise_to(AtomId id, double value);
    void add(AtomId id, double amount);
    void scale_all(double factor);

private:
    bool before(AtomId lhs, AtomId rhs) const;
    void sift_up(size_t i);
    void sift_down(size_t i);

    std::vector<AtomId> heap_;
    std::vector<size_t> pos_;      // position in heap_, SIZE_MAX if absent
    std::vector<double> activity_;
};

// Activity-driven choice with a dependency step: bumping an ordinary atom
// also bumps the body atoms of rules it can influence, i.e. rules where it
// is the head or appears negated.  Choice-point scores are seeded from the
// grounder's nogoods with a cheap occurrence product.
class DepVsidsHeuristic : public DecisionHeuristic {
public:
    void on_ground_rule(const GroundRule& gr) override;
    void on_static_nogood(const NoGoodStore& store, uint32_t id) override;
    void on_atom_seen(AtomId atom) override;
    void on_conflict() override;
    AtomId pick(const Assignment& a, const ChoiceRegistry& reg) override;

    double activity(AtomId id) const { return heap_.activity(id); }
    double increment() const { return increment_; }

private:
    void bump(AtomId id);

    ActivityHeap heap_;
    // influencers_[atom] = body atoms of rules with this atom as head or in
    // the negative body.
    std::vector<std::vector<AtomId>> influencers_;
    std::vector<AtomId> choice_points_;
    double increment_ = 1.0;
};

inline constexpr double kVsidsDecay = 0.92;
inline constexpr double kVsidsRescaleLimit = 1e100;
inline constexpr double kVsidsRescaleFactor = 1e-100;

// Baseline: the applicable unassigned choice point with the lowest id.
class NaiveHeuristic : public DecisionHeuristic {
public:
    void on_ground_rule(const GroundRule& gr) override;
    void on_static_nogood(const NoGoodStore&, uint32_t) override {}
    void on_atom_seen(AtomId) override {}
    void on_conflict() override {}
    AtomId pick(const Assignment& a, const ChoiceRegistry& reg) override;

private:
    std::vector<AtomId> choice_points_;
};

// Sign for a fresh decision: an atom already at must-be-true is confirmed
// true; otherwise the saved phase decides.
bool choose_sign(AtomId atom, const Assignment& a, const PhaseTable& phases);

}  // namespace lazyasp
