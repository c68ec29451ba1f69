#include "lazyasp/heuristics.hpp"

#include <algorithm>
#include <cassert>

namespace lazyasp {

bool ActivityHeap::before(AtomId lhs, AtomId rhs) const {
    double la = activity_[lhs];
    double ra = activity_[rhs];
    if (la != ra) return la > ra;
    return lhs < rhs;
}

void ActivityHeap::sift_up(size_t i) {
    while (i > 0) {
        size_t parent = (i - 1) / 2;
        if (!before(heap_[i], heap_[parent])) break;
        std::swap(heap_[i], heap_[parent]);
        pos_[heap_[i]] = i;
        pos_[heap_[parent]] = parent;
        i = parent;
    }
}

void ActivityHeap::sift_down(size_t i) {
    for (;;) {
        size_t best = i;
        size_t left = 2 * i + 1;
        size_t right = 2 * i + 2;
        if (left < heap_.size() && before(heap_[left], heap_[best])) best = left;
        if (right < heap_.size() && before(heap_[right], heap_[best])) best = right;
        if (best == i) return;
        std::swap(heap_[i], heap_[best]);
        pos_[heap_[i]] = i;
        pos_[heap_[best]] = best;
        i = best;
    }
}

void ActivityHeap::insert(AtomId id) {
    if (pos_.size() <= id) pos_.resize(id + 1, SIZE_MAX);
    if (activity_.size() <= id) activity_.resize(id + 1, 0.0);
    if (pos_[id] != SIZE_MAX) return;
    heap_.push_back(id);
    pos_[id] = heap_.size() - 1;
    sift_up(heap_.size() - 1);
}

bool ActivityHeap::contains(AtomId id) const {
    return id < pos_.size() && pos_[id] != SIZE_MAX;
}

AtomId ActivityHeap::pop() {
    AtomId out = heap_.front();
    pos_[out] = SIZE_MAX;
    AtomId last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_[0] = last;
        pos_[last] = 0;
        sift_down(0);
    }
    return out;
}

void ActivityHeap::raise_to(AtomId id, double value) {
    if (pos_.size() <= id) pos_.resize(id + 1, SIZE_MAX);
    if (activity_.size() <= id) activity_.resize(id + 1, 0.0);
    if (value <= activity_[id]) return;
    activity_[id] = value;
    if (pos_[id] != SIZE_MAX) sift_up(pos_[id]);
}

void ActivityHeap::add(AtomId id, double amount) {
    if (pos_.size() <= id) pos_.resize(id + 1, SIZE_MAX);
    if (activity_.size() <= id) activity_.resize(id + 1, 0.0);
    activity_[id] += amount;
    if (pos_[id] != SIZE_MAX) sift_up(pos_[id]);
}

void ActivityHeap::scale_all(double factor) {
    for (double& v : activity_) v *= factor;
    // Scaling can collapse nearby values into ties, so restore the heap
    // invariant wholesale instead of trusting the old layout.
    if (heap_.size() > 1) {
        for (size_t i = heap_.size() / 2; i-- > 0;) sift_down(i);
    }
}

void DepVsidsHeuristic::on_ground_rule(const GroundRule& gr) {
    if (gr.body_atom == kNoAtom) return;
    heap_.insert(gr.body_atom);
    choice_points_.push_back(gr.body_atom);
    auto influence = [&](AtomId target) {
        if (influencers_.size() <= target) influencers_.resize(target + 1);
        influencers_[target].push_back(gr.body_atom);
    };
    if (gr.head != kNoAtom) influence(gr.head);
    for (AtomId b : gr.negative_body) influence(b);
}

void DepVsidsHeuristic::on_static_nogood(const NoGoodStore& store, uint32_t id) {
    // MOMs refresh targets the choice points that influence the new nogood's
    // atoms (or are one of them); the score always counts the choice point's
    // own short-nogood occurrences.
    auto refresh = [&](AtomId cp) {
        double p = static_cast<double>(store.short_pos_count(cp));
        double n = static_cast<double>(store.short_neg_count(cp));
        heap_.raise_to(cp, p * n * 1024.0 + p + n);
    };
    const NoGood& ng = store.nogood(id);
    for (const Lit& lit : ng.lits) {
        AtomId atom = lit.atom();
        if (heap_.contains(atom)) refresh(atom);
        if (atom < influencers_.size())
            for (AtomId cp : influencers_[atom]) refresh(cp);
    }
}

void DepVsidsHeuristic::bump(AtomId id) {
    heap_.add(id, increment_);
    if (heap_.activity(id) > kVsidsRescaleLimit) {
        heap_.scale_all(kVsidsRescaleFactor);
        increment_ *= kVsidsRescaleFactor;
    }
}

void DepVsidsHeuristic::on_atom_seen(AtomId atom) {
    bump(atom);
    if (atom < influencers_.size()) {
        for (AtomId cp : influencers_[atom]) bump(cp);
    }
}

void DepVsidsHeuristic::on_conflict() { increment_ /= kVsidsDecay; }

AtomId DepVsidsHeuristic::pick(const Assignment& a, const ChoiceRegistry& reg) {
    std::vector<AtomId> stash;
    AtomId found = kNoAtom;
    while (!heap_.empty()) {
        AtomId top = heap_.pop();
        stash.push_back(top);
        if (!a.assigned(top) && reg.applicable(top, a)) {
            found = top;
            break;
        }
    }
    for (AtomId id : stash) heap_.insert(id);
    return found;
}

void NaiveHeuristic::on_ground_rule(const GroundRule& gr) {
    if (gr.body_atom == kNoAtom) return;
    choice_points_.push_back(gr.body_atom);
    assert(choice_points_.size() < 2 ||
           choice_points_[choice_points_.size() - 2] < gr.body_atom);
}

AtomId NaiveHeuristic::pick(const Assignment& a, const ChoiceRegistry& reg) {
    for (AtomId id : choice_points_) {
        if (!a.assigned(id) && reg.applicable(id, a)) return id;
    }
    return kNoAtom;
}

bool choose_sign(AtomId atom, const Assignment& a, const PhaseTable& phases) {
    if (a.value(atom) == TruthValue::Mbt) return true;
    return phases.saved(atom);
}

}  // namespace lazyasp
