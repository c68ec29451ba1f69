#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lazyasp/atom_table.hpp"

namespace lazyasp {

// Signed atom reference.  The sign says which truth makes the literal
// "satisfied" towards violating its nogood: a positive literal is satisfied by
// TRUE or MBT, a negative literal by FALSE.
class Lit {
public:
    Lit() : code_(UINT32_MAX) {}
    Lit(AtomId atom, bool positive) : code_(atom * 2 + (positive ? 1 : 0)) {}

    AtomId atom() const { return code_ / 2; }
    bool positive() const { return code_ & 1; }
    uint32_t index() const { return code_; }

    bool operator==(const Lit&) const = default;

private:
    uint32_t code_;
};

inline Lit pos(AtomId a) { return Lit(a, true); }
inline Lit neg(AtomId a) { return Lit(a, false); }

// A nogood is a set of literals that must not all be satisfied at once.
// head_index, when >= 0, marks a negative-sign literal as a rule head: unit
// propagation on that literal may assign TRUE instead of MBT when every
// positive-sign literal is TRUE outright.
struct NoGood {
    std::vector<Lit> lits;
    int32_t head_index = -1;
    double activity = 0.0;
    uint32_t lbd = 0;  // 0 means not yet computed (grounder-produced)
    bool learned = false;
    bool deleted = false;

    size_t size() const { return lits.size(); }
    bool has_head() const { return head_index >= 0; }
    Lit head_literal() const { return lits[head_index]; }
};

}  // namespace lazyasp
