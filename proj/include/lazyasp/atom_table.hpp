#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lazyasp/syntax.hpp"

namespace lazyasp {

using AtomId = uint32_t;
inline constexpr AtomId kNoAtom = UINT32_MAX;

// Interns ground atoms to dense ids.  Ordinary atoms come from the program;
// body atoms are synthetic per (rule, substitution) and represent the firing
// of one ground rule with negation.  Growth observers let the assignment,
// phase table and heuristic structures stay sized in lockstep.
class AtomTable {
public:
    AtomId intern(const Atom& atom);
    AtomId find(const Atom& atom) const;
    AtomId intern_body_atom(uint32_t rule_index, const std::string& subst_key);

    size_t size() const { return names_.size(); }
    const std::string& name(AtomId id) const { return names_[id]; }
    bool is_body_atom(AtomId id) const { return body_flag_[id]; }
    const Atom& atom(AtomId id) const;

    // Predicate-extension index used by the grounder's joins.
    const std::vector<AtomId>& atoms_of(const std::string& predicate) const;
    const std::vector<AtomId>& atoms_of_with_first(const std::string& predicate,
                                                   const std::string& first_constant) const;

    void on_grow(std::function<void(AtomId)> observer) {
        observers_.push_back(std::move(observer));
    }

private:
    AtomId push(std::string name, bool body_atom);

    std::vector<std::string> names_;
    std::vector<uint8_t> body_flag_;
    std::vector<Atom> atoms_;  // parallel to names_; empty Atom for body atoms
    std::unordered_map<std::string, AtomId> by_name_;
    std::unordered_map<std::string, std::vector<AtomId>> by_predicate_;
    std::unordered_map<std::string, std::vector<AtomId>> by_predicate_first_;
    std::vector<std::function<void(AtomId)>> observers_;
};

}  // namespace lazyasp
