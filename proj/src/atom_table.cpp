#include "lazyasp/atom_table.hpp"

#include <stdexcept>

namespace lazyasp {

AtomId AtomTable::push(std::string name, bool body_atom) {
    AtomId id = static_cast<AtomId>(names_.size());
    names_.push_back(std::move(name));
    body_flag_.push_back(body_atom ? 1 : 0);
    atoms_.emplace_back();
    by_name_.emplace(names_.back(), id);
    for (auto& obs : observers_) obs(id);
    return id;
}

AtomId AtomTable::intern(const Atom& atom) {
    if (!atom.ground())
        throw std::logic_error("cannot intern non-ground atom " + atom.to_string());
    std::string key = atom.to_string();
    auto it = by_name_.find(key);
    if (it != by_name_.end()) return it->second;

    AtomId id = static_cast<AtomId>(names_.size());
    by_predicate_[atom.predicate].push_back(id);
    if (!atom.terms.empty())
        by_predicate_first_[atom.predicate + "/" + atom.terms[0].name].push_back(id);
    push(key, false);
    atoms_[id] = atom;
    return id;
}

AtomId AtomTable::find(const Atom& atom) const {
    auto it = by_name_.find(atom.to_string());
    return it == by_name_.end() ? kNoAtom : it->second;
}

AtomId AtomTable::intern_body_atom(uint32_t rule_index, const std::string& subst_key) {
    // '{' keeps the synthetic name out of the surface syntax.
    std::string key = "{rule" + std::to_string(rule_index) + "|" + subst_key + "}";
    auto it = by_name_.find(key);
    if (it != by_name_.end()) return it->second;
    return push(key, true);
}

const Atom& AtomTable::atom(AtomId id) const {
    if (body_flag_[id])
        throw std::logic_error("body atom has no syntactic form: " + names_[id]);
    return atoms_[id];
}

const std::vector<AtomId>& AtomTable::atoms_of(const std::string& predicate) const {
    static const std::vector<AtomId> empty;
    auto it = by_predicate_.find(predicate);
    return it == by_predicate_.end() ? empty : it->second;
}

const std::vector<AtomId>& AtomTable::atoms_of_with_first(const std::string& predicate,
                                                          const std::string& first_constant) const {
    static const std::vector<AtomId> empty;
    auto it = by_predicate_first_.find(predicate + "/" + first_constant);
    return it == by_predicate_first_.end() ? empty : it->second;
}

}  // namespace lazyasp
