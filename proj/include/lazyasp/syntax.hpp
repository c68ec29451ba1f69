#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lazyasp {

enum class TermKind { Constant, Variable };

// A term is a constant (lowercase identifier or integer, stored as text) or
// an uppercase-leading variable.
struct Term {
    TermKind kind;
    std::string name;

    bool is_constant() const { return kind == TermKind::Constant; }
    bool is_variable() const { return kind == TermKind::Variable; }
    bool operator==(const Term&) const = default;
};

inline Term constant(std::string name) { return {TermKind::Constant, std::move(name)}; }
inline Term variable(std::string name) { return {TermKind::Variable, std::move(name)}; }

struct Atom {
    std::string predicate;
    std::vector<Term> terms;

    size_t arity() const { return terms.size(); }
    bool ground() const;
    void collect_variables(std::set<std::string>& out) const;
    std::string to_string() const;
    bool operator==(const Atom&) const = default;
};

struct SourcePos {
    int line = 0;
    int column = 0;
};

// head :- positive_body, not negative_body.  A missing head makes the rule a
// constraint; an empty body makes it a fact.
struct Rule {
    std::optional<Atom> head;
    std::vector<Atom> positive_body;
    std::vector<Atom> negative_body;
    SourcePos pos;

    bool is_constraint() const { return !head.has_value(); }
    bool is_fact() const { return head && positive_body.empty() && negative_body.empty(); }
    std::string to_string() const;

    bool operator==(const Rule& other) const {
        return head == other.head && positive_body == other.positive_body &&
               negative_body == other.negative_body;
    }
};

struct Program {
    std::vector<Rule> rules;

    std::string to_string() const;
    bool operator==(const Program& other) const { return rules == other.rules; }
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, SourcePos pos)
        : std::runtime_error(msg), pos_(pos) {}
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

struct SafetyReport {
    bool ok = true;
    // Variables of the head or negative body that never occur in the positive body.
    std::vector<std::string> unsafe_variables;
};

// A rule is safe when every variable of the head and the negative body also
// occurs in the positive body.
SafetyReport validate_safety(const Rule& rule);

// Parses a full program.  Enforces one arity per predicate and safety of every
// rule; violations raise ParseError with a source position.
Program parse_program(std::string_view text);

}  // namespace lazyasp
