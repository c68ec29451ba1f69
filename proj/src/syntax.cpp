#include "lazyasp/syntax.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace lazyasp {

bool Atom::ground() const {
    for (const Term& t : terms)
        if (t.is_variable()) return false;
    return true;
}

void Atom::collect_variables(std::set<std::string>& out) const {
    for (const Term& t : terms)
        if (t.is_variable()) out.insert(t.name);
}

std::string Atom::to_string() const {
    if (terms.empty()) return predicate;
    std::string s = predicate + "(";
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) s += ",";
        s += terms[i].name;
    }
    s += ")";
    return s;
}

std::string Rule::to_string() const {
    std::string s;
    if (head) s = head->to_string();
    if (!positive_body.empty() || !negative_body.empty()) {
        s += s.empty() ? ":- " : " :- ";
        bool first = true;
        for (const Atom& a : positive_body) {
            if (!first) s += ", ";
            s += a.to_string();
            first = false;
        }
        for (const Atom& a : negative_body) {
            if (!first) s += ", ";
            s += "not " + a.to_string();
            first = false;
        }
    }
    return s + ".";
}

std::string Program::to_string() const {
    std::string s;
    for (const Rule& r : rules) {
        s += r.to_string();
        s += "\n";
    }
    return s;
}

SafetyReport validate_safety(const Rule& rule) {
    std::set<std::string> pos_vars;
    for (const Atom& a : rule.positive_body) a.collect_variables(pos_vars);

    std::set<std::string> needed;
    if (rule.head) rule.head->collect_variables(needed);
    for (const Atom& a : rule.negative_body) a.collect_variables(needed);

    SafetyReport report;
    for (const std::string& v : needed)
        if (!pos_vars.count(v)) report.unsafe_variables.push_back(v);
    report.ok = report.unsafe_variables.empty();
    return report;
}

namespace {

enum class Tok { Ident, Variable, Integer, ColonDash, Comma, Dot, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        SourcePos pos{line_, col_};
        if (at_end()) return {Tok::End, "", pos};
        char c = peek();
        if (c == ',') { advance(); return {Tok::Comma, ",", pos}; }
        if (c == '.') { advance(); return {Tok::Dot, ".", pos}; }
        if (c == '(') { advance(); return {Tok::LParen, "(", pos}; }
        if (c == ')') { advance(); return {Tok::RParen, ")", pos}; }
        if (c == ':') {
            advance();
            if (at_end() || peek() != '-')
                throw ParseError("expected '-' after ':'", pos);
            advance();
            return {Tok::ColonDash, ":-", pos};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += take();
            return {Tok::Integer, s, pos};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string s;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                s += take();
            bool upper = std::isupper(static_cast<unsigned char>(s[0]));
            return {upper ? Tok::Variable : Tok::Ident, s, pos};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

private:
    bool at_end() const { return idx_ >= text_.size(); }
    char peek() const { return text_[idx_]; }
    char take() {
        char c = text_[idx_];
        advance();
        return c;
    }
    void advance() {
        if (text_[idx_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++idx_;
    }
    void skip_space() {
        while (!at_end()) {
            char c = peek();
            if (c == '%') {
                while (!at_end() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    size_t idx_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { tok_ = lexer_.next(); }

    Program parse() {
        Program prog;
        while (tok_.kind != Tok::End) prog.rules.push_back(parse_rule());
        return prog;
    }

private:
    void bump() { tok_ = lexer_.next(); }

    void expect(Tok kind, const char* what) {
        if (tok_.kind != kind)
            throw ParseError(std::string("expected ") + what, tok_.pos);
        bump();
    }

    Term parse_term() {
        Token t = tok_;
        if (t.kind == Tok::Variable) { bump(); return variable(t.text); }
        if (t.kind == Tok::Ident || t.kind == Tok::Integer) { bump(); return constant(t.text); }
        throw ParseError("expected a term", t.pos);
    }

    Atom parse_atom() {
        if (tok_.kind != Tok::Ident)
            throw ParseError("expected a predicate name", tok_.pos);
        if (tok_.text == "not")
            throw ParseError("'not' is reserved and cannot be a predicate", tok_.pos);
        Atom atom;
        atom.predicate = tok_.text;
        SourcePos at = tok_.pos;
        bump();
        if (tok_.kind == Tok::LParen) {
            bump();
            atom.terms.push_back(parse_term());
            while (tok_.kind == Tok::Comma) {
                bump();
                atom.terms.push_back(parse_term());
            }
            expect(Tok::RParen, "')'");
        }
        check_arity(atom, at);
        return atom;
    }

    void check_arity(const Atom& atom, SourcePos at) {
        auto [it, fresh] = arity_.emplace(atom.predicate, atom.arity());
        if (!fresh && it->second != atom.arity()) {
            std::ostringstream msg;
            msg << "predicate '" << atom.predicate << "' used with arity " << atom.arity()
                << " but previously with arity " << it->second;
            throw ParseError(msg.str(), at);
        }
    }

    void parse_body(Rule& rule) {
        while (true) {
            if (tok_.kind == Tok::Ident && tok_.text == "not") {
                bump();
                rule.negative_body.push_back(parse_atom());
            } else {
                rule.positive_body.push_back(parse_atom());
            }
            if (tok_.kind != Tok::Comma) break;
            bump();
        }
    }

    Rule parse_rule() {
        Rule rule;
        rule.pos = tok_.pos;
        if (tok_.kind == Tok::ColonDash) {
            bump();
            parse_body(rule);
        } else {
            rule.head = parse_atom();
            if (tok_.kind == Tok::ColonDash) {
                bump();
                parse_body(rule);
            }
        }
        expect(Tok::Dot, "'.'");

        SafetyReport safety = validate_safety(rule);
        if (!safety.ok) {
            std::ostringstream msg;
            msg << "unsafe rule: variable";
            if (safety.unsafe_variables.size() > 1) msg << "s";
            for (size_t i = 0; i < safety.unsafe_variables.size(); ++i)
                msg << (i ? ", " : " ") << safety.unsafe_variables[i];
            msg << " missing from the positive body";
            throw ParseError(msg.str(), rule.pos);
        }
        return rule;
    }

    Lexer lexer_;
    Token tok_;
    std::map<std::string, size_t> arity_;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).parse(); }

}  // namespace lazyasp
