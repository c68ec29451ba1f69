#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "lazyasp/syntax.hpp"
#include "testutil.hpp"

using namespace lazyasp;

TEST_CASE("parses facts, rules and constraints") {
    Program p = parse_program("a.\n h :- b, not c.\n :- d, not e.\n");
    REQUIRE(p.rules.size() == 3);

    CHECK(p.rules[0].is_fact());
    CHECK(p.rules[0].head->predicate == "a");
    CHECK(p.rules[0].head->terms.empty());

    CHECK(p.rules[1].head->predicate == "h");
    REQUIRE(p.rules[1].positive_body.size() == 1);
    CHECK(p.rules[1].positive_body[0].predicate == "b");
    REQUIRE(p.rules[1].negative_body.size() == 1);
    CHECK(p.rules[1].negative_body[0].predicate == "c");

    CHECK(p.rules[2].is_constraint());
    CHECK(p.rules[2].positive_body[0].predicate == "d");
    CHECK(p.rules[2].negative_body[0].predicate == "e");
}

TEST_CASE("parses terms: constants, integers and variables") {
    Program p = parse_program("edge(a1, 7, X) :- node(X).");
    const Atom& head = *p.rules[0].head;
    REQUIRE(head.terms.size() == 3);
    CHECK(head.terms[0].kind == TermKind::Constant);
    CHECK(head.terms[0].name == "a1");
    CHECK(head.terms[1].kind == TermKind::Constant);
    CHECK(head.terms[1].name == "7");
    CHECK(head.terms[2].kind == TermKind::Variable);
    CHECK(head.terms[2].name == "X");
}

TEST_CASE("comments and whitespace are skipped") {
    Program p = parse_program("% intro\n  a.  % trailing\n\n% done\n");
    REQUIRE(p.rules.size() == 1);
    CHECK(p.rules[0].is_fact());
}

TEST_CASE("printing round-trips through the parser") {
    std::string text = "p(1,2).\nq(X) :- p(X,Y), not r(X).\n:- q(1), not r(2).\n";
    Program once = parse_program(text);
    Program twice = parse_program(once.to_string());
    CHECK(once.to_string() == twice.to_string());
    CHECK(once == twice);
}

TEST_CASE("random programs round-trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        std::string text = testutil::random_program_text(rng);
        Program parsed = parse_program(text);
        CHECK(parsed.to_string() == text);
    }
}

TEST_CASE("unsafe rules are rejected with the offending variable") {
    CHECK_THROWS_AS(parse_program("p(X) :- q(Y)."), ParseError);
    CHECK_THROWS_AS(parse_program("p(X)."), ParseError);
    CHECK_THROWS_AS(parse_program(":- q(Y), not p(X)."), ParseError);
    try {
        parse_program("p(X) :- q(Y).");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("X") != std::string::npos);
    }
    // Negative-body variables do not make a variable safe.
    CHECK_THROWS_AS(parse_program("p(X) :- not q(X)."), ParseError);
}

TEST_CASE("validate_safety reports unsafe variables") {
    Rule rule;
    Atom head;
    head.predicate = "p";
    head.terms.push_back(variable("X"));
    rule.head = head;
    SafetyReport report = validate_safety(rule);
    CHECK_FALSE(report.ok);
    REQUIRE(report.unsafe_variables.size() == 1);
    CHECK(report.unsafe_variables[0] == "X");

    Atom body;
    body.predicate = "q";
    body.terms.push_back(variable("X"));
    rule.positive_body.push_back(body);
    CHECK(validate_safety(rule).ok);
}

TEST_CASE("arity must be consistent per predicate") {
    CHECK_THROWS_AS(parse_program("p(1). p(1,2)."), ParseError);
    CHECK_THROWS_AS(parse_program("p. q :- p(1)."), ParseError);
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_program("a"), ParseError);          // missing dot
    CHECK_THROWS_AS(parse_program("a :- ."), ParseError);     // empty body
    CHECK_THROWS_AS(parse_program("a :- b c."), ParseError);  // missing comma
    CHECK_THROWS_AS(parse_program("p(."), ParseError);
    CHECK_THROWS_AS(parse_program("p()"), ParseError);
    CHECK_THROWS_AS(parse_program(":- not not a."), ParseError);
    CHECK_THROWS_AS(parse_program("X :- a."), ParseError);  // variable as atom
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_program("a.\nb :- c\nd.");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.pos().line >= 2);
    }
}

TEST_CASE("'not' needs an atom and cannot name a predicate") {
    CHECK_THROWS_AS(parse_program("a :- not."), ParseError);
    Program p = parse_program("a :- b, not c, not d.");
    CHECK(p.rules[0].negative_body.size() == 2);
}
