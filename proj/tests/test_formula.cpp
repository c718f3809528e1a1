#include "doctest.h"

#include "qpg/formula.hpp"
#include "qpg/verify.hpp"

using namespace qpg;

TEST_CASE("qdimacs parsing follows the format") {
    QbfFormula f = parse_qdimacs("p cnf 2 1\ne 1 0\na 2 0\n1 2 0");
    REQUIRE(f.prefix.size() == 2);
    CHECK(f.prefix[0] == PrefixEntry{1, Quantifier::Exists});
    CHECK(f.prefix[1] == PrefixEntry{2, Quantifier::Forall});
    REQUIRE(f.matrix.clauses.size() == 1);
    CHECK(f.matrix.clauses[0].lits == std::vector<Lit>{1, 2});
}

TEST_CASE("free variables become outermost existentials") {
    QbfFormula f = parse_qdimacs("p cnf 1 1\n1 -1 0");
    REQUIRE(f.prefix.size() == 1);
    CHECK(f.prefix[0] == PrefixEntry{1, Quantifier::Exists});
    REQUIRE(f.matrix.clauses.size() == 1);
    CHECK(f.matrix.clauses[0].tautological());

    QbfFormula g = parse_qdimacs("p cnf 3 1\na 2 0\n2 -3 0");
    // 1 and 3 are free: bound exists-first in id order, before the prefix.
    CHECK(g.prefix[0] == PrefixEntry{1, Quantifier::Exists});
    CHECK(g.prefix[1] == PrefixEntry{3, Quantifier::Exists});
    CHECK(g.prefix[2] == PrefixEntry{2, Quantifier::Forall});
}

TEST_CASE("qdimacs parse errors") {
    CHECK_THROWS_AS(parse_qdimacs("p cnf 1 1\n2 0"), ParseError);           // literal out of range
    CHECK_THROWS_AS(parse_qdimacs("p cnf 1 1\n1"), ParseError);             // missing 0
    CHECK_THROWS_AS(parse_qdimacs("p cnf 2 1\ne 1 0\ne 1 0\n1 0"), ParseError); // double quantification
    CHECK_THROWS_AS(parse_qdimacs("p dnf 1 1\n1 0"), ParseError);           // malformed header
    CHECK_THROWS_AS(parse_qdimacs("1 0"), ParseError);                      // no header
    CHECK_THROWS_AS(parse_qdimacs("p cnf 1 1\n1 0 7"), ParseError);         // trailing tokens
}

TEST_CASE("emit produces the canonical form") {
    QbfFormula f;
    f.matrix.num_vars = 1;
    f.prefix = {{1, Quantifier::Exists}};
    f.matrix.clauses = {Clause({1})};
    CHECK(emit_qdimacs(f) == "p cnf 1 1\ne 1 0\n1 0\n");

    // A tautological clause is emitted verbatim, no simplification.
    QbfFormula t = parse_qdimacs("p cnf 1 1\ne 1 0\n1 -1 0");
    CHECK(emit_qdimacs(t) == "p cnf 1 1\ne 1 0\n1 -1 0\n");
}

TEST_CASE("parse then emit is the identity on generated formulas") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        QbfFormula f = gen_random_qbf(seed, 2 + seed % 8, seed % 7, 3, 3, QuantPattern::Random);
        std::string text = emit_qdimacs(f);
        QbfFormula g = parse_qdimacs(text);
        CHECK(g == f);
        CHECK(emit_qdimacs(g) == text);
    }
}

TEST_CASE("degree profile counts clause occurrences") {
    QbfFormula f = parse_qdimacs("p cnf 2 3\n1 2 0\n-1 2 0\n1 0");
    DegreeProfile p = degree_profile(f.matrix);
    CHECK(p.degree[1] == 3);
    CHECK(p.degree[2] == 2);
    CHECK(p.max_degree == 3);
    CHECK(p.rank == 2);

    DegreeProfile empty = degree_profile(CnfMatrix{});
    CHECK(empty.max_degree == 0);
    CHECK(empty.rank == 0);
    CHECK(empty.is_uniform(3));
}

TEST_CASE("a variable with both polarities in one clause counts once") {
    CnfMatrix m{1, {Clause({1, -1})}};
    CHECK(degree_profile(m).degree[1] == 1);
}

TEST_CASE("degree sum equals sum of distinct-variable counts") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        QbfFormula f = gen_random_qbf(seed, 2 + seed % 8, 1 + seed % 8, 3, 4, QuantPattern::Random);
        DegreeProfile p = degree_profile(f.matrix);
        long lhs = 0;
        for (Var v = 1; v <= f.matrix.num_vars; ++v) lhs += p.degree[static_cast<size_t>(v)];
        long rhs = 0;
        for (const Clause& c : f.matrix.clauses) rhs += static_cast<long>(c.variables().size());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("adding k copies of a clause multiplies its degrees by k") {
    QbfFormula f = parse_qdimacs("p cnf 3 2\n1 2 0\n-2 3 0");
    CnfMatrix tripled = f.matrix;
    for (int copy = 0; copy < 2; ++copy)
        for (const Clause& c : f.matrix.clauses) tripled.clauses.push_back(c);
    DegreeProfile base = degree_profile(f.matrix);
    DegreeProfile big = degree_profile(tripled);
    for (Var v = 1; v <= 3; ++v)
        CHECK(big.degree[static_cast<size_t>(v)] == 3 * base.degree[static_cast<size_t>(v)]);
}

TEST_CASE("check_class reports violations by name") {
    QbfFormula f = parse_qdimacs("p cnf 4 1\ne 1 2 3 4 0\n1 2 3 4 0");
    ClassCheck c = check_class(f, 3, 3);
    CHECK(!c.ok);
    REQUIRE(!c.violations.empty());
    CHECK(c.violations[0].find("clause 1") != std::string::npos);

    QbfFormula empty = parse_qdimacs("p cnf 0 0");
    CHECK(check_class(empty, 1, 1, true, true).ok);
}

TEST_CASE("psat format round trip and validation") {
    std::string text = "p psat 4 2 2\nd 1 2 0\nd 3 4 0\n1 -3 0\n2 4 0\n";
    PairedSatInstance inst = parse_psat(text);
    CHECK(inst.pairs.size() == 2);
    CHECK(emit_psat(inst) == text);

    CHECK_THROWS_AS(parse_psat("p psat 4 0 2\nd 1 2 0\nd 1 3 0"), ParseError); // var in two pairs
    CHECK_THROWS_AS(parse_psat("p psat 4 0 1\nd 1 2 0"), ParseError);          // 3,4 uncovered
    CHECK_THROWS_AS(parse_psat("p psat 2 1 1\nd 1 2 0\n3 0"), ParseError);     // literal range
}
