#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "bunkbed/cuts.hpp"
#include "bunkbed/errors.hpp"
#include "bunkbed/poly.hpp"
#include "bunkbed/rng.hpp"

using namespace bunkbed;

namespace {
const BunkbedGraph kK2{Graph(2, {{0, 1}})};

Monomial random_monomial(SampleStream& rng, int edge_vars, int vertex_vars) {
    Monomial m;
    for (int i = 0; i < edge_vars; ++i) {
        switch (rng.below(3)) {
            case 1: m.h1 |= 1ULL << i; break;
            case 2: m.h1 |= 1ULL << i; m.h2 |= 1ULL << i; break;
            default: break;
        }
    }
    for (int x = 0; x < vertex_vars; ++x)
        if (rng.below(2)) m.v |= 1ULL << x;
    return m;
}
} // namespace

TEST_CASE("event monomials on K2") {
    // boundary of {u-,v-} is the two verticals
    std::vector<Cut> a{Cut{0b0011}};
    Monomial m = event_monomial(kK2, a);
    CHECK(m == Monomial{0, 0, 0b11});
    CHECK(monomial_text(m, kK2) == "V(0)*V(1)");

    // boundary of {u-,v+} contains both horizontal copies: exponent 2
    std::vector<Cut> b{Cut{0b1001}};
    Monomial mb = event_monomial(kK2, b);
    CHECK(mb == Monomial{1, 1, 0b11});
    CHECK(monomial_text(mb, kK2) == "V(0)*V(1)*H(0,1)^2");

    // union of two boundaries, recomputed here straight from the definition
    std::vector<Cut> pair{Cut{0b0011}, Cut{0b0111}};
    std::uint64_t expected_union = 0;
    for (Cut c : pair)
        for (int e = 0; e < kK2.edge_count(); ++e) {
            const BBEdge& edge = kK2.edges()[static_cast<std::size_t>(e)];
            if (c.contains(edge.a) != c.contains(edge.b)) expected_union |= 1ULL << e;
        }
    Monomial mp = event_monomial(kK2, pair);
    CHECK(mp == Monomial::from_edge_mask(kK2, expected_union));
    CHECK(monomial_text(mp, kK2) == "V(0)*V(1)*H(0,1)"); // exponent 1: only the plus copy

    std::vector<Cut> empty;
    CHECK_THROWS_AS(event_monomial(kK2, empty), ValidationError);
}

TEST_CASE("strict division") {
    Monomial vv{0, 0, 0b11};
    Monomial vvh2{1, 1, 0b11};
    CHECK(strictly_divides(vv, vvh2));
    CHECK_FALSE(strictly_divides(vv, vv));
    CHECK_FALSE(strictly_divides(Monomial{1, 0, 0}, Monomial{0, 0, 1}));
    CHECK(strictly_divides(Monomial{}, vv)); // 1 divides everything else
}

TEST_CASE("strict division is a strict partial order") {
    SampleStream rng(21, 0);
    for (int trial = 0; trial < 500; ++trial) {
        Monomial a = random_monomial(rng, 4, 3);
        Monomial b = random_monomial(rng, 4, 3);
        Monomial c = random_monomial(rng, 4, 3);
        CHECK_FALSE(strictly_divides(a, a));
        if (strictly_divides(a, b)) CHECK_FALSE(strictly_divides(b, a));
        if (strictly_divides(a, b) && strictly_divides(b, c)) CHECK(strictly_divides(a, c));
    }
}

TEST_CASE("monomial product and quotient") {
    SampleStream rng(22, 0);
    for (int trial = 0; trial < 500; ++trial) {
        Monomial b = random_monomial(rng, 4, 3);
        Monomial a = random_monomial(rng, 4, 3);
        if (!a.divides(b)) continue;
        Monomial q = b.quotient(a);
        CHECK(q.times(a) == b);
        for (int i = 0; i < 4; ++i) {
            VariableId w{VariableId::Kind::edge, i};
            CHECK(q.exponent(w) == b.exponent(w) - a.exponent(w));
        }
    }
    CHECK_THROWS_AS(Monomial({1, 1, 0}).times(Monomial{1, 0, 0}), ValidationError);
    CHECK_THROWS_AS(Monomial({0, 0, 1}).quotient(Monomial{0, 0, 2}), ValidationError);
}

TEST_CASE("polynomial arithmetic drops zeros") {
    Monomial m1{1, 0, 0}, m2{0, 0, 1};
    Polynomial p = add(Polynomial::term(m1, 1), Polynomial::term(m2, 3));
    CHECK(subtract(p, p).is_zero());

    Polynomial two = Polynomial::term(m1, 2);
    CHECK(add(two, negate(two)).is_zero());

    Polynomial diff = subtract(p, Polynomial::term(m2, 3));
    CHECK(diff == Polynomial::term(m1, 1));
    CHECK(diff.term_count() == 1);
}

TEST_CASE("evaluation") {
    Polynomial zero;
    SymmetricAssignment half({Rat(1, 2)}, {Rat(1, 2), Rat(1, 2)});
    CHECK(evaluate(zero, half) == Rat(0));

    Polynomial vv = Polynomial::term(Monomial{0, 0, 0b11}, 1);
    CHECK(evaluate(vv, half) == Rat(1, 4));

    // missing variable
    Polynomial far = Polynomial::term(Monomial{0, 0, 0b100}, 1);
    CHECK_THROWS_AS(evaluate(far, half), ValidationError);
}

TEST_CASE("evaluation is additive and respects scalars") {
    SampleStream rng(23, 0);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p1, p2;
        for (int k = 0; k < 6; ++k) {
            p1.add_term(random_monomial(rng, 3, 2), Int(rng.below(9)) - 4);
            p2.add_term(random_monomial(rng, 3, 2), Int(rng.below(9)) - 4);
        }
        std::vector<Rat> h(3), v(2);
        for (Rat& q : h) q = Rat(Int(rng.below(8)), 7);
        for (Rat& q : v) q = Rat(Int(rng.below(8)), 7);
        SymmetricAssignment a(h, v);
        CHECK(evaluate(add(p1, p2), a) == evaluate(p1, a) + evaluate(p2, a));
        CHECK(evaluate(negate(p1), a) == -evaluate(p1, a));
    }
}

TEST_CASE("canonical text") {
    Polynomial p;
    p.add_term(Monomial{1, 1, 0b11}, 1); // V(0)*V(1)*H(0,1)^2
    p.add_term(Monomial{1, 0, 0}, -2);   // H(0,1)
    CHECK(canonical_text(p, kK2) == "-2*H(0,1) +1*V(0)*V(1)*H(0,1)^2");
    CHECK(canonical_text(Polynomial{}, kK2) == "0");
    CHECK(canonical_text(Polynomial::constant(3), kK2) == "+3");
}

TEST_CASE("univariate text and evaluation") {
    UniPoly p({Int(0), Int(0), Int(0), Int(1), Int(-2), Int(1)});
    CHECK(p.text() == "q^3 - 2q^4 + q^5");
    CHECK(p(Rat(1, 2)) == Rat(1, 32));

    // same thing in factored form
    UniPoly factored = one_minus_q_power(2, 3);
    CHECK(factored == p);
    CHECK(factored(Rat(1, 2)) == Rat(1, 32));

    CHECK(UniPoly{}.text() == "0");
    CHECK(UniPoly({Int(-1), Int(1)}).text() == "-1 + q");
    CHECK(UniPoly({Int(2)}).text() == "2");
}

TEST_CASE("diagonal restriction sums coefficients by total degree") {
    Polynomial p;
    p.add_term(Monomial{1, 1, 0b11}, 1); // degree 4
    p.add_term(Monomial{0, 0, 0b11}, 5); // degree 2
    p.add_term(Monomial{1, 0, 0b10}, -5); // degree 2
    UniPoly d = diagonal_restriction(p);
    CHECK(d == UniPoly({Int(0), Int(0), Int(0), Int(0), Int(1)}));
}
