#include <doctest.h>

#include "brcalc/monomial_ideal.hpp"
#include "brcalc/parse.hpp"
#include "oracles.hpp"

using namespace brcalc;

namespace {
RingPtr plane() { return make_ring(2); }

MonomialIdeal ideal2(const char* text) { return parse_ideal(text, plane()); }
} // namespace

TEST_CASE("minimalize drops divisible generators and sorts canonically") {
    RingPtr R = plane();
    std::vector<Monomial> gens{{3, 0}, {2, 4}, {1, 5}, {0, 7}, {3, 1}};
    MonomialIdeal I = minimalize(R, gens);
    // oracle: pairwise divisibility filter
    auto expected = oracles::naive_minimal(gens);
    CHECK(I.gens().size() == expected.size());
    CHECK(I == ideal2("x^3, x^2y^4, xy^5, y^7"));

    CHECK(minimalize(R, {{1, 0}, {0, 1}}) == ideal2("x, y"));
    CHECK(minimalize(R, {{2, 0}, {1, 0}}) == ideal2("x"));
}

TEST_CASE("minimalize flags the zero ideal and rejects bad dimensions") {
    RingPtr R = plane();
    CHECK(MonomialIdeal::zero(R).is_zero());
    CHECK(minimalize(R, {}).is_zero());
    CHECK_THROWS_AS(minimalize(R, {Monomial{1, 2, 3}}), std::invalid_argument);
    // generators inside the relations ideal are dropped
    RingPtr Q = make_ring(2, {Monomial{2, 0}});
    CHECK(minimalize(Q, {Monomial{3, 0}}).is_zero());
}

TEST_CASE("ideal_sum") {
    RingPtr R = plane();
    MonomialIdeal x2 = ideal2("x^2");
    MonomialIdeal m3 = ideal_power(ideal2("x, y"), 3);
    CHECK(ideal_sum(x2, m3) == ideal2("x^2, xy^2, y^3"));
    MonomialIdeal I = ideal2("x^3, y^2");
    CHECK(ideal_sum(I, I) == I);
    CHECK(ideal_sum(ideal2("x"), ideal2("y")) == ideal2("x, y"));
    RingPtr other = make_ring(3);
    CHECK_THROWS_AS(ideal_sum(I, MonomialIdeal::unit(other)), std::invalid_argument);
}

TEST_CASE("ideal_product") {
    CHECK(ideal_product(ideal2("x, y"), ideal2("x^2, y")) == ideal2("x^3, xy, y^2"));
    CHECK(ideal_product(ideal2("x, y"), ideal2("x, y")) == ideal2("x^2, xy, y^2"));
    CHECK(ideal_product(ideal2("x^3, y^7"), ideal2("x^3, y^7")) ==
          ideal2("x^6, x^3y^7, y^14"));
}

TEST_CASE("ideal_power") {
    MonomialIdeal m = ideal2("x, y");
    CHECK(ideal_power(m, 3) == ideal2("x^3, x^2y, xy^2, y^3"));
    CHECK(ideal_power(ideal2("x^2, y"), 2) == ideal2("x^4, x^2y, y^2"));
    CHECK(ideal_power(m, 0).is_unit());
    CHECK(colength(ideal_power(m, 0)) == 0);
    CHECK_THROWS_AS(ideal_power(m, -1), std::invalid_argument);
}

TEST_CASE("contains_monomial") {
    MonomialIdeal I = ideal2("x^3, xy, y^2");
    // no generator divides x^2 = (2,0); xy does divide x^2y
    CHECK_FALSE(contains_monomial(I, Monomial{2, 0}));
    CHECK(contains_monomial(I, Monomial{2, 1}));
    CHECK(contains_monomial(I, Monomial{3, 1}));
    CHECK_FALSE(contains_monomial(ideal2("x, y"), Monomial{0, 0}));
    CHECK_THROWS_AS(contains_monomial(I, Monomial{1, 1, 1}), std::invalid_argument);
    // relations count as inside
    RingPtr Q = make_ring(2, {Monomial{2, 0}});
    CHECK(contains_monomial(MonomialIdeal(Q, {Monomial{0, 3}}), Monomial{2, 0}));
}

TEST_CASE("is_finite_colength") {
    CHECK(is_finite_colength(ideal2("x^3, x^2y^4, xy^5, y^7")));
    CHECK_FALSE(is_finite_colength(ideal2("x")));
    CHECK(is_finite_colength(ideal2("x, y")));
    // relations can supply the missing pure power
    RingPtr Q = make_ring(2, {Monomial{2, 0}});
    CHECK(is_finite_colength(MonomialIdeal(Q, {Monomial{0, 1}})));
}

TEST_CASE("colength on the paper staircases") {
    MonomialIdeal m = ideal2("x, y");
    for (long n = 0; n <= 8; ++n)
        CHECK(colength(ideal_power(m, n)) == binomial(n + 1, 2));

    MonomialIdeal I45 = ideal2("x^3, x^2y^4, xy^5, y^7");
    CHECK(oracles::naive_colength(I45) == 16);
    CHECK(colength(I45) == 16);

    CHECK(colength(ideal2("x^2, y^3")) == 6);

    // k[x,y]/(x^2): l(R/(x^2,(x,y)^n)) = 2n - 1
    RingPtr Q = make_ring(2, {Monomial{2, 0}});
    MonomialIdeal mq(Q, {Monomial{1, 0}, Monomial{0, 1}});
    for (long n = 1; n <= 10; ++n)
        CHECK(colength(ideal_power(mq, n)) == 2 * n - 1);

    CHECK_THROWS_AS(colength(ideal2("x")), ComputeError);
    CHECK_THROWS_AS(colength(MonomialIdeal::zero(plane())), ComputeError);
}

TEST_CASE("quotient-ring colength counts standard monomials only") {
    RingPtr Q = make_ring(2, {Monomial{2, 0}});
    // R = k[x,y]/(x^2) modulo (y): basis {1, x}
    CHECK(colength(MonomialIdeal(Q, {Monomial{0, 1}})) == 2);
    // the whole artinian quotient k[x,y]/(x^2, y^3) has length 6
    RingPtr A = make_ring(2, {Monomial{2, 0}, Monomial{0, 3}});
    CHECK(A->krull_dim() == 0);
    CHECK(colength(MonomialIdeal::zero(A)) == 6);
}

TEST_CASE("canonical generator order is deterministic") {
    MonomialIdeal I = ideal2("y^2, xy, x^3");
    CHECK(to_string(I) == "x^3, xy, y^2");
    MonomialIdeal J = ideal2("x^3,   x^2*y^4, x y^5, y^7");
    CHECK(to_string(J) == "x^3, x^2y^4, xy^5, y^7");
}
