#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gbforge/distribution.hpp"
#include "gbforge/division.hpp"
#include "gbforge/errors.hpp"
#include "test_helpers.hpp"

using namespace gbforge;
using namespace gbforge::test;

TEST_CASE("self-division") {
    const PolyRing r2 = ring_q(2);
    const Polynomial g = P(r2, "x1^2*x2 - 3*x2");
    const std::vector<Polynomial> divs{g};
    const DivisionResult res = divide(g, divs, MonomialOrder::lex());
    CHECK(res.quotients[0] == Polynomial::constant(r2, 1));
    CHECK(res.remainder.is_zero());
}

TEST_CASE("no leading-term divisibility leaves the dividend in the remainder") {
    const PolyRing r2 = ring_q(2);
    const std::vector<Polynomial> divs{P(r2, "x2")};
    const DivisionResult res = divide(P(r2, "x1"), divs, MonomialOrder::lex());
    CHECK(res.quotients[0].is_zero());
    CHECK(res.remainder == P(r2, "x1"));
}

TEST_CASE("textbook two-divisor run") {
    // Hand-run of the division algorithm fixed before implementation:
    // x1^2 x2 + x1 x2^2 + x2^2 by (x1 x2 - 1, x2^2 - 1) under lex gives
    // q1 = x1 + x2, q2 = 1, remainder x1 + x2 + 1.
    const PolyRing r2 = ring_q(2);
    const Polynomial f = P(r2, "x1^2*x2 + x1*x2^2 + x2^2");
    const std::vector<Polynomial> divs{P(r2, "x1*x2 - 1"), P(r2, "x2^2 - 1")};
    const DivisionResult res = divide(f, divs, MonomialOrder::lex());
    CHECK(res.quotients[0] == P(r2, "x1 + x2"));
    CHECK(res.quotients[1] == P(r2, "1"));
    CHECK(res.remainder == P(r2, "x1 + x2 + 1"));
    // reconstruction identity, independently of the loop
    Polynomial recon = res.remainder;
    for (std::size_t i = 0; i < divs.size(); ++i) recon += res.quotients[i] * divs[i];
    CHECK(recon == f);
}

TEST_CASE("zero divisor and empty list are errors") {
    const PolyRing r2 = ring_q(2);
    const std::vector<Polynomial> bad{P(r2, "x1"), Polynomial::zero(r2)};
    CHECK_THROWS_AS(divide(P(r2, "x1"), bad, MonomialOrder::lex()), DomainError);
    CHECK_THROWS_AS(divide(P(r2, "x1"), std::vector<Polynomial>{}, MonomialOrder::lex()),
                    DomainError);
}

TEST_CASE("division reconstruction on random inputs") {
    for (const PolyRing& ring : {ring_q(2), ring_fp(2, 101)}) {
        const CoeffDistribution dist = CoeffDistribution::default_for(ring.field);
        const MonomialOrder lex = MonomialOrder::lex();
        Rng rng(31);
        int done = 0;
        while (done < 400) {
            const Polynomial f = random_polynomial(ring, 4, dist, rng);
            std::vector<Polynomial> divs;
            const int k = 1 + static_cast<int>(rng.below(3));
            for (int i = 0; i < k; ++i)
                divs.push_back(random_nonzero_polynomial(ring, 2, dist, rng));
            ++done;
            const DivisionResult res = divide(f, divs, lex);
            Polynomial recon = res.remainder;
            for (std::size_t i = 0; i < divs.size(); ++i) recon += res.quotients[i] * divs[i];
            REQUIRE(recon == f);
            // no remainder monomial is divisible by any divisor leading monomial
            for (const auto& [mono, c] : res.remainder.terms())
                for (const auto& d : divs)
                    REQUIRE_FALSE(d.leading_term(lex).first.divides(mono));
        }
    }
}

TEST_CASE("quotients respect the degree bound of the division invariant") {
    const PolyRing r2 = ring_q(2);
    const MonomialOrder lex = MonomialOrder::lex();
    const CoeffDistribution dist = CoeffDistribution::default_for(r2.field);
    Rng rng(5);
    int done = 0;
    while (done < 200) {
        const Polynomial f = random_polynomial(r2, 4, dist, rng);
        if (f.is_zero()) continue;
        const Polynomial d = random_nonzero_polynomial(r2, 2, dist, rng);
        ++done;
        const std::vector<Polynomial> divs{d};
        const DivisionResult res = divide(f, divs, lex);
        if (!res.quotients[0].is_zero()) {
            // LT(q_i d_i) never exceeds LT(f) under the division loop invariant
            const auto lt_f = f.leading_term(lex).first;
            const auto lt_qd = (res.quotients[0] * d).leading_term(lex).first;
            REQUIRE(monomial_cmp(lex, lt_qd, lt_f) != Ordering::GT);
        }
    }
}

TEST_CASE("exact division helpers") {
    const PolyRing r2 = ring_q(2);
    const Polynomial f = P(r2, "x1^2 - x2^2");
    CHECK(divide_exact(f, P(r2, "x1 - x2")) == P(r2, "x1 + x2"));
    CHECK(divides_poly(P(r2, "x1 + x2"), f));
    CHECK_FALSE(divides_poly(P(r2, "x1 + 1"), f));
    CHECK_THROWS_AS(divide_exact(f, P(r2, "x1 + 1")), DomainError);
    CHECK_THROWS_AS(divide_exact(f, Polynomial::zero(r2)), DomainError);
}
