#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gbforge/distribution.hpp"
#include "gbforge/errors.hpp"
#include "gbforge/polymat.hpp"
#include "test_helpers.hpp"

using namespace gbforge;
using namespace gbforge::test;

namespace {

PolyMatrix random_matrix(const PolyRing& ring, std::uint32_t rows, std::uint32_t cols,
                         std::uint32_t deg, const CoeffDistribution& dist, Rng& rng) {
    PolyMatrix m(ring, rows, cols);
    for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t j = 0; j < cols; ++j)
            m.set(i, j, random_polynomial(ring, deg, dist, rng));
    return m;
}

} // namespace

TEST_CASE("identity and zero behave") {
    const PolyRing r2 = ring_q(2);
    Rng rng(1);
    const CoeffDistribution dist = CoeffDistribution::default_for(r2.field);
    const PolyMatrix m = random_matrix(r2, 3, 3, 2, dist, rng);
    CHECK(mat_mul(PolyMatrix::identity(r2, 3), m) == m);
    CHECK(mat_mul(m, PolyMatrix::identity(r2, 3)) == m);
    CHECK(mat_mul(PolyMatrix(r2, 3, 3), m).is_zero());
    CHECK_THROWS_AS(mat_mul(m, PolyMatrix(r2, 2, 2)), DimensionError);
    CHECK_THROWS_AS(PolyMatrix(r2, 0, 1), DimensionError);
}

TEST_CASE("elementary op semantics") {
    const PolyRing r2 = ring_q(2);
    std::vector<Polynomial> col{P(r2, "x1"), P(r2, "x2")};
    const PolyMatrix g = PolyMatrix::column(col);

    SUBCASE("permute swaps") {
        const PolyMatrix out = apply_elementary(ElementaryOp::permute(2, 0, 1), g);
        CHECK(out.at(0, 0) == P(r2, "x2"));
        CHECK(out.at(1, 0) == P(r2, "x1"));
    }
    SUBCASE("unit scale is identity") {
        const PolyMatrix out =
            apply_elementary(ElementaryOp::scale(2, 0, FieldElem::one(r2.field)), g);
        CHECK(out == g);
    }
    SUBCASE("row addition targets the stated row") {
        // on [E_n ; O] with n = 2, m = 3: row 3 += f * row 1 gives (f, 0)
        PolyMatrix stacked(r2, 3, 2);
        stacked.set(0, 0, P(r2, "1"));
        stacked.set(1, 1, P(r2, "1"));
        const PolyMatrix out =
            apply_elementary(ElementaryOp::add_row(3, 2, 0, P(r2, "x1^2 - 1")), stacked);
        CHECK(out.at(2, 0) == P(r2, "x1^2 - 1"));
        CHECK(out.at(2, 1).is_zero());
        CHECK(out.at(0, 0) == P(r2, "1"));
    }
    SUBCASE("application agrees with the materialized matrix product") {
        Rng rng(3);
        const CoeffDistribution dist = CoeffDistribution::default_for(r2.field);
        const PolyMatrix m = random_matrix(r2, 3, 2, 2, dist, rng);
        for (const ElementaryOp& op :
             {ElementaryOp::permute(3, 0, 2), ElementaryOp::scale(3, 1, FieldElem::rational(-3, 2)),
              ElementaryOp::add_row(3, 2, 0, P(r2, "x2^2 + 1"))}) {
            CHECK(apply_elementary(op, m) == mat_mul(op.materialize(r2), m));
        }
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(ElementaryOp::permute(3, 1, 1), ValidationError);
        CHECK_THROWS_AS(ElementaryOp::scale(3, 0, FieldElem::zero(r2.field)), ValidationError);
        CHECK_THROWS_AS(ElementaryOp::add_row(3, 1, 1, P(r2, "x1")), ValidationError);
        CHECK_THROWS_AS(apply_elementary(ElementaryOp::permute(4, 0, 1), g), DimensionError);
    }
}

TEST_CASE("inverse of elementary ops") {
    const PolyRing r2 = ring_q(2);
    Rng rng(17);
    const CoeffDistribution dist = CoeffDistribution::default_for(r2.field);
    const PolyMatrix m = random_matrix(r2, 3, 3, 1, dist, rng);
    for (const ElementaryOp& op :
         {ElementaryOp::permute(3, 0, 2), ElementaryOp::scale(3, 1, FieldElem::rational(5, 3)),
          ElementaryOp::add_row(3, 0, 2, P(r2, "x1*x2"))}) {
        const ElementaryOp inv = inverse_of_elementary(op);
        CHECK(apply_elementary(inv, apply_elementary(op, m)) == m);
        CHECK(apply_elementary(op, apply_elementary(inv, m)) == m);
    }
}

TEST_CASE("determinants") {
    const PolyRing r1 = ring_q(1);
    const PolyRing r2 = ring_q(2);

    SUBCASE("identity and transposition") {
        CHECK(mat_det(PolyMatrix::identity(r2, 3)) == P(r2, "1"));
        const PolyMatrix s = ElementaryOp::permute(3, 0, 2).materialize(r2);
        CHECK(mat_det(s) == P(r2, "-1"));
        CHECK(mat_det_cofactor(s) == P(r2, "-1"));
    }
    SUBCASE("2x2 golden: det([[x,1],[-1,x]]) = x^2+1") {
        PolyMatrix m(r1, 2, 2);
        m.set(0, 0, P(r1, "x1"));
        m.set(0, 1, P(r1, "1"));
        m.set(1, 0, P(r1, "-1"));
        m.set(1, 1, P(r1, "x1"));
        // cofactor by hand: x*x - 1*(-1)
        CHECK(mat_det(m) == P(r1, "x1^2 + 1"));
        CHECK(mat_det_cofactor(m) == P(r1, "x1^2 + 1"));
    }
    SUBCASE("bareiss equals cofactor on random matrices up to 4x4") {
        Rng rng(23);
        const CoeffDistribution dist = CoeffDistribution::default_for(r2.field);
        for (int t = 0; t < 120; ++t) {
            const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(4));
            const PolyMatrix m = random_matrix(r2, n, n, 2, dist, rng);
            REQUIRE(mat_det(m) == mat_det_cofactor(m));
        }
    }
    SUBCASE("zero column short-circuits") {
        PolyMatrix m(r2, 2, 2);
        m.set(0, 1, P(r2, "x1"));
        m.set(1, 1, P(r2, "x2"));
        CHECK(mat_det(m).is_zero());
    }
}

TEST_CASE("product of elementary matrices has a nonzero constant determinant") {
    const PolyRing r2 = ring_q(2);
    const CoeffDistribution dist = CoeffDistribution::default_for(r2.field);
    Rng rng(41);
    for (int t = 0; t < 60; ++t) {
        const std::uint32_t m = 2 + static_cast<std::uint32_t>(rng.below(2)); // 2 or 3
        PolyMatrix acc = PolyMatrix::identity(r2, m);
        FieldElem expected_det = FieldElem::one(r2.field);
        const std::uint32_t s = 1 + static_cast<std::uint32_t>(rng.below(6));
        for (std::uint32_t k = 0; k < s; ++k) {
            ElementaryOp op = [&] {
                switch (rng.below(3)) {
                    case 0: {
                        const auto i = static_cast<std::uint32_t>(rng.below(m));
                        auto j = static_cast<std::uint32_t>(rng.below(m - 1));
                        if (j >= i) ++j;
                        return ElementaryOp::permute(m, i, j);
                    }
                    case 1:
                        return ElementaryOp::scale(m, static_cast<std::uint32_t>(rng.below(m)),
                                                   dist.sample_nonzero(r2.field, rng));
                    default: {
                        const auto i = static_cast<std::uint32_t>(rng.below(m));
                        auto j = static_cast<std::uint32_t>(rng.below(m - 1));
                        if (j >= i) ++j;
                        return ElementaryOp::add_row(m, i, j,
                                                     random_polynomial(r2, 1, dist, rng));
                    }
                }
            }();
            expected_det = expected_det * op.determinant(r2.field);
            acc = apply_elementary(op, acc);
        }
        const Polynomial det = mat_det(acc);
        REQUIRE(det.is_constant());
        REQUIRE_FALSE(det.is_zero());
        REQUIRE(det == Polynomial::constant(r2, expected_det));
    }
}

TEST_CASE("left inverse from trace") {
    const PolyRing r2 = ring_q(2);
    SUBCASE("empty trace gives (E_n | O)") {
        const PolyMatrix b = left_inverse_from_trace({}, 3, 2, r2);
        PolyMatrix expect(r2, 2, 3);
        expect.set(0, 0, P(r2, "1"));
        expect.set(1, 1, P(r2, "1"));
        CHECK(b == expect);
    }
    SUBCASE("row addition below row n is annihilated") {
        const std::vector<ElementaryOp> ops{ElementaryOp::add_row(3, 2, 0, P(r2, "x1^2"))};
        const PolyMatrix b = left_inverse_from_trace(ops, 3, 2, r2);
        PolyMatrix expect(r2, 2, 3);
        expect.set(0, 0, P(r2, "1"));
        expect.set(1, 1, P(r2, "1"));
        CHECK(b == expect);
        CHECK(mat_mul(b, matrix_from_trace(ops, 3, 2, r2)) == PolyMatrix::identity(r2, 2));
    }
    SUBCASE("random traces satisfy B A = E_n exactly") {
        const CoeffDistribution dist = CoeffDistribution::default_for(r2.field);
        Rng rng(57);
        for (int t = 0; t < 80; ++t) {
            const std::uint32_t m = 3 + static_cast<std::uint32_t>(rng.below(2));
            const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(m));
            std::vector<ElementaryOp> ops;
            const std::uint32_t s = static_cast<std::uint32_t>(rng.below(9));
            for (std::uint32_t k = 0; k < s; ++k) {
                const auto i = static_cast<std::uint32_t>(rng.below(m));
                auto j = static_cast<std::uint32_t>(rng.below(m - 1));
                if (j >= i) ++j;
                switch (rng.below(3)) {
                    case 0: ops.push_back(ElementaryOp::permute(m, i, j)); break;
                    case 1:
                        ops.push_back(
                            ElementaryOp::scale(m, i, dist.sample_nonzero(r2.field, rng)));
                        break;
                    default:
                        ops.push_back(
                            ElementaryOp::add_row(m, i, j, random_polynomial(r2, 2, dist, rng)));
                }
            }
            const PolyMatrix a = matrix_from_trace(ops, m, n, r2);
            const PolyMatrix b = left_inverse_from_trace(ops, m, n, r2);
            REQUIRE(mat_mul(b, a) == PolyMatrix::identity(r2, n));
        }
    }
}

TEST_CASE("block split round trip") {
    const PolyRing r2 = ring_q(2);
    const CoeffDistribution dist = CoeffDistribution::default_for(r2.field);
    Rng rng(3);
    const PolyMatrix b = random_matrix(r2, 2, 5, 1, dist, rng);
    const PolyMatrix a = random_matrix(r2, 5, 2, 1, dist, rng);
    const BlockSplit blocks = BlockSplit::of(b, a);
    CHECK(blocks.b1.rows() == 2);
    CHECK(blocks.b2.cols() == 3);
    CHECK(blocks.a2.rows() == 3);
    CHECK(blocks.reassemble_b() == b);
    CHECK(blocks.reassemble_a() == a);
}

TEST_CASE("unitriangular inverse") {
    const PolyRing r2 = ring_q(2);
    PolyMatrix u = PolyMatrix::identity(r2, 3);
    u.set(0, 1, P(r2, "x1"));
    u.set(0, 2, P(r2, "x2^2 - 1"));
    u.set(1, 2, P(r2, "2*x1*x2"));
    const PolyMatrix inv = invert_upper_unitriangular(u);
    CHECK(mat_mul(u, inv) == PolyMatrix::identity(r2, 3));
    CHECK(mat_mul(inv, u) == PolyMatrix::identity(r2, 3));
    PolyMatrix bad = u;
    bad.set(2, 2, P(r2, "x1"));
    CHECK_THROWS_AS(invert_upper_unitriangular(bad), DomainError);
}

TEST_CASE("bruhat composition") {
    const PolyRing r2 = ring_q(2);
    SUBCASE("all-identity factors give the stacked identity") {
        const std::vector<std::uint32_t> id{0, 1, 2};
        const BruhatFactors f = bruhat_compose(PolyMatrix::identity(r2, 3), id,
                                               PolyMatrix::identity(r2, 2));
        PolyMatrix expect(r2, 3, 2);
        expect.set(0, 0, P(r2, "1"));
        expect.set(1, 1, P(r2, "1"));
        CHECK(f.a == expect);
    }
    SUBCASE("square case: A = U1 and B = U1^-1") {
        PolyMatrix u1 = PolyMatrix::identity(r2, 2);
        u1.set(0, 1, P(r2, "x1^2 - x2"));
        const std::vector<std::uint32_t> id{0, 1};
        const BruhatFactors f = bruhat_compose(u1, id, PolyMatrix::identity(r2, 2));
        CHECK(f.a == u1);
        CHECK(f.b == invert_upper_unitriangular(u1));
    }
    SUBCASE("random unitriangular factors always give B A = E_n") {
        const CoeffDistribution dist = CoeffDistribution::default_for(r2.field);
        Rng rng(11);
        for (int t = 0; t < 50; ++t) {
            PolyMatrix u1 = PolyMatrix::identity(r2, 3);
            for (std::uint32_t i = 0; i < 3; ++i)
                for (std::uint32_t j = i + 1; j < 3; ++j)
                    u1.set(i, j, random_polynomial(r2, 2, dist, rng));
            PolyMatrix u2 = PolyMatrix::identity(r2, 2);
            u2.set(0, 1, random_polynomial(r2, 2, dist, rng));
            std::vector<std::uint32_t> perm{0, 1, 2};
            for (std::uint32_t i = 3; i-- > 1;) {
                const auto j = static_cast<std::uint32_t>(rng.below(i + 1));
                std::swap(perm[i], perm[j]);
            }
            const BruhatFactors f = bruhat_compose(u1, perm, u2);
            REQUIRE(mat_mul(f.b, f.a) == PolyMatrix::identity(r2, 2));
        }
    }
    SUBCASE("non-unitriangular input is rejected") {
        PolyMatrix u1 = PolyMatrix::identity(r2, 3);
        u1.set(1, 0, P(r2, "x1"));
        const std::vector<std::uint32_t> id{0, 1, 2};
        CHECK_THROWS_AS(bruhat_compose(u1, id, PolyMatrix::identity(r2, 2)), DomainError);
        const std::vector<std::uint32_t> bad{0, 0, 2};
        CHECK_THROWS_AS(bruhat_compose(PolyMatrix::identity(r2, 3), bad,
                                       PolyMatrix::identity(r2, 2)),
                        ValidationError);
    }
}

TEST_CASE("adjugate inverse for constant determinants") {
    const PolyRing r2 = ring_q(2);
    PolyMatrix m = PolyMatrix::identity(r2, 2);
    m.set(0, 1, P(r2, "x1"));
    m.set(1, 0, P(r2, "0"));
    m.set(1, 1, P(r2, "2"));
    const PolyMatrix inv = inverse_constant_det(m);
    CHECK(mat_mul(m, inv) == PolyMatrix::identity(r2, 2));
    PolyMatrix sing(r2, 2, 2);
    sing.set(0, 0, P(r2, "x1"));
    sing.set(1, 1, P(r2, "x1"));
    CHECK_THROWS_AS(inverse_constant_det(sing), DomainError);
}
