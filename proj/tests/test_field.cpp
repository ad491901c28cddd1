#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gbforge/errors.hpp"
#include "gbforge/field.hpp"
#include "gbforge/rng.hpp"

using namespace gbforge;

TEST_CASE("prime validation") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(32003));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(32001)); // 3 * 10667
    CHECK_THROWS_AS(FieldConfig::prime_field(10), ValidationError);
    CHECK_NOTHROW(FieldConfig::prime_field(1000003));
}

TEST_CASE("rational arithmetic is exact and canonical") {
    const FieldConfig q = FieldConfig::rationals();
    const FieldElem a = FieldElem::rational(1, 3);
    const FieldElem b = FieldElem::rational(2, 3);
    CHECK((a + b).is_one());
    CHECK((a + b).str() == "1");
    CHECK(FieldElem::rational(2, 4).str() == "1/2");
    CHECK(FieldElem::rational(-2, 4).str() == "-1/2");
    CHECK((a - a).is_zero());
    CHECK((a * b).str() == "2/9");
    CHECK((a / b).str() == "1/2");
    CHECK_THROWS_AS(FieldElem::zero(q).inverse(), DomainError);
    CHECK(FieldElem::rational(-7, 2).is_negative());
    CHECK(FieldElem::rational(-7, 2).abs().str() == "7/2");
}

TEST_CASE("prime field arithmetic") {
    const FieldConfig f7 = FieldConfig::prime_field(7);
    const FieldElem a = FieldElem::from_integer(f7, 10); // 3
    const FieldElem b = FieldElem::from_integer(f7, -1); // 6
    CHECK(a.str() == "3");
    CHECK(b.str() == "6");
    CHECK((a + b).str() == "2");
    CHECK((a * b).str() == "4");
    CHECK((a / b).str() == "4"); // 3 * 6^-1 = 3 * 6 = 18 = 4 mod 7
    CHECK((-b).str() == "1");
    CHECK(a.inverse().str() == "5"); // 3 * 5 = 15 = 1 mod 7
    CHECK_FALSE(b.is_negative());    // residues are non-negative by convention
}

TEST_CASE("field mismatch is rejected") {
    const FieldElem q = FieldElem::rational(1, 2);
    const FieldElem f = FieldElem::residue(1, 7);
    CHECK_THROWS_AS((void)(q + f), RingMismatchError);
    CHECK_THROWS_AS((void)(FieldElem::residue(1, 7) * FieldElem::residue(1, 11)),
                    RingMismatchError);
}

TEST_CASE("coefficient parsing") {
    const FieldConfig q = FieldConfig::rationals();
    CHECK(FieldElem::parse(q, "3/4").str() == "3/4");
    CHECK(FieldElem::parse(q, "-3/4").str() == "-3/4");
    CHECK(FieldElem::parse(q, "6/4").str() == "3/2");
    CHECK(FieldElem::parse(q, "12345678901234567890").str() == "12345678901234567890");
    CHECK_THROWS_AS(FieldElem::parse(q, "3/"), ParseError);
    CHECK_THROWS_AS(FieldElem::parse(q, "a"), ParseError);

    const FieldConfig f7 = FieldConfig::prime_field(7);
    CHECK(FieldElem::parse(f7, "10").str() == "3");
    CHECK(FieldElem::parse(f7, "-1").str() == "6");
    CHECK_THROWS_AS(FieldElem::parse(f7, "1/2"), ParseError);
}

TEST_CASE("bit length") {
    CHECK(FieldElem::rational(0, 1).bit_length() == 0);
    CHECK(FieldElem::rational(5, 1).bit_length() == 3);
    CHECK(FieldElem::rational(1, 8).bit_length() == 4);
    CHECK(FieldElem::residue(5, 7).bit_length() == 3);
}

TEST_CASE("rng determinism and bounds") {
    Rng a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    bool differs = false;
    Rng a2(42);
    for (int i = 0; i < 10; ++i) differs |= a2.next_u64() != c.next_u64();
    CHECK(differs);

    Rng r(7);
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t v = r.int_in(-5, 5);
        CHECK(v >= -5);
        CHECK(v <= 5);
    }
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(1, 5) == derive_seed(1, 5));
}
