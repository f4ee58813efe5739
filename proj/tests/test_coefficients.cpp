#include "doctest.h"

#include "actionwin/field.hpp"
#include "actionwin/random.hpp"
#include "actionwin/rational.hpp"

using namespace actionwin;

TEST_CASE("field tags and primality") {
    CHECK(FieldSpec::parse("F2") == FieldSpec::f2());
    CHECK(FieldSpec::parse("F5") == FieldSpec::fp(5));
    CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
    CHECK(FieldSpec::fp(2) == FieldSpec::f2());
    CHECK(FieldSpec::fp(7).tag() == "F7");
    CHECK_THROWS_AS(FieldSpec::fp(6), Error);
    CHECK_THROWS_AS(FieldSpec::parse("F1"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("R"), Error);
}

TEST_CASE("closed-form arithmetic") {
    auto f5 = FieldSpec::fp(5);
    CHECK(Scalar(f5, 2).inv() == Scalar(f5, 3));
    auto f2 = FieldSpec::f2();
    CHECK((Scalar(f2, 1) + Scalar(f2, 1)).is_zero());
    auto q = FieldSpec::rationals();
    CHECK(Scalar(q, Rational(2, 3)) * Scalar(q, Rational(3, 4)) == Scalar(q, Rational(1, 2)));
    CHECK(Scalar(f5, -1).residue() == 4);
    CHECK(Scalar(f5, Rational(1, 2)) == Scalar(f5, 3));
    CHECK(Scalar::parse(q, "-3/6").to_string() == "-1/2");
}

TEST_CASE("arithmetic errors") {
    auto f5 = FieldSpec::fp(5);
    CHECK_THROWS_AS(Scalar::zero(f5).inv(), Error);
    try {
        (void)(Scalar(f5, 1) + Scalar(FieldSpec::f2(), 1));
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FieldMismatch);
    }
    CHECK_THROWS_AS(Scalar(f5, Rational(1, 5)), Error);
}

TEST_CASE("field axioms on random triples") {
    Rng rng(11);
    for (auto field : {FieldSpec::f2(), FieldSpec::fp(5), FieldSpec::fp(7), FieldSpec::rationals()}) {
        for (int i = 0; i < 2500; ++i) {
            Scalar x = random_scalar(field, rng), y = random_scalar(field, rng), z = random_scalar(field, rng);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x - x == Scalar::zero(field));
            if (!x.is_zero()) CHECK(x * x.inv() == Scalar::one(field));
            CHECK(Scalar(field, x.to_rational()) == x);
        }
    }
}

TEST_CASE("rational and action parsing") {
    CHECK(parse_rational("1.05") == Rational(21, 20));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(to_string(ratio(6, 4)) == "3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK(parse_action("inf").is_pos_inf());
    CHECK(parse_action("-inf").is_neg_inf());
    CHECK(Action(5) < Action::pos_inf());
    CHECK(Action::neg_inf() < Action(-100));
    CHECK(to_string(Action::pos_inf()) == "inf");
    CHECK(difference(Action::pos_inf(), Action(3)).is_pos_inf());
    CHECK(difference(Action(3), Action(1)) == Action(2));
}
