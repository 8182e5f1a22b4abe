#include <doctest.h>

#include <random>

#include "qgwa/field.hpp"

using namespace qgwa;

namespace {

FieldElement random_element(const FieldSpec& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    FieldElement e = FieldElement::zero(f);
    FieldElement z = f.kind == FieldSpec::Kind::Cyclotomic ? FieldElement::zeta(f)
                                                           : FieldElement::one(f);
    for (long k = 0; k < f.degree(); ++k) {
        Rational c(num(rng), den(rng));
        e = e + FieldElement::from_rational(f, c) * z.pow(k);
    }
    return e;
}

std::vector<Integer> int_poly(std::initializer_list<long> asc) {
    std::vector<Integer> v;
    for (long c : asc) v.emplace_back(c);
    return v;
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the classical table") {
    CHECK(cyclotomic_polynomial(1) == int_poly({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == int_poly({1, 1}));
    CHECK(cyclotomic_polynomial(3) == int_poly({1, 1, 1}));
    CHECK(cyclotomic_polynomial(4) == int_poly({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == int_poly({1, -1, 1}));
    CHECK(cyclotomic_polynomial(8) == int_poly({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == int_poly({1, 0, -1, 0, 1}));
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(8) == 4);
}

TEST_CASE("zeta_n is a primitive n-th root of unity") {
    for (long n : {3L, 4L, 8L, 12L}) {
        auto f = FieldSpec::cyclotomic(n);
        auto z = FieldElement::zeta(f);
        CHECK(z.pow(n).is_one());
        for (long k = 1; k < n; ++k) CHECK_FALSE(z.pow(k).is_one());
    }
}

TEST_CASE("field axioms hold on random elements of Q(zeta_12)") {
    auto f = FieldSpec::cyclotomic(12);
    std::mt19937_64 rng(20260816);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_element(f, rng);
        auto b = random_element(f, rng);
        auto c = random_element(f, rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK((a * a.inverse()).is_one());
            CHECK(a.pow(-2) == (a * a).inverse());
        }
    }
}

TEST_CASE("hand-checked cyclotomic identities") {
    auto f3 = FieldSpec::cyclotomic(3);
    auto z3 = FieldElement::zeta(f3);
    CHECK((FieldElement::one(f3) + z3 + z3.pow(2)).is_zero());
    // zeta_6 = 1 + zeta_3, since zeta_6 = -zeta_3^2.
    CHECK(FieldElement::root_of_unity(f3, 6) == FieldElement::one(f3) + z3);

    auto f4 = FieldSpec::cyclotomic(4);
    auto z4 = FieldElement::zeta(f4);
    CHECK(z4 * z4 == -FieldElement::one(f4));
    // (1 + zeta_4)^2 = 2 zeta_4.
    auto u = FieldElement::one(f4) + z4;
    CHECK(u * u == FieldElement::from_long(f4, 2) * z4);
}

TEST_CASE("roots of unity available in each field") {
    auto q = FieldSpec::rationals();
    CHECK(FieldElement::root_of_unity(q, 1).is_one());
    CHECK(FieldElement::root_of_unity(q, 2) == FieldElement::from_long(q, -1));
    CHECK_THROWS_AS(FieldElement::root_of_unity(q, 3), ValidationError);

    auto f3 = FieldSpec::cyclotomic(3);
    auto z6 = FieldElement::root_of_unity(f3, 6);
    CHECK(z6.pow(6).is_one());
    CHECK_FALSE(z6.pow(3).is_one());
    CHECK(z6.pow(2) == FieldElement::zeta(f3));
    CHECK(z6.pow(3) == FieldElement::from_long(f3, -1));
    CHECK_THROWS_AS(FieldElement::root_of_unity(f3, 4), ValidationError);
}

TEST_CASE("order_as_root_of_unity") {
    auto f12 = FieldSpec::cyclotomic(12);
    auto z = FieldElement::zeta(f12);
    CHECK(order_as_root_of_unity(z) == 12);
    CHECK(order_as_root_of_unity(z.pow(5)) == 12);  // gcd(5,12) = 1
    CHECK(order_as_root_of_unity(z.pow(4)) == 3);
    CHECK(order_as_root_of_unity(FieldElement::one(f12)) == 1);
    CHECK(order_as_root_of_unity(FieldElement::from_long(f12, -1)) == 2);
    CHECK_FALSE(order_as_root_of_unity(FieldElement::from_long(f12, 2)).has_value());
    CHECK_FALSE(order_as_root_of_unity(FieldElement::one(f12) + z).has_value());

    auto f3 = FieldSpec::cyclotomic(3);
    CHECK(order_as_root_of_unity(-FieldElement::zeta(f3)) == 6);

    auto q = FieldSpec::rationals();
    CHECK(order_as_root_of_unity(FieldElement::from_long(q, -1)) == 2);
    CHECK_FALSE(order_as_root_of_unity(FieldElement::from_long(q, 3)).has_value());
    CHECK_THROWS_AS(order_as_root_of_unity(FieldElement::zero(q)), ZeroElement);
}

TEST_CASE("root_in_field over the rationals is complete") {
    auto q = FieldSpec::rationals();
    auto c = [&](long n, long d = 1) { return FieldElement::from_rational(q, Rational(n, d)); };

    auto r = root_in_field(c(4), 2);
    REQUIRE(r.root.has_value());
    CHECK(*r.root == c(2));
    CHECK(r.search_complete);

    r = root_in_field(c(8, 27), 3);
    REQUIRE(r.root.has_value());
    CHECK(*r.root == c(2, 3));

    r = root_in_field(c(-8), 3);
    REQUIRE(r.root.has_value());
    CHECK(*r.root == c(-2));

    r = root_in_field(c(2), 2);
    CHECK_FALSE(r.root.has_value());
    CHECK(r.search_complete);

    r = root_in_field(c(-4), 2);
    CHECK_FALSE(r.root.has_value());
    CHECK(r.search_complete);

    // Every found root re-powers to the input.
    for (long v : {36L, 100L, 64L}) {
        auto s = root_in_field(c(v), 2);
        REQUIRE(s.root.has_value());
        CHECK(s.root->pow(2) == c(v));
    }
}

TEST_CASE("root_in_field finds monomial-form cyclotomic roots") {
    auto f4 = FieldSpec::cyclotomic(4);
    auto minus_one = FieldElement::from_long(f4, -1);
    auto r = root_in_field(minus_one, 2);
    REQUIRE(r.root.has_value());
    CHECK(r.root->pow(2) == minus_one);  // independently re-powered

    auto f12 = FieldSpec::cyclotomic(12);
    auto z = FieldElement::zeta(f12);
    r = root_in_field(z.pow(2), 2);
    REQUIRE(r.root.has_value());
    CHECK(r.root->pow(2) == z.pow(2));

    auto f3 = FieldSpec::cyclotomic(3);
    r = root_in_field(FieldElement::zeta(f3), 2);
    REQUIRE(r.root.has_value());
    CHECK(r.root->pow(2) == FieldElement::zeta(f3));
    CHECK(*r.root == FieldElement::root_of_unity(f3, 6));
}

TEST_CASE("root_in_field reports an honest completeness flag") {
    // sqrt(2) = zeta_8 - zeta_8^3 lies in Q(zeta_8) but is not of the form
    // r * zeta^t, so the restricted search must say "absent, not complete".
    auto f8 = FieldSpec::cyclotomic(8);
    auto two = FieldElement::from_long(f8, 2);
    auto z = FieldElement::zeta(f8);
    CHECK((z - z.pow(3)).pow(2) == two);  // the root really exists
    auto r = root_in_field(two, 2);
    CHECK_FALSE(r.root.has_value());
    CHECK_FALSE(r.search_complete);

    // 2*zeta_4 = (1 + zeta_4)^2: same situation.
    auto f4 = FieldSpec::cyclotomic(4);
    auto c = FieldElement::from_long(f4, 2) * FieldElement::zeta(f4);
    CHECK((FieldElement::one(f4) + FieldElement::zeta(f4)).pow(2) == c);
    r = root_in_field(c, 2);
    CHECK_FALSE(r.root.has_value());
    CHECK_FALSE(r.search_complete);
}

TEST_CASE("field error surfaces") {
    auto q = FieldSpec::rationals();
    auto f4 = FieldSpec::cyclotomic(4);
    CHECK_THROWS_AS(FieldElement::one(q) + FieldElement::one(f4), MixedFields);
    CHECK_THROWS_AS(FieldElement::zero(f4).inverse(), DivisionByZero);
    CHECK_THROWS_AS(FieldElement::one(f4) / FieldElement::zero(f4), DivisionByZero);
    CHECK_THROWS_AS(root_in_field(FieldElement::zero(q), 2), ZeroElement);
}

TEST_CASE("scalar printing is stable") {
    auto q = FieldSpec::rationals();
    CHECK(FieldElement::from_rational(q, Rational(-1, 2)).to_string() == "-1/2");
    CHECK(FieldElement::zero(q).to_string() == "0");

    auto f8 = FieldSpec::cyclotomic(8);
    auto z = FieldElement::zeta(f8);
    auto e = FieldElement::from_rational(f8, Rational(1, 2)) * z.pow(3) - FieldElement::one(f8);
    CHECK(e.to_string() == "1/2*zeta(8)^3 - 1");
    CHECK(z.to_string() == "zeta(8)");
    CHECK((-z).to_string() == "-zeta(8)");
}
