#include <doctest.h>

#include <cmath>
#include <random>

#include "octa/errors.hpp"
#include "octa/quadval.hpp"

using octa::QuadVal;
using octa::Rational;

namespace {

QuadVal qv(long an, long ad, long bn, long bd) { return QuadVal::make(an, ad, bn, bd); }

QuadVal random_quadval(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 12);
    return qv(num(rng), den(rng), num(rng), den(rng));
}

} // namespace

TEST_CASE("quadval arithmetic on the worked examples") {
    QuadVal s = qv(1, 1, 1, 1); // 1 + sqrt 2
    CHECK(s * s == qv(3, 1, 2, 1));
    CHECK(qv(-1, 1, 1, 1) * s == qv(1, 1, 0, 1));
    QuadVal s2 = s * s;
    CHECK(s2 * s2 == qv(17, 1, 12, 1)); // s^4 by repeated exact squaring
}

TEST_CASE("quadval sign is decided exactly") {
    CHECK(qv(3, 1, -2, 1).sign() == 1);  // 9 > 8
    CHECK(qv(2, 1, -2, 1).sign() == -1); // 4 < 8
    CHECK(QuadVal().sign() == 0);
    // Tight cases around sqrt(2) = 1.41421356...
    CHECK(qv(-141421356, 100000000, 1, 1).sign() == 1);
    CHECK(qv(-141421357, 100000000, 1, 1).sign() == -1);
}

TEST_CASE("quadval approx") {
    CHECK(qv(1, 1, 1, 1).approx() == doctest::Approx(2.414213562373095).epsilon(1e-14));
    CHECK(QuadVal().approx() == 0.0);
    CHECK(qv(17, 1, 12, 1).approx() == doctest::Approx(33.97056274847714).epsilon(1e-14));
}

TEST_CASE("division by zero fails") {
    CHECK_THROWS_AS(qv(1, 1, 0, 1) / QuadVal(), octa::Error);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(20260810);
    for (int i = 0; i < 10000; ++i) {
        QuadVal x = random_quadval(rng), y = random_quadval(rng), z = random_quadval(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) {
            QuadVal inv = QuadVal(1) / x;
            CHECK(x * inv == QuadVal(1));
        }
        CHECK((x * x).sign() >= 0);
        CHECK(x.sign() == -(-x).sign());
        double ax = x.approx();
        if (std::fabs(ax) > 1e-6) CHECK(x.sign() == (ax > 0 ? 1 : -1));
    }
}

TEST_CASE("floor is exact") {
    CHECK(qv(0, 1, 1, 1).floor() == 1);        // sqrt 2
    CHECK(qv(0, 1, -1, 1).floor() == -2);      // -sqrt 2
    CHECK(qv(3, 2, 0, 1).floor() == 1);
    CHECK(qv(-3, 2, 0, 1).floor() == -2);
    CHECK(qv(2, 1, -1, 1).floor() == 0);       // 2 - sqrt 2 = 0.585
    CHECK(QuadVal(5).floor() == 5);
    std::mt19937 rng(7);
    for (int i = 0; i < 2000; ++i) {
        QuadVal x = random_quadval(rng);
        long f = x.floor();
        CHECK((x - QuadVal(f)).sign() >= 0);
        CHECK((x - QuadVal(f + 1)).sign() < 0);
    }
}

TEST_CASE("canonical text form round trips") {
    QuadVal v = qv(-3, 2, 5, 4);
    CHECK(v.str() == "-3/2+5/4*r2");
    CHECK(QuadVal::parse(v.str()) == v);
    CHECK(QuadVal::parse("1/1-1/1*r2") == qv(1, 1, -1, 1));
    CHECK(QuadVal::parse("7") == QuadVal(7));
    CHECK(QuadVal::parse("-2/3") == QuadVal(Rational(-2, 3)));
    CHECK(QuadVal::parse("1/2*r2") == qv(0, 1, 1, 2));
    CHECK(QuadVal::parse("-1/2*r2") == qv(0, 1, -1, 2));
    CHECK_THROWS_AS(QuadVal::parse("garbage"), octa::ParseError);
    CHECK_THROWS_AS(QuadVal::parse(""), octa::ParseError);
    std::mt19937 rng(11);
    for (int i = 0; i < 500; ++i) {
        QuadVal x = random_quadval(rng);
        CHECK(QuadVal::parse(x.str()) == x);
    }
}
