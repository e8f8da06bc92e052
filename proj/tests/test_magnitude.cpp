#include <doctest.h>

#include <random>

#include "multisign/magnitude.hpp"
#include "test_support.hpp"

using multisign::BigInt;
using multisign::Magnitude;
using test_support::Frac;

TEST_CASE("addition is exact and reduced") {
    CHECK(Magnitude(1) + Magnitude::parse("1/2") == Magnitude::parse("3/2"));
    const Magnitude x = Magnitude::parse("7/3");
    CHECK(Magnitude(0) + x == x);

    // Cross-multiplication oracle: 2/3 + 5/6 = 4/6 + 5/6 = 9/6 = 3/2.
    const Frac oracle = Frac{2, 3}.plus(Frac{5, 6});
    CHECK(oracle.num == 3);
    CHECK(oracle.den == 2);
    CHECK(Magnitude::parse("2/3") + Magnitude::parse("5/6") == Magnitude::parse("3/2"));
}

TEST_CASE("difference is the cancellation difference") {
    CHECK(Magnitude(3) - Magnitude(3) == Magnitude(0));
    const Magnitude d = Magnitude(2) - Magnitude::parse("1/2");
    CHECK(d == Magnitude::parse("3/2"));
    CHECK(Magnitude::parse("1/2") + d == Magnitude(2));
    CHECK_THROWS_AS(Magnitude::parse("1/2") - Magnitude(2), multisign::UnderflowError);
}

TEST_CASE("multiplication") {
    CHECK(Magnitude(2) * Magnitude(3) == Magnitude(6));
    const Magnitude x = Magnitude::parse("5/7");
    CHECK(x * Magnitude(1) == x);

    // 2/3 * 9/4 = 18/12 = 3/2.
    const Frac oracle = Frac{2, 3}.times(Frac{9, 4});
    CHECK(oracle.num == 3);
    CHECK(oracle.den == 2);
    CHECK(Magnitude::parse("2/3") * Magnitude::parse("9/4") == Magnitude::parse("3/2"));
}

TEST_CASE("inverse") {
    CHECK(Magnitude(4).inverse() == Magnitude::parse("1/4"));
    CHECK(Magnitude(1).inverse() == Magnitude(1));
    CHECK(Magnitude::parse("2/3").inverse() * Magnitude::parse("2/3") == Magnitude(1));
    CHECK_THROWS_AS(Magnitude(0).inverse(), multisign::ZeroInverseError);
}

TEST_CASE("comparison follows cross-multiplied integers") {
    CHECK(Magnitude::parse("1/2") == Magnitude::parse("2/4"));
    CHECK(Magnitude(2) > Magnitude::parse("1/2"));

    // 7/10 vs 5/7: cross products 49 vs 50.
    CHECK(7 * 7 == 49);
    CHECK(5 * 10 == 50);
    CHECK(Magnitude::parse("7/10") < Magnitude::parse("5/7"));
}

TEST_CASE("canonical form at construction") {
    const Magnitude m(BigInt(4), BigInt(6));
    CHECK(m.numerator() == 2);
    CHECK(m.denominator() == 3);
    const Magnitude z(BigInt(0), BigInt(17));
    CHECK(z.denominator() == 1);
    CHECK(z.is_zero());
    CHECK_THROWS(Magnitude(BigInt(1), BigInt(0)));
    CHECK_THROWS_AS(Magnitude(-1), multisign::UnderflowError);
    CHECK_THROWS_AS(Magnitude(BigInt(-1), BigInt(2)), multisign::UnderflowError);
}

TEST_CASE("arbitrary precision components") {
    const Magnitude big(BigInt("123456789012345678901234567890"), BigInt(1));
    const Magnitude sq = big * big;
    CHECK(sq.numerator() == BigInt("15241578753238836750495351562536198787501905199875019052100"));
    CHECK(sq.denominator() == 1);
}

TEST_CASE("text form") {
    CHECK(Magnitude::parse("3").str() == "3");
    CHECK(Magnitude::parse("3/2").str() == "3/2");
    CHECK(Magnitude::parse("0.5") == Magnitude::parse("1/2"));
    CHECK(Magnitude::parse("1.25").str() == "5/4");
    CHECK(Magnitude::parse("2/4").str() == "1/2");
    CHECK(Magnitude::parse("0").str() == "0");
    CHECK(Magnitude::parse("0/9").str() == "0");

    CHECK_THROWS_AS(Magnitude::parse(""), multisign::SyntaxError);
    CHECK_THROWS_AS(Magnitude::parse("1/0"), multisign::SyntaxError);
    CHECK_THROWS_AS(Magnitude::parse("1/"), multisign::SyntaxError);
    CHECK_THROWS_AS(Magnitude::parse("1."), multisign::SyntaxError);
    CHECK_THROWS_AS(Magnitude::parse("abc"), multisign::SyntaxError);
    CHECK_THROWS_AS(Magnitude::parse("3x"), multisign::SyntaxError);
    CHECK_THROWS_AS(Magnitude::parse("-1"), multisign::SyntaxError);

    // Round trip through the text form.
    for (const char* text : {"0", "1", "17/13", "3/2", "1000000007"}) {
        CHECK(Magnitude::parse(text).str() == text);
    }
}

TEST_CASE("algebraic properties against the fraction oracle") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long long> num(0, 30);
    std::uniform_int_distribution<long long> den(1, 30);
    for (int iter = 0; iter < 400; ++iter) {
        const Frac fa = Frac::reduced(num(rng), den(rng));
        const Frac fb = Frac::reduced(num(rng), den(rng));
        const Frac fc = Frac::reduced(num(rng), den(rng));
        const Magnitude a = fa.to_magnitude();
        const Magnitude b = fb.to_magnitude();
        const Magnitude c = fc.to_magnitude();

        CHECK(a + b == fa.plus(fb).to_magnitude());
        CHECK(a * b == fa.times(fb).to_magnitude());
        CHECK((a <=> b == std::strong_ordering::less) == (fa.compare(fb) < 0));

        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);

        if (a >= b) {
            CHECK(b + (a - b) == a);
        }
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Magnitude(1));
        }
        // No nonzero additive inverses: a sum is zero only when both
        // terms are.
        if ((a + b).is_zero()) {
            CHECK(a.is_zero());
            CHECK(b.is_zero());
        }
    }
}
