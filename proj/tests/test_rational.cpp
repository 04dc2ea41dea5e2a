#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "betti/rational.hpp"

#include <sstream>

using namespace betti;

TEST_CASE("construction canonicalizes") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(2, 4).numerator() == 1);
    CHECK(Rat(2, 4).denominator() == 2);
    CHECK(Rat(3, -6).denominator() == 2);  // denominator kept positive
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("default and integer values") {
    CHECK(Rat() == Rat(0));
    CHECK(Rat(5).is_integer());
    CHECK(!Rat(1, 2).is_integer());
    CHECK(Rat(-7).sign() == -1);
    CHECK(Rat(0).sign() == 0);
    CHECK(Rat(3).sign() == 1);
}

TEST_CASE("to_string uses p/q with q = 1 omitted") {
    CHECK(Rat(10, 3).to_string() == "10/3");
    CHECK(Rat(-10, 3).to_string() == "-10/3");
    CHECK(Rat(12).to_string() == "12");
    CHECK(Rat(4, 2).to_string() == "2");
    std::ostringstream os;
    os << Rat(8, 3);
    CHECK(os.str() == "8/3");
}

TEST_CASE("parse accepts the canonical syntax only") {
    CHECK(Rat::parse("10/3") == Rat(10, 3));
    CHECK(Rat::parse("-7") == Rat(-7));
    CHECK(Rat::parse("0") == Rat(0));
    CHECK(Rat::parse("4/2") == Rat(2));
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("3/"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("+4"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(" 4"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("4 "), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("2/-3"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("--2"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
    CHECK(-Rat(1, 2) == Rat(-1, 2));
    CHECK(abs(Rat(-5, 3)) == Rat(5, 3));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);

    Rat r(1, 3);
    r += Rat(1, 6);
    CHECK(r == Rat(1, 2));
    r *= Rat(4);
    CHECK(r == Rat(2));
    r /= Rat(3);
    CHECK(r == Rat(2, 3));
    r -= Rat(2, 3);
    CHECK(r == Rat(0));
}

TEST_CASE("comparisons agree with cross-multiplication") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK(Rat(7, 5) > Rat(63, 50));
    CHECK(Rat(2, 4) <= Rat(1, 2));
    CHECK(Rat(2, 4) >= Rat(1, 2));
    CHECK(Rat(1, 3) != Rat(1, 2));
}

TEST_CASE("binomial matches the Pascal recurrence") {
    // Independent oracle: additive Pascal triangle, no factorials.
    std::vector<std::vector<Int>> pascal(41);
    for (long n = 0; n <= 40; ++n) {
        pascal[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Int(1));
        for (long k = 1; k < n; ++k)
            pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                pascal[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                pascal[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
        for (long k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
    }
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(-2, 0) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("ipow") {
    CHECK(ipow(Int(2), 10) == 1024);
    CHECK(ipow(Int(0), 0) == 1);
    CHECK(ipow(Int(0), 5) == 0);
    CHECK(ipow(Int(-3), 3) == -27);
    CHECK(ipow(Int(7), 1) == 7);
    CHECK_THROWS_AS(ipow(Int(2), -1), std::invalid_argument);
}

TEST_CASE("gcd and lcm") {
    CHECK(gcd(Int(12), Int(18)) == 6);
    CHECK(gcd(Int(-12), Int(18)) == 6);
    CHECK(gcd(Int(0), Int(5)) == 5);
    CHECK(lcm(Int(4), Int(6)) == 12);
    CHECK(lcm(Int(0), Int(5)) == 0);
}

TEST_CASE("rat_gcd divides both arguments to integers") {
    CHECK(rat_gcd(Rat(1, 2), Rat(1, 3)) == Rat(1, 6));
    CHECK(rat_gcd(Rat(4, 3), Rat(2, 3)) == Rat(2, 3));
    CHECK(rat_gcd(Rat(0), Rat(-5, 3)) == Rat(5, 3));
    CHECK(rat_gcd(Rat(0), Rat(0)) == Rat(0));
    CHECK(rat_gcd(Rat(6), Rat(4)) == Rat(2));

    const Rat a(9, 10), b(21, 4);
    const Rat g = rat_gcd(a, b);
    CHECK((a / g).is_integer());
    CHECK((b / g).is_integer());
}

TEST_CASE("decimal_display matches the table renderings") {
    CHECK(decimal_display(Rat(21, 10)) == "2.1");
    CHECK(decimal_display(Rat(7, 3)) == "2.33");
    CHECK(decimal_display(Rat(2)) == "2");
    CHECK(decimal_display(Rat(7, 4)) == "1.75");
    CHECK(decimal_display(Rat(12, 5)) == "2.4");
    CHECK(decimal_display(Rat(5, 2)) == "2.5");
    CHECK(decimal_display(Rat(21, 5)) == "4.2");
    CHECK(decimal_display(Rat(63, 50)) == "1.26");
}

TEST_CASE("decimal_display rounds half away from zero and trims") {
    CHECK(decimal_display(Rat(1, 200)) == "0.01");    // 0.005 rounds up
    CHECK(decimal_display(Rat(-1, 200)) == "-0.01");  // and away from zero
    CHECK(decimal_display(Rat(1, 300)) == "0");       // 0.00333 rounds down to 0.00
    CHECK(decimal_display(Rat(-1, 300)) == "0");      // no "-0"
    CHECK(decimal_display(Rat(1, 4), 3) == "0.25");   // trailing zero trimmed
    CHECK(decimal_display(Rat(2, 3), 0) == "1");
    CHECK(decimal_display(Rat(1, 3), 0) == "0");
    CHECK(decimal_display(Rat(-5, 2)) == "-2.5");
    CHECK_THROWS_AS(decimal_display(Rat(1), -1), std::invalid_argument);
}
