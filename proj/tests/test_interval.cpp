#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "maclaurin/interval.hpp"
#include "maclaurin/weights.hpp"

using namespace maclaurin;

namespace {

Rat random_rat(std::mt19937_64& rng, bool allow_negative = false) {
    std::uniform_int_distribution<long long> num(allow_negative ? -1000 : 0, 1000);
    std::uniform_int_distribution<long long> den(1, 1000);
    return Rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("integer helpers") {
    CHECK(div_floor(Int(7), Int(2)) == 3);
    CHECK(div_floor(Int(-7), Int(2)) == -4);
    CHECK(div_ceil(Int(7), Int(2)) == 4);
    CHECK(div_ceil(Int(-7), Int(2)) == -3);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(30, 15) == 155117520);
    CHECK(binomial(4, 7) == 0);
    CHECK(int_pow(Int(3), 5) == 243);
}

TEST_CASE("integer root floor") {
    CHECK(iroot_floor(Int(0), 3) == 0);
    CHECK(iroot_floor(Int(1), 7) == 1);
    CHECK(iroot_floor(Int(26), 3) == 2);
    CHECK(iroot_floor(Int(27), 3) == 3);
    CHECK(iroot_floor(Int(28), 3) == 3);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> value(0, 1LL << 50);
    std::uniform_int_distribution<int> degree(2, 9);
    for (int trial = 0; trial < 300; ++trial) {
        Int x(value(rng));
        unsigned n = static_cast<unsigned>(degree(rng));
        Int r = iroot_floor(x, n);
        CHECK(int_pow(r, n) <= x);
        CHECK(int_pow(r + 1, n) > x);
    }

    Rat root;
    CHECK(exact_nth_root(Rat(Int(64), Int(27)), 3, root));
    CHECK(root == Rat(4, 3));
    CHECK(!exact_nth_root(Rat(2), 2, root));
}

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-7") == Rat(-7));
    CHECK(rat_to_string(Rat(6, 4)) == "3/2");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK_THROWS(parse_rational("x/y"));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("dyadic conversions bracket the rational") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        Rat r = random_rat(rng, true);
        for (unsigned prec : {16u, 64u, 200u}) {
            Dyadic lo = dyadic_from_rat_down(r, prec);
            Dyadic hi = dyadic_from_rat_up(r, prec);
            CHECK(dyadic_to_rat(lo) <= r);
            CHECK(dyadic_to_rat(hi) >= r);
            Rat width = dyadic_to_rat(hi) - dyadic_to_rat(lo);
            Rat bound = abs(r) / rat_pow(Rat(2), prec) + Rat(1, int_pow(Int(2), prec));
            CHECK(width <= bound);
        }
    }
}

TEST_CASE("interval operations contain the exact result") {
    std::mt19937_64 rng(29);
    const unsigned prec = 96;
    for (int trial = 0; trial < 200; ++trial) {
        Rat a = random_rat(rng, true), b = random_rat(rng, true);
        Interval ia = Interval::from_rat(a, prec), ib = Interval::from_rat(b, prec);
        CHECK((ia + ib).contains(a + b));
        CHECK((ia - ib).contains(a - b));
        CHECK((ia * ib).contains(a * b));
        CHECK(ia.pow(3).contains(a * a * a));

        Rat p = abs(a);
        Interval ip = Interval::from_rat(p, prec);
        Interval root = ip.nth_root(3);
        CHECK(rat_pow(root.lo_rat(), 3) <= p);
        CHECK(rat_pow(root.hi_rat(), 3) >= p);
        if (p > 1) {
            // Relative enclosure width stays near the working precision.
            CHECK(root.width() / root.hi_rat() <= Rat(1, Int(1) << 90));
        }
    }
}

TEST_CASE("directed roots are exact on perfect powers") {
    Interval sixty_four = Interval::from_rat(Rat(64), 64);
    Interval root = sixty_four.nth_root(2);
    CHECK(root.lo_rat() == 8);
    CHECK(root.hi_rat() == 8);

    CertifiedValue exact = cv_nth_root(CertifiedValue::exact(Rat(Int(729), Int(64))), 3, 64);
    CHECK(exact.is_exact());
    CHECK(exact.exact_value() == Rat(9, 4));
}

TEST_CASE("sqrt(6) enclosure via an independent rational Newton oracle") {
    // Newton from above: t <- (t + 6/t)/2 keeps t^2 >= 6; 6/t is a lower bound.
    Rat t(3);
    for (int i = 0; i < 8; ++i) t = (t + Rat(6) / t) / 2;
    Rat sqrt6_hi = t, sqrt6_lo = Rat(6) / t;
    CHECK(rat_pow(sqrt6_lo, 2) <= 6);
    CHECK(rat_pow(sqrt6_hi, 2) >= 6);
    CHECK(sqrt6_hi - sqrt6_lo < Rat(1, Int(1) << 200));

    // rho(2,3,4) = C(4,2)^{3/2}/C(4,3) = 3*sqrt(6)/2.
    CertifiedValue rho = extension_weight(2, 3, 4, 128);
    REQUIRE(!rho.is_exact());
    Rat expected_lo = 3 * sqrt6_lo / 2, expected_hi = 3 * sqrt6_hi / 2;
    CHECK(rho.lower() <= expected_hi);
    CHECK(rho.upper() >= expected_lo);
    // Exact bracket of the algebraic value: (3 sqrt6 / 2)^2 = 27/2.
    CHECK(rat_pow(rho.lower(), 2) <= Rat(27, 2));
    CHECK(rat_pow(rho.upper(), 2) >= Rat(27, 2));
    CHECK(rho.width() < Rat(1, Int(1) << 100));
}

TEST_CASE("certified value promotion") {
    CertifiedValue a = CertifiedValue::exact(Rat(1, 3));
    CertifiedValue b = CertifiedValue::enclosure(Interval::from_rat(Rat(2, 7), 64));
    CHECK(cv_add(a, a, 64).is_exact());
    CHECK(cv_add(a, a, 64).exact_value() == Rat(2, 3));
    CHECK(!cv_add(a, b, 64).is_exact());
    CHECK(cv_add(a, b, 64).contains(Rat(1, 3) + Rat(2, 7)));
    CHECK(cv_mul(a, b, 64).contains(Rat(2, 21)));
    CHECK(cv_scale(b, Rat(-2), 64).contains(Rat(-4, 7)));
    CHECK(cv_pow(b, 3, 64).contains(rat_pow(Rat(2, 7), 3)));
}

TEST_CASE("precision schedule parsing") {
    PrecisionSchedule schedule = parse_precision_schedule("64,256,1024");
    CHECK(schedule.bits == std::vector<unsigned>{64, 256, 1024});
    CHECK(schedule.max_bits() == 1024);
    CHECK(schedule.tight_tolerance() == Rat(1, Int(1) << 40));
    CHECK(parse_precision_schedule("128").bits == std::vector<unsigned>{128});
    CHECK_THROWS(parse_precision_schedule("256,64"));
    CHECK_THROWS(parse_precision_schedule(""));
    CHECK_THROWS(parse_precision_schedule("64,64"));
}
