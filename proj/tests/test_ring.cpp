#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hwpkit/ring.hpp"

using namespace hwp;

TEST_CASE("dimension validation") {
    CHECK(Dim(3).value() == 3);
    CHECK(Dim(7).half() == 3);
    CHECK_THROWS_AS(Dim(2), std::invalid_argument);
    CHECK_THROWS_AS(Dim(4), std::invalid_argument);
    CHECK_THROWS_AS(Dim(1), std::invalid_argument);
    CHECK_THROWS_AS(Dim(-3), std::invalid_argument);
    CHECK(Dim(5) == Dim(5));
    CHECK(Dim(5) != Dim(7));
}

TEST_CASE("residue arithmetic") {
    const Dim d(5);
    CHECK(ModInt(7, d).value() == 2);
    CHECK(ModInt(-1, d).value() == 4);
    CHECK(ModInt(4, d).centered() == -1);
    CHECK(ModInt(2, d).centered() == 2);
    CHECK((ModInt(3, d) + ModInt(4, d)).value() == 2);
    CHECK((ModInt(1, d) - ModInt(3, d)).value() == 3);
    CHECK((ModInt(3, d) * ModInt(4, d)).value() == 2);
    CHECK((-ModInt(2, d)).value() == 3);
    CHECK(mod_add(ModInt(3, d), ModInt(4, d)) == ModInt(2, d));
    CHECK(mod_mul(ModInt(3, d), ModInt(4, d)) == ModInt(12, d));
    CHECK(mod_neg(ModInt(2, d)) == ModInt(-2, d));
    CHECK(mod_inv(ModInt(2, d)) == ModInt(3, d));
    CHECK(ModInt(2, d).pow(3).value() == 3);
    CHECK(ModInt(2, d).pow(0).value() == 1);
    CHECK(ModInt(2, d).inverse() * ModInt(2, d) == ModInt(1, d));
    CHECK_THROWS_AS(ModInt(0, d).inverse(), std::invalid_argument);
    CHECK_THROWS_AS(ModInt(1, Dim(3)) + ModInt(1, Dim(5)), std::invalid_argument);
}

TEST_CASE("half inverse") {
    for (int dv : {3, 5, 7, 9, 11}) {
        const Dim d(dv);
        CHECK(two_inverse_value(d) == (dv + 1) / 2);
        CHECK((two_inverse(d) * ModInt(2, d)).value() == 1);
    }
}

TEST_CASE("phase exactness") {
    const Dim d(7);
    for (std::int64_t e = -20; e <= 20; ++e) {
        const auto got = omega(d, e);
        const double arg = 2.0 * std::numbers::pi * static_cast<double>(((e % 7) + 7) % 7) / 7.0;
        CHECK(std::abs(got - std::polar(1.0, arg)) < 1e-15);
        CHECK(std::abs(omega(d, e) - omega(d, e + 7)) == 0.0);  // same canonical residue
    }
    CHECK(omega(d, 0) == std::complex<double>(1.0, 0.0));

    const Phase p1(ModInt(3, d));
    const Phase p2(ModInt(5, d));
    CHECK((p1 * p2).exponent().value() == 1);
    CHECK(Phase::one(d) * p1 == p1);
    CHECK(std::abs((p1 * p2).value() - omega(d, 8)) == 0.0);
}

TEST_CASE("centered layout") {
    const Dim d(5);
    CHECK(centered_residue(d, 3) == -2);
    CHECK(centered_residue(d, -3) == 2);
    CHECK(centered_residue(d, 2) == 2);
    CHECK(centered_residue(Dim(3), 2) == -1);
    for (std::int64_t x = -12; x <= 12; ++x) {
        const std::int64_t r = centered_residue(d, x);
        CHECK(r >= -2);
        CHECK(r <= 2);
        CHECK((x - r) % 5 == 0);
        CHECK(centered_residue(d, r) == r);
    }
    CHECK(centered_index(d, -2) == 0);
    CHECK(centered_index(d, 0) == 2);
    CHECK(centered_index(d, 2) == 4);
    CHECK(centered_index(ModInt(4, d)) == 1);  // 4 = -1 centered
    for (int i = 0; i < 5; ++i) CHECK(centered_index(label_at(d, i)) == i);
}
