#include "clustered/bounds.hpp"

#include <gmpxx.h>
#include <gtest/gtest.h>

#include "clustered/error.hpp"

namespace clustered {
namespace {

// GMP is the independent oracle; compare via decimal strings.
std::string str(const BigInt& x) { return x.str(); }

std::string gmp_pow(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r.get_str();
}

std::string gmp_ej(unsigned long delta, unsigned long g) {
    const unsigned long two_g = 1ul << g;
    mpz_class a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), 5 * delta, two_g - 1);
    mpz_ui_pow_ui(b.get_mpz_t(), 15 * delta, (32 * delta + 8) * two_g);
    return mpz_class(a * b).get_str();
}

TEST(EjBound, SmallCases) {
    EXPECT_EQ(str(ej_bound(1, 0)), gmp_pow(15, 40));
    EXPECT_EQ(digit_count(ej_bound(1, 0)), 48u);
    EXPECT_EQ(str(ej_bound(3, 0)), gmp_pow(45, 104));
    for (int delta = 1; delta <= 4; ++delta)
        for (int g = 0; g <= 3; ++g)
            EXPECT_EQ(str(ej_bound(delta, g)), gmp_ej(delta, g)) << delta << " " << g;
}

TEST(EjBound, StrictlyIncreasing) {
    for (int delta = 1; delta <= 4; ++delta)
        for (int g = 0; g <= 3; ++g) {
            EXPECT_LT(ej_bound(delta, g), ej_bound(delta + 1, g));
            EXPECT_LT(ej_bound(delta, g), ej_bound(delta, g + 1));
        }
}

TEST(EjBound, ErrorsAndLimits) {
    EXPECT_THROW(ej_bound(0, 0), InvalidArgument);
    EXPECT_THROW(ej_bound(1, -1), InvalidArgument);
    EXPECT_THROW(ej_bound(3, 40), LimitExceeded);
}

TEST(SimpleBounds, Examples) {
    EXPECT_EQ(adov_bound(3, 3), 216);
    EXPECT_EQ(adov_bound(1, 1), 24);
    EXPECT_EQ(adov_bound(2, 2), 96);
    EXPECT_EQ(necklace_bound(2), 2);
    EXPECT_EQ(necklace_bound(5), 4);
    EXPECT_EQ(combine_bound(3, 1), 5);
    EXPECT_THROW(combine_bound(2, 1), InvalidArgument);
    EXPECT_EQ(outgrowth_bound(1, 1, 1), 48);
    EXPECT_EQ(recolor_budget(2, 3, 4), 26);
    EXPECT_EQ(recolor_budget(0, 9, 9), 0);
    EXPECT_EQ(recolor_budget(1, 1, 1), 2);
}

TEST(MainConstants, HookedValues) {
    auto c = main_constants(0, 1, 1, 0, {BigInt(1), std::nullopt});
    EXPECT_EQ(c.m, 34992);
    EXPECT_EQ(c.eta, 0);

    auto e = main_constants(1, 1, 1, 0, {std::nullopt, BigInt(1)});
    EXPECT_EQ(e.eta, 2000);
}

TEST(MainConstants, EtaZeroIffRhoZero) {
    for (int rho = 0; rho <= 2; ++rho) {
        auto c = main_constants(rho, 2, 1, 0);
        EXPECT_EQ(c.eta == 0, rho == 0);
        EXPECT_EQ(c.d, ej_bound(1, 0));
    }
}

TEST(MainConstants, UnhookedMatchesOracle) {
    // M = 48 d^4 (2ρ+3)(3Δ+2ρ)^5 with d = 15^40, ρ=1, Δ=1.
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 15, 40);
    mpz_class m = 48 * d * d * d * d * 5 * (5 * 5 * 5 * 5 * 5);
    mpz_class eta = 2000 * 1 * 8 * m * 1;  // θ = 2
    auto c = main_constants(1, 2, 1, 0);
    EXPECT_EQ(str(c.m), m.get_str());
    EXPECT_EQ(str(c.eta), eta.get_str());
}

TEST(MainConstants, ScalesByFourthPowerOfD) {
    const auto base = main_constants(2, 3, 2, 1, {BigInt(1), std::nullopt});
    for (int big : {2, 7, 1000}) {
        const auto scaled = main_constants(2, 3, 2, 1, {BigInt(big), std::nullopt});
        const BigInt d4 = BigInt(big) * big * big * big;
        EXPECT_EQ(scaled.m, base.m * d4);
        EXPECT_EQ(scaled.m % base.m, 0);
    }
}

TEST(MainConstants, Deterministic) {
    auto a = main_constants(1, 1, 2, 1);
    auto b = main_constants(1, 1, 2, 1);
    EXPECT_EQ(a.d, b.d);
    EXPECT_EQ(a.m, b.m);
    EXPECT_EQ(a.eta, b.eta);
}

TEST(DigitCount, Examples) {
    EXPECT_EQ(digit_count(0), 1u);
    EXPECT_EQ(digit_count(-999), 3u);
    EXPECT_EQ(digit_count(BigInt(1000)), 4u);
}

} // namespace
} // namespace clustered
