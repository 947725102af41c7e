#include "apramsey/alpha.hpp"

#include "apramsey/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace apramsey;

namespace {

const BigInt kSevenPrimeProduct("6314094315421");  // 47*59*67*71*73*79*83

}  // namespace

TEST_CASE("palette table") {
    const auto& palettes = certificate_palettes();
    REQUIRE(palettes.size() == 7);
    CHECK(palettes[0].p == 47);
    CHECK(palettes[0].set == ResidueSet(47, {0, 5, 10, 15, 20}));
    CHECK(palettes[1].set == ResidueSet(59, {0, 5, 10, 15, 20, 25}));
    CHECK(palettes[6].set == ResidueSet(83, {0, 5, 10, 15, 20, 25, 30, 35}));

    for (const auto& pal : palettes) CHECK(shifted_residue_cover(pal.p, pal.set, false));
    CHECK(shifted_residue_cover(59, palette_for_prime(59)->set, true));

    CHECK_FALSE(shifted_residue_cover(47, ResidueSet(47, {0}), false));
    CHECK_THROWS_AS(shifted_residue_cover(15, ResidueSet(15, {0}), false), NotOddPrime);
    CHECK(palette_for_prime(48) == nullptr);
}

TEST_CASE("two-representative reduction agrees with checking every b") {
    for (const auto& pal : certificate_palettes()) {
        CHECK(shifted_residue_cover(pal.p, pal.set, false) ==
              testing::shifted_residue_cover_all_b(pal.p, pal.set, false));
        CHECK(shifted_residue_cover(pal.p, pal.set, true) ==
              testing::shifted_residue_cover_all_b(pal.p, pal.set, true));
    }
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const int p = trial % 2 == 0 ? 47 : 59;
        ResidueSet s(p);
        const int size = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < size; ++i) s.insert(static_cast<int>(rng() % p));
        CHECK(shifted_residue_cover(p, s, false) ==
              testing::shifted_residue_cover_all_b(p, s, false));
        CHECK(shifted_residue_cover(p, s, true) ==
              testing::shifted_residue_cover_all_b(p, s, true));
    }
}

TEST_CASE("red interval condition") {
    CHECK(red_interval_condition(Rational(1), 47));
    CHECK(red_interval_condition(Rational(95, 94), 47));
    CHECK_FALSE(red_interval_condition(Rational(2), 47));
    CHECK(red_interval_condition(Rational(3, 2), 47));
    CHECK_FALSE(red_interval_condition(Rational(3, 2) + Rational(1, 1000000), 47));
    CHECK(red_interval_condition(Rational(48), 47));
    CHECK(red_interval_condition(Rational(1) + Rational(47) * 1000000007, 47));
}

TEST_CASE("certificate for alpha^2 = 1") {
    const AlphaCertificate cert = certify_rational(1, 1);
    CHECK(cert.case_tag == CertCase::kRationalCase1);
    CHECK(cert.p == 47);
    CHECK(cert.alpha_blue_sq == 1);
    CHECK(cert.alpha_red_sq == 1);
    CHECK(cert.epsilon == 0);
    CHECK(cert.M == 2209);
    CHECK(verify_certificate(cert).ok);
}

TEST_CASE("certificate for alpha^2 = 94") {
    const AlphaCertificate cert = certify_rational(94, 1);
    CHECK(cert.case_tag == CertCase::kRationalCase2);
    CHECK(cert.p == 47);
    CHECK(cert.alpha_blue_sq == 95);
    CHECK(cert.alpha_red_sq == Rational(95, 94));
    CHECK(cert.M == 2209);
    CHECK(verify_certificate(cert).ok);
}

TEST_CASE("certificate for the seven-prime denominator") {
    const AlphaCertificate cert = certify_rational(1, kSevenPrimeProduct);
    CHECK(cert.case_tag == CertCase::kFinalCase);
    CHECK(cert.p == 59);
    CHECK(cert.M == 6845);
    CHECK(cert.alpha_red_sq == Rational(kSevenPrimeProduct + 1));
    CHECK(cert.epsilon == Rational(1, kSevenPrimeProduct));
    CHECK(cert.epsilon > 0);
    const CertCheck check = verify_certificate(cert);
    CHECK(check.ok);
}

TEST_CASE("case 3 fires when every table prime divides the denominator and a is large") {
    const AlphaCertificate cert = certify_rational(63, kSevenPrimeProduct);
    CHECK(cert.case_tag == CertCase::kRationalCase3);
    CHECK(cert.p == 47);
    CHECK(cert.M == 2209);
    CHECK(cert.epsilon == 0);
    CHECK(verify_certificate(cert).ok);
    // the ceiling ratio stays inside [1/p, 1.5/p]
    const BigInt r = (BigInt(63) + 46) / 47;
    CHECK(BigInt(63) <= 47 * r);
    CHECK(2 * 47 * r <= 3 * BigInt(63));

    const AlphaCertificate big = certify_rational(1000, kSevenPrimeProduct);
    CHECK(big.case_tag == CertCase::kRationalCase3);
    CHECK(verify_certificate(big).ok);

    const std::vector<BigInt> denominators{kSevenPrimeProduct, BigInt(kSevenPrimeProduct * 2),
                                           BigInt(kSevenPrimeProduct * 100003)};
    for (int a : {63, 70, 94, 141, 200, 12345}) {
        for (const BigInt& b : denominators) {
            if (gcd(BigInt(a), b) != 1) continue;
            const AlphaCertificate cert = certify_rational(a, b);
            CHECK(cert.case_tag == CertCase::kRationalCase3);
            CHECK(cert.M == 2209);
            CHECK(verify_certificate(cert).ok);
            const BigInt r = (BigInt(a) + 46) / 47;
            CHECK(2 * 47 * r <= 3 * BigInt(a));  // ceiling ratio inside [1/p, 1.5/p]
        }
    }
}

TEST_CASE("final case stops at a = 62") {
    const AlphaCertificate c62 = certify_rational(62, kSevenPrimeProduct);
    CHECK(c62.case_tag == CertCase::kFinalCase);
    CHECK(c62.M == 6845);
    CHECK(verify_certificate(c62).ok);
}

TEST_CASE("prime selection is the smallest with p not dividing b") {
    const AlphaCertificate cert = certify_rational(1, 47);
    CHECK(cert.case_tag == CertCase::kRationalCase1);
    CHECK(cert.p == 59);
    CHECK(cert.M == 59 * 59);
    CHECK(verify_certificate(cert).ok);

    const AlphaCertificate skip2 = certify_rational(1, BigInt(47) * 59);
    CHECK(skip2.p == 67);
    CHECK(skip2.M == 67 * 67);
    CHECK(verify_certificate(skip2).ok);
}

TEST_CASE("certificates exist for every small coprime ratio") {
    for (int a = 1; a <= 100; ++a)
        for (int b = 1; b <= 100; ++b) {
            if (gcd(BigInt(a), BigInt(b)) != 1) continue;
            const AlphaCertificate cert = certify_rational(a, b);
            CHECK(cert.M <= 6889);
            CHECK(cert.alpha_blue_sq * b == cert.alpha_red_sq * a);  // exact ratio
            CHECK(verify_certificate(cert).ok);
        }
}

TEST_CASE("certificates exist for large random ratios") {
    std::mt19937_64 rng(61);
    auto random_big = [&](int words) {
        BigInt v = 1;
        for (int i = 0; i < words; ++i) v = v * BigInt(1'000'000'000) + BigInt(rng() % 1'000'000'000);
        return v;
    };
    for (int trial = 0; trial < 200; ++trial) {
        BigInt a = random_big(1 + static_cast<int>(rng() % 2));
        BigInt b = random_big(1 + static_cast<int>(rng() % 2));  // up to ~10^19
        const BigInt g = gcd(a, b);
        a /= g;
        b /= g;
        const AlphaCertificate cert = certify_rational(a, b);
        CHECK(cert.M <= 6889);
        CHECK(cert.alpha_blue_sq * b == cert.alpha_red_sq * a);
        CHECK(verify_certificate(cert).ok);
    }
}

TEST_CASE("inputs must be positive and coprime") {
    CHECK_THROWS_AS(certify_rational(2, 4), NotCoprime);
    CHECK_THROWS_AS(certify_rational(0, 1), ParameterOutOfRange);
    CHECK_THROWS_AS(certify_rational(1, 0), ParameterOutOfRange);
}

TEST_CASE("tampered certificates are rejected with the violated condition") {
    AlphaCertificate cert = certify_rational(1, 1);

    AlphaCertificate wrong_red = cert;
    wrong_red.alpha_red_sq = 2;
    wrong_red.alpha_blue_sq = 2;  // keep the ratio consistent
    const CertCheck red_check = verify_certificate(wrong_red);
    CHECK_FALSE(red_check.ok);
    CHECK(red_check.transcript.back().find("red interval") != std::string::npos);

    AlphaCertificate wrong_eps = certify_rational(1, kSevenPrimeProduct);
    wrong_eps.epsilon = Rational(1, 4 * BigInt(59) * 59 * 59 * 59 * 59) + 1;
    wrong_eps.alpha_blue_sq = Rational(wrong_eps.b_int) + wrong_eps.epsilon;
    wrong_eps.alpha_sq = wrong_eps.alpha_blue_sq / wrong_eps.alpha_red_sq;
    const CertCheck eps_check = verify_certificate(wrong_eps);
    CHECK_FALSE(eps_check.ok);
    CHECK(eps_check.transcript.back().find("epsilon bound") != std::string::npos);

    AlphaCertificate wrong_m = cert;
    wrong_m.M = 6889;
    CHECK_FALSE(verify_certificate(wrong_m).ok);

    AlphaCertificate wrong_ratio = cert;
    wrong_ratio.alpha_sq = Rational(2);
    CHECK_FALSE(verify_certificate(wrong_ratio).ok);

    AlphaCertificate wrong_p = cert;
    wrong_p.p = 53;
    CHECK_FALSE(verify_certificate(wrong_p).ok);

    AlphaCertificate divisible = cert;
    divisible.b_int = 47;
    divisible.alpha_blue_sq = 47;
    divisible.alpha_red_sq = 47;
    CHECK_FALSE(verify_certificate(divisible).ok);
}
