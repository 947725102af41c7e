#pragma once

#include "apramsey/numeric.hpp"
#include "apramsey/residue_set.hpp"

#include <array>
#include <string>
#include <vector>

namespace apramsey {

struct RedPalette {
    int p;
    ResidueSet set;
};

// The seven (p, S) palettes the certificate machinery is built on: S is the
// multiples of 5 below a per-prime bound, and every affine image b*R_p + c
// of the squares meets S.
const std::array<RedPalette, 7>& certificate_palettes();
const RedPalette* palette_for_prime(int p);

// True iff (b*R + c) intersects S for every b in F_p*, c in F_p, where R is
// the set of squares mod p including 0, or excluding it when nonzero_only.
// Only b = 1 and one fixed non-square are checked: scaling by a square
// permutes R, so every b*R equals one of those two images.
bool shifted_residue_cover(int p, const ResidueSet& s, bool nonzero_only);

// Exists an integer j with 1 <= x - j*p <= 3/2, decided in exact rationals.
bool red_interval_condition(const Rational& x, int p);

enum class CertCase {
    kRationalCase1,
    kRationalCase2,
    kRationalCase3,
    kFinalCase,
};
const char* to_string(CertCase c);

// Witness package for "no red 3-term unit progression and no blue
// alpha-progression of length M", alpha^2 = alpha_blue_sq / alpha_red_sq.
struct AlphaCertificate {
    int p = 0;
    Rational alpha_sq;        // the target ratio, always alpha_blue_sq / alpha_red_sq
    Rational alpha_red_sq;    // in [1, 1.5] mod p
    Rational alpha_blue_sq;   // b_int + epsilon with p not dividing b_int
    BigInt b_int;
    Rational epsilon;         // 0 <= epsilon <= 1/(4p^5); > 0 only with p = 59
    long M = 0;               // p^2 when epsilon = 0, else 2p^2 - 2p + 1
    CertCase case_tag = CertCase::kRationalCase1;
};

// Builds a certificate for alpha^2 = a/b, a, b >= 1 coprime (NotCoprime
// otherwise). Picks the smallest usable prime, so M <= 83^2 = 6889 always.
AlphaCertificate certify_rational(const BigInt& a, const BigInt& b);

struct CertCheck {
    bool ok = false;
    // Human-readable lines; when !ok the last line names the first violated
    // condition.
    std::vector<std::string> transcript;
};

// Re-checks every certificate condition by exact arithmetic, including the
// palette cover for cert.p (the nonzero-square variant when epsilon > 0).
CertCheck verify_certificate(const AlphaCertificate& cert);

}  // namespace apramsey
