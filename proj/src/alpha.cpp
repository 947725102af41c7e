#include "apramsey/alpha.hpp"

#include "apramsey/errors.hpp"

#include <sstream>

namespace apramsey {

namespace {

constexpr std::array<int, 7> kPrimes{47, 59, 67, 71, 73, 79, 83};

}  // namespace

const std::array<RedPalette, 7>& certificate_palettes() {
    static const std::array<RedPalette, 7> table = [] {
        auto fives = [](int p, int last) {
            ResidueSet s(p);
            for (int r = 0; r <= last; r += 5) s.insert(r);
            return s;
        };
        return std::array<RedPalette, 7>{{
            {47, fives(47, 20)},
            {59, fives(59, 25)},
            {67, fives(67, 30)},
            {71, fives(71, 30)},
            {73, fives(73, 30)},
            {79, fives(79, 30)},
            {83, fives(83, 35)},
        }};
    }();
    return table;
}

const RedPalette* palette_for_prime(int p) {
    for (const auto& pal : certificate_palettes())
        if (pal.p == p) return &pal;
    return nullptr;
}

bool shifted_residue_cover(int p, const ResidueSet& s, bool nonzero_only) {
    if (s.modulus() != p) throw ParameterOutOfRange("set modulus must equal p");
    const ResidueSet squares = quadratic_residues(p, !nonzero_only);

    int non_square = 0;
    {
        const ResidueSet all_squares = quadratic_residues(p, true);
        for (int x = 1; x < p; ++x)
            if (!all_squares.contains(x)) {
                non_square = x;
                break;
            }
    }

    for (int b : {1, non_square}) {
        ResidueSet image(p);
        for (int r : squares.elements())
            image.insert(static_cast<int>((static_cast<long long>(b) * r) % p));
        for (int c = 0; c < p; ++c)
            if (image.translate(c).disjoint_with(s)) return false;
    }
    return true;
}

bool red_interval_condition(const Rational& x, int p) {
    if (p < 2) throw ParameterOutOfRange("modulus must be at least 2");
    // x - j*p in [1, 3/2] for j = floor((x - 1) / p), the only candidate.
    const BigInt j = floor_rational((x - 1) / p);
    const Rational shifted = x - Rational(j) * p;
    return shifted >= 1 && 2 * shifted <= 3;
}

const char* to_string(CertCase c) {
    switch (c) {
        case CertCase::kRationalCase1: return "rational-case1";
        case CertCase::kRationalCase2: return "rational-case2";
        case CertCase::kRationalCase3: return "rational-case3";
        case CertCase::kFinalCase: return "final-case";
    }
    return "?";
}

AlphaCertificate certify_rational(const BigInt& a, const BigInt& b) {
    if (a < 1 || b < 1) throw ParameterOutOfRange("alpha^2 = a/b needs a, b >= 1");
    if (gcd(a, b) != 1) throw NotCoprime("a/b must be in lowest terms");

    AlphaCertificate cert;
    cert.alpha_sq = Rational(a, b);

    int chosen = 0;
    for (int p : kPrimes)
        if (b % p != 0) {
            chosen = p;
            break;
        }

    if (chosen != 0) {
        cert.p = chosen;
        cert.M = static_cast<long>(chosen) * chosen;
        cert.epsilon = 0;
        if (a % chosen != 0) {
            // alpha_red^2 = b*m == 1 (mod p)
            cert.case_tag = CertCase::kRationalCase1;
            const BigInt m = mod_inverse(b, chosen);
            cert.alpha_blue_sq = Rational(a * m);
            cert.alpha_red_sq = Rational(b * m);
            cert.b_int = a * m;
        } else {
            // p | a: invert b modulo a*p, then alpha_red^2 == 1 + 1/a (mod p)
            cert.case_tag = CertCase::kRationalCase2;
            const BigInt m = mod_inverse(b, a * chosen);
            cert.alpha_blue_sq = Rational((a + 1) * m);
            cert.alpha_red_sq = Rational((a + 1) * b * m, a);
            cert.b_int = (a + 1) * m;
        }
    } else if (a >= 63) {
        // every table prime divides b; spread a/b by pmr/a with r = ceil(a/p)
        cert.case_tag = CertCase::kRationalCase3;
        const int p = 47;
        cert.p = p;
        cert.M = static_cast<long>(p) * p;
        cert.epsilon = 0;
        const BigInt r = (a + p - 1) / p;
        if (!(a <= p * r && 2 * p * r <= 3 * a))
            throw ConstructionInvalid("case 3 ratio r/a escaped [1/p, 1.5/p]");
        const BigInt m = mod_inverse(b, a);
        const Rational x(b * p * m * r, a);
        const BigInt n_shift = floor_rational((x - 1) / p);
        if (!(Rational(n_shift) * p + 1 <= x && 2 * x <= 2 * (Rational(n_shift) * p) + 3))
            throw ConstructionInvalid("case 3 shift landed outside [pN+1, pN+1.5]");
        cert.alpha_blue_sq = Rational(a + p * m * r);
        cert.alpha_red_sq = Rational(b) + x;
        cert.b_int = a + p * m * r;
    } else {
        // a <= 62 and all seven primes divide b: b is large enough that the
        // fractional part a/b fits under the epsilon bound for p = 59.
        cert.case_tag = CertCase::kFinalCase;
        cert.p = 59;
        cert.M = 2L * 59 * 59 - 2 * 59 + 1;
        cert.alpha_blue_sq = Rational(a * b + a, b);
        cert.alpha_red_sq = Rational(b + 1);
        cert.b_int = a;
        cert.epsilon = Rational(a, b);
    }

    const CertCheck check = verify_certificate(cert);
    if (!check.ok)
        throw ConstructionInvalid("constructed certificate failed verification: " +
                                  (check.transcript.empty() ? std::string("?") : check.transcript.back()));
    return cert;
}

CertCheck verify_certificate(const AlphaCertificate& cert) {
    CertCheck out;
    auto fail = [&](const std::string& what) {
        out.ok = false;
        out.transcript.push_back(what);
        return out;
    };

    const RedPalette* palette = palette_for_prime(cert.p);
    if (palette == nullptr) return fail("prime " + std::to_string(cert.p) + " is not in the palette table");
    out.transcript.push_back("prime p = " + std::to_string(cert.p) + ", palette S = {" +
                             to_string(palette->set) + "}");

    if (cert.alpha_red_sq <= 0 || cert.alpha_blue_sq <= 0)
        return fail("alpha_red^2 and alpha_blue^2 must be positive");
    if (cert.alpha_blue_sq != cert.alpha_sq * cert.alpha_red_sq)
        return fail("ratio mismatch: alpha_blue^2 != alpha^2 * alpha_red^2");
    out.transcript.push_back("exact ratio alpha_blue^2 / alpha_red^2 = " + to_string(cert.alpha_sq));

    if (!red_interval_condition(cert.alpha_red_sq, cert.p))
        return fail("red interval condition violated: alpha_red^2 not in [1, 1.5] mod p");
    out.transcript.push_back("alpha_red^2 = " + to_string(cert.alpha_red_sq) + " lies in [1, 1.5] mod p");

    if (cert.alpha_blue_sq != Rational(cert.b_int) + cert.epsilon)
        return fail("blue decomposition violated: alpha_blue^2 != b + epsilon");
    if (cert.epsilon < 0) return fail("epsilon must be nonnegative");
    if (cert.b_int < 1) return fail("integer part of alpha_blue^2 must be positive");
    if (cert.b_int % cert.p == 0) return fail("p divides the integer part of alpha_blue^2");

    BigInt p5 = cert.p;
    p5 = p5 * p5 * p5 * p5 * p5;
    if (cert.epsilon * 4 * p5 > 1) return fail("epsilon bound violated: epsilon > 1/(4p^5)");
    out.transcript.push_back("alpha_blue^2 = " + cert.b_int.str() + " + " + to_string(cert.epsilon) +
                             ", integer part coprime to p, epsilon <= 1/(4p^5)");

    if (cert.epsilon == 0) {
        if (cert.M != static_cast<long>(cert.p) * cert.p)
            return fail("M must equal p^2 when epsilon = 0");
    } else {
        if (cert.p != 59) return fail("epsilon > 0 requires p = 59");
        if (cert.M != 6845) return fail("M must equal 2p^2 - 2p + 1 = 6845 when epsilon > 0");
    }

    if (!shifted_residue_cover(cert.p, palette->set, false))
        return fail("palette cover (squares incl. 0) failed");
    if (cert.epsilon > 0 && !shifted_residue_cover(cert.p, palette->set, true))
        return fail("palette cover (nonzero squares) failed");

    std::ostringstream branch;
    if (cert.epsilon == 0)
        branch << "epsilon = 0: shifted squares incl. 0 are covered, M = p^2 = " << cert.M;
    else
        branch << "epsilon > 0, p = 59: shifted nonzero squares are covered, M = 2p^2-2p+1 = " << cert.M;
    branch << " (" << to_string(cert.case_tag) << ")";
    out.transcript.push_back(branch.str());

    out.ok = true;
    return out;
}

}  // namespace apramsey
