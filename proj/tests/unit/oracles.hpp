#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately naive: plain loops over the published definitions, no
// incremental state, so they cross-check the production kernels.

#include "apramsey/alpha.hpp"
#include "apramsey/progression.hpp"

#include <optional>

namespace apramsey::testing {

// Direct cell-by-cell evaluation of the cover condition via k_sets.
inline CoverOutcome covers_reference(const ColoringSpec& spec, int n) {
    for (std::int64_t m = 1; m <= 2 * static_cast<std::int64_t>(n) + 1; ++m)
        for (std::int64_t b0 = 0; b0 <= m * spec.p; ++b0)
            for (std::int64_t c0 = 0; c0 <= m * spec.p; ++c0) {
                const KSets ks = k_sets(spec, n, m, b0, c0);
                std::optional<CoverFailure> failure;
                if (ks.k0.empty())
                    failure = CoverFailure::kK0Empty;
                else if (ks.k1.empty())
                    failure = CoverFailure::kK1Empty;
                else if (ks.k0.front() > ks.k1.back())
                    failure = CoverFailure::kMinK0AboveMaxK1;
                else if (ks.k1.front() > ks.k0.back())
                    failure = CoverFailure::kMinK1AboveMaxK0;
                if (failure) return {false, Counterexample{m, b0, c0, *failure}};
            }
    return {true, std::nullopt};
}

// The full-b cover statement, without the two-representative reduction.
inline bool shifted_residue_cover_all_b(int p, const ResidueSet& s, bool nonzero_only) {
    const ResidueSet squares = quadratic_residues(p, !nonzero_only);
    for (int b = 1; b < p; ++b) {
        ResidueSet image(p);
        for (int r : squares.elements())
            image.insert(static_cast<int>((static_cast<long long>(b) * r) % p));
        for (int c = 0; c < p; ++c)
            if (image.translate(c).disjoint_with(s)) return false;
    }
    return true;
}

inline long long modpow(long long base, long long exp, long long mod) {
    long long acc = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return acc;
}

}  // namespace apramsey::testing
