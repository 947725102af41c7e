#pragma once

#include "apramsey/coloring.hpp"
#include "apramsey/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace apramsey {

enum class CoverFailure {
    kK0Empty,
    kK1Empty,
    kMinK0AboveMaxK1,
    kMinK1AboveMaxK0,
};

// Wire names: "K0-empty", "K1-empty", "min(K0)>max(K1)", "min(K1)>max(K0)".
const char* to_string(CoverFailure f);
std::optional<CoverFailure> cover_failure_from_string(const std::string& name);

struct Counterexample {
    std::int64_t m = 0;
    std::int64_t b0 = 0;
    std::int64_t c0 = 0;
    CoverFailure failure = CoverFailure::kK0Empty;

    bool operator==(const Counterexample&) const = default;
};

struct CoverOutcome {
    bool holds = false;
    std::optional<Counterexample> counterexample;
};

struct KSets {
    std::vector<int> k0;
    std::vector<int> k1;
};

// K_i = { 0 <= k <= n : floor((d*m*k^2 + b0*k + c0 - i) / m) mod p in S },
// i in {0, 1}. Requires 1 <= m <= 2n+1 and 0 <= b0, c0 <= m*p.
KSets k_sets(const ColoringSpec& spec, int n, std::int64_t m, std::int64_t b0, std::int64_t c0);

// Decides whether every orbit floor(d*(k^2 + b*k + c)), k = 0..n, with real
// coefficients b, c meets S mod p. Equivalent finite form: for every cell
// (m, b0, c0) with 1 <= m <= 2n+1, 0 <= b0 <= m*p, 0 <= c0 <= m*p, both
// K-sets are nonempty and min(K_i) <= max(K_{1-i}). On failure the FIRST
// failing cell in (m asc, b0 asc, c0 asc) order is reported, with failure
// kinds tried in enum order. The result is bit-identical for every jobs
// value; jobs only shards the (m, b0) grid.
//
// All cell arithmetic runs in 64-bit integers. The guaranteed envelope is
// p <= 512 (type cap), d <= p, n <= 1000; anything whose worst-case cell
// value would leave int64 raises OverflowEnvelopeExceeded instead of
// wrapping.
CoverOutcome covers(const ColoringSpec& spec, int n, int jobs = 0);

// Smallest 1 <= n <= n_max with covers(spec, n).holds, scanning upward
// (monotone in n, so the first hit is the minimum).
std::optional<int> min_cover_n(const ColoringSpec& spec, int n_max, int jobs = 0);

struct RealWitness {
    Rational b;
    Rational c;
    int n = 0;
};

// floor(d*(k^2 + b*k + c)) mod p in exact rational arithmetic.
int orbit_residue(const ColoringSpec& spec, const Rational& b, const Rational& c, int k);

// True when the whole orbit k = 0..n stays outside S mod p.
bool witness_avoids(const ColoringSpec& spec, int n, const Rational& b, const Rational& c);

// Reconstructs explicit real coefficients (b, c) from a failed cover cell:
// an empty K_i lifts directly to b = b0/(m*d), c = (c0-i)/(m*d); an ordering
// failure perturbs by 1/(m*d*(n+1)) toward the gap. The result is validated
// by exact evaluation of all n+1 floors before returning
// (WitnessConstructionFailed otherwise).
RealWitness real_witness(const ColoringSpec& spec, int n, const Counterexample& cex);

// jobs <= 0 resolves to $APRAMSEY_JOBS, falling back to the hardware count.
int resolve_jobs(int jobs);

}  // namespace apramsey
