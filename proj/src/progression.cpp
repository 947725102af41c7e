#include "apramsey/progression.hpp"

#include "apramsey/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <thread>

namespace apramsey {

ColoringSpec::ColoringSpec(int p_, int d_, ResidueSet set_) : p(p_), d(d_), set(std::move(set_)) {
    if (p < 2) throw ParameterOutOfRange("coloring modulus p must be at least 2");
    if (d < 1) throw ParameterOutOfRange("coloring multiplier d must be positive");
    if (set.modulus() != p) throw ParameterOutOfRange("set modulus must equal p");
}

const char* to_string(CoverFailure f) {
    switch (f) {
        case CoverFailure::kK0Empty: return "K0-empty";
        case CoverFailure::kK1Empty: return "K1-empty";
        case CoverFailure::kMinK0AboveMaxK1: return "min(K0)>max(K1)";
        case CoverFailure::kMinK1AboveMaxK0: return "min(K1)>max(K0)";
    }
    return "?";
}

std::optional<CoverFailure> cover_failure_from_string(const std::string& name) {
    for (auto f : {CoverFailure::kK0Empty, CoverFailure::kK1Empty,
                   CoverFailure::kMinK0AboveMaxK1, CoverFailure::kMinK1AboveMaxK0})
        if (name == to_string(f)) return f;
    return std::nullopt;
}

int resolve_jobs(int jobs) {
    if (jobs > 0) return std::min(jobs, 256);
    if (const char* env = std::getenv("APRAMSEY_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return std::min(v, 256);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(std::min(hw, 32u)) : 1;
}

namespace {

// Rejects parameters whose worst-case cell value |d*m*k^2 + b0*k + c0 - i|
// could leave the 64-bit kernel. Guaranteed envelope: p <= 512, d <= p,
// n <= 1000.
void check_envelope(const ColoringSpec& spec, int n) {
    using I128 = __int128;
    const I128 m_max = 2 * static_cast<I128>(n) + 1;
    const I128 bound = static_cast<I128>(spec.d) * m_max * n * n  // d*m*k^2
                     + m_max * spec.p * n                         // b0*k
                     + m_max * spec.p + 2;                        // c0, the i shift, the c = -1 start
    if (bound > static_cast<I128>(std::numeric_limits<std::int64_t>::max() / 4))
        throw OverflowEnvelopeExceeded("(p, d, N) leave the 64-bit evaluation envelope");
}

inline int find_first_bit(const std::uint64_t* w, int words) {
    for (int i = 0; i < words; ++i)
        if (w[i]) return (i << 6) + std::countr_zero(w[i]);
    return -1;
}

inline int find_last_bit(const std::uint64_t* w, int words) {
    for (int i = words - 1; i >= 0; --i)
        if (w[i]) return (i << 6) + 63 - std::countl_zero(w[i]);
    return -1;
}

struct SweepWorkspace {
    std::vector<std::int64_t> q;       // d*m*k^2 + b0*k
    std::vector<int> residue;          // current floor value mod p, per k
    std::vector<int> bucket_head;      // k grouped by q[k] mod m
    std::vector<int> bucket_next;
    std::vector<std::uint64_t> mask;   // bit k set iff residue[k] in S
};

// Scans all cells (m, b0, c0), c0 = 0..m*p, for one fixed (m, b0) and
// returns the first failing cell, if any.
//
// Write A(c) = { k : floor((q_k + c)/m) mod p in S }; then K0 of cell c0 is
// A(c0) and K1 is A(c0 - 1), so a single sweep of c from -1 to m*p visits
// every cell. Stepping c by one bumps floor((q_k + c)/m) exactly for the k
// with q_k + c == 0 (mod m), so each k is touched once every m steps.
std::optional<Counterexample> sweep_block(const ColoringSpec& spec, int n, std::int64_t m,
                                          std::int64_t b0, SweepWorkspace& ws) {
    const int p = spec.p;
    const auto& members = spec.set;
    const int nk = n + 1;
    const int words = (nk + 63) >> 6;

    ws.q.resize(nk);
    ws.residue.resize(nk);
    ws.bucket_head.assign(static_cast<std::size_t>(m), -1);
    ws.bucket_next.resize(nk);
    ws.mask.assign(words, 0);

    const std::int64_t dm = static_cast<std::int64_t>(spec.d) * m;
    for (int k = 0; k < nk; ++k) {
        const std::int64_t qk = dm * k * k + b0 * k;
        ws.q[k] = qk;
        const int slot = static_cast<int>(qk % m);
        ws.bucket_next[k] = ws.bucket_head[slot];
        ws.bucket_head[slot] = k;
        const int rho = static_cast<int>(mod_floor(floor_div(qk - 1, m), p));
        ws.residue[k] = rho;
        if (members.contains(rho)) ws.mask[k >> 6] |= std::uint64_t{1} << (k & 63);
    }

    int prev_first = find_first_bit(ws.mask.data(), words);
    int prev_last = prev_first < 0 ? -1 : find_last_bit(ws.mask.data(), words);

    const std::int64_t c_max = m * p;
    for (std::int64_t c0 = 0; c0 <= c_max; ++c0) {
        const int slot = static_cast<int>(mod_floor(-c0, m));
        for (int k = ws.bucket_head[slot]; k != -1; k = ws.bucket_next[k]) {
            int rho = ws.residue[k] + 1;
            if (rho == p) rho = 0;
            ws.residue[k] = rho;
            const std::uint64_t bit = std::uint64_t{1} << (k & 63);
            if (members.contains(rho))
                ws.mask[k >> 6] |= bit;
            else
                ws.mask[k >> 6] &= ~bit;
        }
        const int cur_first = find_first_bit(ws.mask.data(), words);
        if (cur_first < 0)
            return Counterexample{m, b0, c0, CoverFailure::kK0Empty};
        if (prev_first < 0)
            return Counterexample{m, b0, c0, CoverFailure::kK1Empty};
        const int cur_last = find_last_bit(ws.mask.data(), words);
        if (cur_first > prev_last)
            return Counterexample{m, b0, c0, CoverFailure::kMinK0AboveMaxK1};
        if (prev_first > cur_last)
            return Counterexample{m, b0, c0, CoverFailure::kMinK1AboveMaxK0};
        prev_first = cur_first;
        prev_last = cur_last;
    }
    return std::nullopt;
}

}  // namespace

KSets k_sets(const ColoringSpec& spec, int n, std::int64_t m, std::int64_t b0, std::int64_t c0) {
    if (n < 1) throw ParameterOutOfRange("k_sets requires N >= 1");
    if (m < 1 || m > 2 * static_cast<std::int64_t>(n) + 1)
        throw ParameterOutOfRange("m outside [1, 2N+1]");
    const std::int64_t mp = m * spec.p;
    if (b0 < 0 || b0 > mp) throw ParameterOutOfRange("b0 outside [0, m*p]");
    if (c0 < 0 || c0 > mp) throw ParameterOutOfRange("c0 outside [0, m*p]");
    check_envelope(spec, n);

    KSets out;
    const std::int64_t dm = static_cast<std::int64_t>(spec.d) * m;
    for (int k = 0; k <= n; ++k) {
        const std::int64_t base = dm * k * k + b0 * k + c0;
        for (int i = 0; i < 2; ++i) {
            const int rho = static_cast<int>(mod_floor(floor_div(base - i, m), spec.p));
            if (spec.set.contains(rho)) (i == 0 ? out.k0 : out.k1).push_back(k);
        }
    }
    return out;
}

CoverOutcome covers(const ColoringSpec& spec, int n, int jobs) {
    if (n < 1) throw ParameterOutOfRange("covers requires N >= 1");
    check_envelope(spec, n);

    const std::int64_t p = spec.p;
    const std::int64_t m_max = 2 * static_cast<std::int64_t>(n) + 1;

    int workers = resolve_jobs(jobs);
    if (workers == 1) {
        SweepWorkspace ws;
        for (std::int64_t m = 1; m <= m_max; ++m)
            for (std::int64_t b0 = 0; b0 <= m * p; ++b0)
                if (auto cex = sweep_block(spec, n, m, b0, ws)) return {false, *cex};
        return {true, std::nullopt};
    }

    // Linear task index over the (m, b0) grid in iteration order; offsets
    // let workers decode an index without materializing the grid.
    std::vector<std::uint64_t> offset(static_cast<std::size_t>(m_max) + 1);
    std::uint64_t total = 0;
    for (std::int64_t m = 1; m <= m_max; ++m) {
        offset[m - 1] = total;
        total += static_cast<std::uint64_t>(m * p + 1);
    }
    offset[m_max] = total;
    workers = static_cast<int>(std::min<std::uint64_t>(workers, total));

    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    std::mutex mu;
    std::optional<Counterexample> best_cex;

    auto run = [&] {
        SweepWorkspace ws;
        for (;;) {
            const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= total) return;
            // Tasks are claimed in increasing order, so once a failure at a
            // smaller index is known everything beyond it is irrelevant.
            if (i > best.load(std::memory_order_relaxed)) return;
            const auto it = std::upper_bound(offset.begin(), offset.end(), i);
            const std::int64_t m = it - offset.begin();
            const std::int64_t b0 = static_cast<std::int64_t>(i - offset[m - 1]);
            if (auto cex = sweep_block(spec, n, m, b0, ws)) {
                std::lock_guard<std::mutex> lock(mu);
                if (i < best.load(std::memory_order_relaxed)) {
                    best.store(i, std::memory_order_relaxed);
                    best_cex = *cex;
                }
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();

    if (best_cex) return {false, *best_cex};
    return {true, std::nullopt};
}

std::optional<int> min_cover_n(const ColoringSpec& spec, int n_max, int jobs) {
    if (n_max < 1) throw ParameterOutOfRange("min_cover_n requires N_max >= 1");
    for (int n = 1; n <= n_max; ++n)
        if (covers(spec, n, jobs).holds) return n;
    return std::nullopt;
}

int orbit_residue(const ColoringSpec& spec, const Rational& b, const Rational& c, int k) {
    const Rational value = (Rational(k) * k + b * k + c) * spec.d;
    return static_cast<int>(mod_floor(floor_rational(value), BigInt(spec.p)));
}

bool witness_avoids(const ColoringSpec& spec, int n, const Rational& b, const Rational& c) {
    for (int k = 0; k <= n; ++k)
        if (spec.set.contains(orbit_residue(spec, b, c, k))) return false;
    return true;
}

RealWitness real_witness(const ColoringSpec& spec, int n, const Counterexample& cex) {
    const KSets ks = k_sets(spec, n, cex.m, cex.b0, cex.c0);  // also validates cell ranges

    bool refails = false;
    switch (cex.failure) {
        case CoverFailure::kK0Empty: refails = ks.k0.empty(); break;
        case CoverFailure::kK1Empty: refails = ks.k1.empty(); break;
        case CoverFailure::kMinK0AboveMaxK1:
            refails = !ks.k0.empty() && !ks.k1.empty() && ks.k0.front() > ks.k1.back();
            break;
        case CoverFailure::kMinK1AboveMaxK0:
            refails = !ks.k0.empty() && !ks.k1.empty() && ks.k1.front() > ks.k0.back();
            break;
    }
    if (!refails)
        throw WitnessConstructionFailed("cell does not re-fail with the recorded failure kind");

    const Rational md = Rational(cex.m) * spec.d;
    const Rational step = Rational(1) / (md * (n + 1));
    Rational b, c;
    switch (cex.failure) {
        case CoverFailure::kK0Empty:
            // The empty K-set already lists every floor the real orbit takes;
            // no perturbation is needed (and a shift could move a floor that
            // sits exactly on an integer).
            b = Rational(cex.b0) / md;
            c = Rational(cex.c0) / md;
            break;
        case CoverFailure::kK1Empty:
            b = Rational(cex.b0) / md;
            c = Rational(cex.c0 - 1) / md;
            break;
        case CoverFailure::kMinK0AboveMaxK1: {
            // Orbit tracks K0 floors up to r = max(K1) and K1 floors after;
            // both windows miss S because min(K0) > r.
            const int r = ks.k1.back();
            b = Rational(cex.b0) / md - step;
            c = Rational(cex.c0) / md + Rational(r) * step;
            break;
        }
        case CoverFailure::kMinK1AboveMaxK0: {
            const int r = ks.k0.back();
            b = Rational(cex.b0) / md + step;
            c = Rational(cex.c0) / md - Rational(r + 1) * step;
            break;
        }
    }

    if (!witness_avoids(spec, n, b, c))
        throw WitnessConstructionFailed("constructed witness failed exact validation");
    return {b, c, n};
}

}  // namespace apramsey
