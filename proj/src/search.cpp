#include "apramsey/search.hpp"

#include "apramsey/errors.hpp"

#include <atomic>
#include <thread>

namespace apramsey {

namespace {

bool default_d_rule(int p, int d) { return d <= p / 2; }

// Red-side admissibility: no monochromatic progression of red_length in the
// S color. The direct triple test is used for length 3; everything else
// goes through covers on the complement.
bool red_side_ok(int p, int d, const ResidueSet& s, int red_length) {
    const ColoringSpec spec(p, d, s);
    if (red_length == 3) return red_l3_free_direct(spec);
    return covers(ColoringSpec(p, d, s.complement()), red_length - 1, 1).holds;
}

struct PairSearcher {
    int p;
    int d;
    int red_length;
    int max_size;
    int n_cap;
    bool prune;
    std::vector<SearchRecord>* out;

    void consider(const ResidueSet& s) const {
        if (!(s == s.canonical_translate())) return;
        const ColoringSpec spec(p, d, s);
        // Monotone screen: a set that fails at n_cap fails below it too, and
        // failing covers calls exit at the first bad cell.
        if (!covers(spec, n_cap, 1).holds) return;
        const auto mn = min_cover_n(spec, n_cap, 1);
        const int best = *mn + 1;
        const bool sound = covers(ColoringSpec(p, d, s.complement()), red_length - 1, 1).holds &&
                           covers(spec, best - 1, 1).holds;
        if (!sound) throw Error("search emitted a record that does not re-verify");
        out->push_back({spec, red_length, best});
    }

    void grow(ResidueSet& s, int last, int size) const {
        const bool ok = red_side_ok(p, d, s, red_length);
        if (!ok && prune) return;
        if (ok) consider(s);
        if (size >= max_size) return;
        for (int e = last + 1; e < p; ++e) {
            s.insert(e);
            grow(s, e, size + 1);
            s.erase(e);
        }
    }

    // root = -1 runs just the singleton {0}; root = e runs the subtree of
    // sets whose second element is e.
    void run(int root) const {
        ResidueSet s(p);
        s.insert(0);
        if (root < 0) {
            if (red_side_ok(p, d, s, red_length)) consider(s);
            return;
        }
        if (max_size < 2) return;
        s.insert(root);
        grow(s, root, 2);
    }
};

template <typename Record, typename Runner>
void run_sharded(int shards, int workers, const Runner& runner,
                 const std::function<void(const Record&)>& emit) {
    std::vector<std::vector<Record>> results(shards);
    if (workers <= 1 || shards <= 1) {
        for (int i = 0; i < shards; ++i) runner(i, results[i]);
    } else {
        std::atomic<int> next{0};
        auto work = [&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= shards) return;
                runner(i, results[i]);
            }
        };
        std::vector<std::thread> pool;
        const int n = std::min(workers, shards);
        pool.reserve(n);
        for (int w = 0; w < n; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (const auto& shard : results)
        for (const auto& rec : shard) emit(rec);
}

}  // namespace

void search_pairs(const SearchSpace& space, const std::function<void(const SearchRecord&)>& emit,
                  int jobs, bool prune) {
    if (space.p_lo < 2 || space.p_lo > space.p_hi)
        throw ParameterOutOfRange("empty or invalid p range");
    if (space.max_set_size < 1) throw ParameterOutOfRange("max set size must be positive");
    if (space.red_length < 2) throw ParameterOutOfRange("red length must be at least 2");
    if (space.n_cap < 1) throw ParameterOutOfRange("n_cap must be positive");

    const int workers = resolve_jobs(jobs);
    auto d_ok = [&](int p, int d) { return space.d_rule ? space.d_rule(p, d) : default_d_rule(p, d); };

    for (int p = space.p_lo; p <= space.p_hi; ++p) {
        for (int d = 1; d < p; ++d) {
            if (!d_ok(p, d)) continue;
            // shard the subset tree by the second element of S
            const int shards = space.max_set_size >= 2 ? p : 1;
            PairSearcher searcher{p, d, space.red_length, space.max_set_size,
                                  space.n_cap, prune, nullptr};
            run_sharded<SearchRecord>(
                shards, workers,
                [&](int shard, std::vector<SearchRecord>& out) {
                    PairSearcher local = searcher;
                    local.out = &out;
                    // shard 0 is the singleton {0}; shard e >= 1 is the
                    // subtree of sets whose second element is e
                    local.run(shard == 0 ? -1 : shard);
                },
                emit);
        }
    }
}

std::vector<SearchRecord> search_pairs(const SearchSpace& space, int jobs, bool prune) {
    std::vector<SearchRecord> out;
    search_pairs(space, [&](const SearchRecord& r) { out.push_back(r); }, jobs, prune);
    return out;
}

namespace {

struct MultiSearcher {
    int p;
    int d;
    std::vector<int> lengths;  // r1, r2, blue cap
    int max_first;
    int max_second;
    bool prune;
    std::vector<MultiSearchRecord>* out;

    bool is_joint_canonical(const ResidueSet& s, const ResidueSet& t) const {
        for (int shift = 1; shift < p; ++shift) {
            const ResidueSet ss = s.translate(shift);
            if (ss.lex_less(s)) return false;
            if (ss == s && t.translate(shift).lex_less(t)) return false;
        }
        return true;
    }

    void consider(const ResidueSet& s, const ResidueSet& t) const {
        if (!is_joint_canonical(s, t)) return;
        const ResidueSet all = s.united(t);
        const ColoringSpec blue(p, d, all);
        if (!covers(blue, lengths[2] - 1, 1).holds) return;
        const auto mn = min_cover_n(blue, lengths[2] - 1, 1);
        const int best = *mn + 1;
        if (!verify_multi(p, d, {s, t}, {lengths[0], lengths[1], best}, 1).verified)
            throw Error("search emitted a record that does not re-verify");
        out->push_back({p, d, s, t, {lengths[0], lengths[1], best}});
    }

    void grow_second(const ResidueSet& s, ResidueSet& t, int last, int size) const {
        if (!t.empty()) {
            const bool ok = red_side_ok(p, d, t, lengths[1]);
            if (!ok && prune) return;
            if (ok) consider(s, t);
        }
        if (size >= max_second) return;
        for (int e = last + 1; e < p; ++e) {
            if (s.contains(e)) continue;
            t.insert(e);
            grow_second(s, t, e, size + 1);
            t.erase(e);
        }
    }

    void grow_first(ResidueSet& s, int last, int size) const {
        const bool ok = red_side_ok(p, d, s, lengths[0]);
        if (!ok && prune) return;
        if (ok) {
            ResidueSet t(p);
            grow_second(s, t, 0, 0);
        }
        if (size >= max_first) return;
        for (int e = last + 1; e < p; ++e) {
            s.insert(e);
            grow_first(s, e, size + 1);
            s.erase(e);
        }
    }

    void run() const {
        ResidueSet s(p);
        s.insert(0);
        grow_first(s, 0, 1);
    }
};

}  // namespace

void search_multi(const MultiSearchSpace& space,
                  const std::function<void(const MultiSearchRecord&)>& emit, int jobs, bool prune) {
    if (space.p_lo < 2 || space.p_lo > space.p_hi)
        throw ParameterOutOfRange("empty or invalid p range");
    if (space.max_first < 1 || space.max_second < 1)
        throw ParameterOutOfRange("palette size caps must be positive");
    if (space.lengths.size() != 3)
        throw ParameterOutOfRange("multi search expects exactly three lengths");
    for (int len : space.lengths)
        if (len < 2) throw ParameterOutOfRange("progression lengths must be at least 2");

    const int workers = resolve_jobs(jobs);
    auto d_ok = [&](int p, int d) { return space.d_rule ? space.d_rule(p, d) : default_d_rule(p, d); };

    std::vector<std::pair<int, int>> grid;
    for (int p = space.p_lo; p <= space.p_hi; ++p)
        for (int d = 1; d < p; ++d)
            if (d_ok(p, d)) grid.emplace_back(p, d);

    run_sharded<MultiSearchRecord>(
        static_cast<int>(grid.size()), workers,
        [&](int shard, std::vector<MultiSearchRecord>& out) {
            MultiSearcher searcher{grid[shard].first, grid[shard].second, space.lengths,
                                   space.max_first,   space.max_second,   prune,
                                   &out};
            searcher.run();
        },
        emit);
}

std::vector<MultiSearchRecord> search_multi(const MultiSearchSpace& space, int jobs, bool prune) {
    std::vector<MultiSearchRecord> out;
    search_multi(space, [&](const MultiSearchRecord& r) { out.push_back(r); }, jobs, prune);
    return out;
}

}  // namespace apramsey
