#pragma once

#include "apramsey/verifier.hpp"

#include <functional>
#include <vector>

namespace apramsey {

struct SearchSpace {
    int p_lo = 3;
    int p_hi = 3;
    // d values to try for a given p; empty keeps the default 1 <= d <= p/2.
    std::function<bool(int p, int d)> d_rule;
    int max_set_size = 1;
    int red_length = 3;
    int n_cap = 40;
};

struct SearchRecord {
    ColoringSpec spec;
    int red_length;
    int best_blue;  // minimal s such that the claim (red_length, s) verifies
};

// Depth-first growth over canonical-translate representatives S. Every S
// that avoids red progressions of red_length and admits a covering window
// <= n_cap is re-verified from scratch and emitted, ordered by (p, d, S).
// Supersets of a red-failing S red-fail too, so pruning never drops a
// candidate; prune = false exists to test exactly that. Output is
// independent of jobs.
void search_pairs(const SearchSpace& space, const std::function<void(const SearchRecord&)>& emit,
                  int jobs = 0, bool prune = true);
std::vector<SearchRecord> search_pairs(const SearchSpace& space, int jobs = 0, bool prune = true);

struct MultiSearchSpace {
    int p_lo = 3;
    int p_hi = 3;
    std::function<bool(int p, int d)> d_rule;
    int max_first = 1;
    int max_second = 1;
    std::vector<int> lengths;  // exactly three entries; the last caps the blue length
};

struct MultiSearchRecord {
    int p;
    int d;
    ResidueSet first;
    ResidueSet second;
    std::vector<int> lengths;  // realized lengths; last entry is the best blue
};

// Enumerates disjoint (S, T) pairs up to joint translation, ordered by
// (p, d, S, T).
void search_multi(const MultiSearchSpace& space,
                  const std::function<void(const MultiSearchRecord&)>& emit, int jobs = 0,
                  bool prune = true);
std::vector<MultiSearchRecord> search_multi(const MultiSearchSpace& space, int jobs = 0,
                                            bool prune = true);

}  // namespace apramsey
