#pragma once

#include "apramsey/progression.hpp"

#include <string>
#include <vector>

namespace apramsey {

// Claim "no monochromatic unit progression of length red_len in the S color
// and none of length blue_len in the complement color", any dimension.
struct PairClaim {
    ColoringSpec spec;
    int red_len;
    int blue_len;

    // Lengths are normalized so red_len <= blue_len.
    PairClaim(ColoringSpec spec_, int red_len_, int blue_len_);
};

struct CheckRecord {
    std::string name;
    ResidueSet set;
    int n;  // cover window, or -1 for direct residue tests
    CoverOutcome outcome;
};

struct VerifyResult {
    bool verified = false;
    std::vector<CheckRecord> checks;
};

// covers(S', red_len - 1) && covers(S, blue_len - 1).
VerifyResult verify_pair(const PairClaim& claim, int jobs = 0);

// t-coloring: palettes S_1..S_{t-1} must be pairwise disjoint; color i
// avoids lengths[i-1] via covers(S_i', .), the final color avoids
// lengths[t-1] via covers(S_1 u ... u S_{t-1}, .).
VerifyResult verify_multi(int p, int d, const std::vector<ResidueSet>& palettes,
                          const std::vector<int>& lengths, int jobs = 0);

// No triple s1, s2, s3 in S (repetition allowed) with
// s1 - 2*s2 + s3 - 2d in {-1, 0, 1} mod p: exactly the triples a red
// 3-term unit progression would produce in floor(d*|x|^2) values.
bool red_l3_free_direct(const ColoringSpec& spec);

// Parallelograms whose diagonal lengths a, b satisfy (a^2 - b^2)/2 = gamma.
struct ParallelogramFamily {
    int gamma;
};

// No quadruple s1 + s2 - s3 - s4 - d*gamma in {-1, 0, 1} mod p.
bool parallelogram_free(const ColoringSpec& spec, ParallelogramFamily family);

// parallelogram_free(spec, gamma) && covers(S, m - 1).
VerifyResult verify_parallelogram_claim(const ColoringSpec& spec, int gamma, int m, int jobs = 0);

}  // namespace apramsey
