#include "apramsey/verifier.hpp"

#include "apramsey/errors.hpp"

#include <algorithm>
#include <utility>

namespace apramsey {

PairClaim::PairClaim(ColoringSpec spec_, int red_len_, int blue_len_)
    : spec(std::move(spec_)), red_len(red_len_), blue_len(blue_len_) {
    if (red_len < 2 || blue_len < 2)
        throw ParameterOutOfRange("progression lengths must be at least 2");
    if (red_len > blue_len) std::swap(red_len, blue_len);
}

VerifyResult verify_pair(const PairClaim& claim, int jobs) {
    VerifyResult out;
    const ColoringSpec red(claim.spec.p, claim.spec.d, claim.spec.set.complement());
    out.checks.push_back({"red", red.set, claim.red_len - 1,
                          covers(red, claim.red_len - 1, jobs)});
    out.checks.push_back({"blue", claim.spec.set, claim.blue_len - 1,
                          covers(claim.spec, claim.blue_len - 1, jobs)});
    out.verified = out.checks[0].outcome.holds && out.checks[1].outcome.holds;
    return out;
}

VerifyResult verify_multi(int p, int d, const std::vector<ResidueSet>& palettes,
                          const std::vector<int>& lengths, int jobs) {
    if (palettes.empty() || lengths.size() != palettes.size() + 1)
        throw ParameterOutOfRange("need one length per palette plus one for the final color");
    for (int len : lengths)
        if (len < 2) throw ParameterOutOfRange("progression lengths must be at least 2");
    for (std::size_t i = 0; i < palettes.size(); ++i) {
        if (palettes[i].modulus() != p) throw ParameterOutOfRange("palette modulus must equal p");
        for (std::size_t j = i + 1; j < palettes.size(); ++j)
            if (!palettes[i].disjoint_with(palettes[j]))
                throw DisjointnessViolated("palettes " + std::to_string(i + 1) + " and " +
                                           std::to_string(j + 1) + " intersect");
    }

    VerifyResult out;
    out.verified = true;
    ResidueSet all(p);
    for (std::size_t i = 0; i < palettes.size(); ++i) {
        const ColoringSpec spec(p, d, palettes[i].complement());
        CheckRecord rec{"color-" + std::to_string(i + 1), spec.set, lengths[i] - 1,
                        covers(spec, lengths[i] - 1, jobs)};
        out.verified = out.verified && rec.outcome.holds;
        out.checks.push_back(std::move(rec));
        all = all.united(palettes[i]);
    }
    const ColoringSpec blue(p, d, all);
    CheckRecord rec{"color-" + std::to_string(lengths.size()), all,
                    lengths.back() - 1, covers(blue, lengths.back() - 1, jobs)};
    out.verified = out.verified && rec.outcome.holds;
    out.checks.push_back(std::move(rec));
    return out;
}

bool red_l3_free_direct(const ColoringSpec& spec) {
    const auto el = spec.set.elements();
    const long long p = spec.p;
    const long long target = 2LL * spec.d;
    for (int s1 : el)
        for (int s2 : el)
            for (int s3 : el) {
                const long long v = mod_floor(s1 - 2LL * s2 + s3 - target, p);
                if (v == p - 1 || v == 0 || v == 1) return false;
            }
    return true;
}

bool parallelogram_free(const ColoringSpec& spec, ParallelogramFamily family) {
    if (family.gamma < 1) throw ParameterOutOfRange("gamma must be positive");
    const auto el = spec.set.elements();
    const long long p = spec.p;
    const long long target = static_cast<long long>(spec.d) * family.gamma;
    for (int s1 : el)
        for (int s2 : el)
            for (int s3 : el)
                for (int s4 : el) {
                    const long long v = mod_floor(s1 + s2 - static_cast<long long>(s3) - s4 - target, p);
                    if (v == p - 1 || v == 0 || v == 1) return false;
                }
    return true;
}

VerifyResult verify_parallelogram_claim(const ColoringSpec& spec, int gamma, int m, int jobs) {
    if (m < 2) throw ParameterOutOfRange("progression length must be at least 2");
    VerifyResult out;
    CoverOutcome red;
    red.holds = parallelogram_free(spec, ParallelogramFamily{gamma});
    out.checks.push_back({"red-quadruples", spec.set, -1, red});
    out.checks.push_back({"blue", spec.set, m - 1, covers(spec, m - 1, jobs)});
    out.verified = out.checks[0].outcome.holds && out.checks[1].outcome.holds;
    return out;
}

}  // namespace apramsey
