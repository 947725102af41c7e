#include "apramsey/report.hpp"

#include "apramsey/errors.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace apramsey {

namespace {

std::vector<int> iota_vec(int first, int last) {
    std::vector<int> v;
    for (int x = first; x <= last; ++x) v.push_back(x);
    return v;
}

ReproClaim pair_claim(const std::string& group, const std::string& id, int p, int d,
                      std::vector<int> set, int red, int blue) {
    ReproClaim c;
    c.group = group;
    c.id = id;
    c.kind = "pair";
    c.p = p;
    c.d = d;
    c.sets = {std::move(set)};
    c.lengths = {red, blue};
    return c;
}

ReproClaim multi_claim(const std::string& group, const std::string& id, int p, int d,
                       std::vector<std::vector<int>> sets, std::vector<int> lengths) {
    ReproClaim c;
    c.group = group;
    c.id = id;
    c.kind = "multi";
    c.p = p;
    c.d = d;
    c.sets = std::move(sets);
    c.lengths = std::move(lengths);
    return c;
}

ReproClaim pgram_claim(const std::string& id, int p, int d, std::vector<int> set, int gamma, int m) {
    ReproClaim c;
    c.group = "parallelogram";
    c.id = id;
    c.kind = "parallelogram";
    c.p = p;
    c.d = d;
    c.sets = {std::move(set)};
    c.lengths = {gamma, m};
    return c;
}

ReproClaim palette_claim(const std::string& id, int p, bool nonzero) {
    ReproClaim c;
    c.group = "palette";
    c.id = id;
    c.kind = "palette";
    c.p = p;
    c.nonzero_only = nonzero;
    return c;
}

ReproClaim alpha_claim(const std::string& id, const std::string& alpha_sq, long expect_m) {
    ReproClaim c;
    c.group = "alpha";
    c.id = id;
    c.kind = "alpha";
    c.alpha_sq = alpha_sq;
    c.expect_m = expect_m;
    return c;
}

}  // namespace

const std::vector<ReproClaim>& reproduction_table() {
    static const std::vector<ReproClaim> table = [] {
        std::vector<ReproClaim> t;
        t.push_back(pair_claim("pair", "pair-l3-l20", 29, 7, iota_vec(0, 6), 3, 20));
        t.push_back(pair_claim("pair", "pair-l4-l14", 29, 10, iota_vec(0, 8), 4, 14));
        t.push_back(pair_claim("pair", "pair-l5-l8", 5, 2, {0, 1}, 5, 8));
        t.push_back(pair_claim("classic", "classic-l6-l6", 12, 1, iota_vec(0, 5), 6, 6));
        t.push_back(multi_claim("classic", "classic-l4-l4-l4", 3, 2, {{0}, {1}}, {4, 4, 4}));
        t.push_back(multi_claim("multi", "multi-l3-l3-l8", 10, 2, {{0, 1}, {5, 6}}, {3, 3, 8}));
        t.push_back(multi_claim("multi", "multi-l3-l4-l7", 10, 2, {{0, 1}, {4, 5, 6}}, {3, 4, 7}));
        t.push_back(multi_claim("multi", "multi-l3-l5-l5", 8, 1, {{0, 4}, {5, 6, 7}}, {3, 5, 5}));
        t.push_back(pgram_claim("pgram-g1-l18", 31, 8, {0, 1, 2, 3, 16, 17, 18}, 1, 18));
        t.push_back(pgram_claim("pgram-g2-l20", 29, 7, iota_vec(0, 6), 2, 20));
        t.push_back(pgram_claim("pgram-g3-l19", 25, 4, iota_vec(0, 5), 3, 19));
        t.push_back(pgram_claim("pgram-g4-l21", 17, 2, {0, 1, 2, 3}, 4, 21));
        for (const auto& pal : certificate_palettes())
            t.push_back(palette_claim("palette-" + std::to_string(pal.p), pal.p, false));
        t.push_back(palette_claim("palette-59-nonzero", 59, true));
        t.push_back(alpha_claim("alpha-1", "1/1", 2209));
        t.push_back(alpha_claim("alpha-94", "94/1", 2209));
        // b = 47*59*67*71*73*79*83, the smallest denominator every table
        // prime divides
        t.push_back(alpha_claim("alpha-tiny", "1/6314094315421", 6845));
        return t;
    }();
    return table;
}

ClaimReport run_claim(const ReproClaim& claim, int jobs, bool want_transcript) {
    ClaimReport report;
    report.group = claim.group;
    report.id = claim.id;

    auto lift_counterexample = [&report](const std::vector<CheckRecord>& checks) {
        for (const auto& check : checks)
            if (!check.outcome.holds && check.outcome.counterexample) {
                const Counterexample& cex = *check.outcome.counterexample;
                report.counterexample = {{"check", check.name},
                                         {"m", cex.m},
                                         {"b0", cex.b0},
                                         {"c0", cex.c0},
                                         {"failure", to_string(cex.failure)}};
                return;
            }
    };

    const auto start = std::chrono::steady_clock::now();

    if (claim.kind == "pair") {
        const ColoringSpec spec(claim.p, claim.d, ResidueSet::of(claim.p, claim.sets[0]));
        report.params = {{"p", claim.p},
                         {"d", claim.d},
                         {"set", claim.sets[0]},
                         {"red", claim.lengths[0]},
                         {"blue", claim.lengths[1]}};
        const auto result = verify_pair(PairClaim(spec, claim.lengths[0], claim.lengths[1]), jobs);
        report.verdict = result.verified;
        lift_counterexample(result.checks);
        if (want_transcript) report.transcript = checks_to_json(result.checks);
    } else if (claim.kind == "multi") {
        std::vector<ResidueSet> palettes;
        for (const auto& s : claim.sets) palettes.push_back(ResidueSet::of(claim.p, s));
        report.params = {{"p", claim.p},
                         {"d", claim.d},
                         {"sets", claim.sets},
                         {"lengths", claim.lengths}};
        const auto result = verify_multi(claim.p, claim.d, palettes, claim.lengths, jobs);
        report.verdict = result.verified;
        lift_counterexample(result.checks);
        if (want_transcript) report.transcript = checks_to_json(result.checks);
    } else if (claim.kind == "parallelogram") {
        const ColoringSpec spec(claim.p, claim.d, ResidueSet::of(claim.p, claim.sets[0]));
        report.params = {{"p", claim.p},
                         {"d", claim.d},
                         {"set", claim.sets[0]},
                         {"gamma", claim.lengths[0]},
                         {"m", claim.lengths[1]}};
        const auto result = verify_parallelogram_claim(spec, claim.lengths[0], claim.lengths[1], jobs);
        report.verdict = result.verified;
        lift_counterexample(result.checks);
        if (want_transcript) report.transcript = checks_to_json(result.checks);
    } else if (claim.kind == "palette") {
        const RedPalette* pal = palette_for_prime(claim.p);
        report.params = {{"p", claim.p},
                         {"set", pal ? Json(pal->set.elements()) : Json()},
                         {"variant", claim.nonzero_only ? "nonzero-squares" : "squares"}};
        report.verdict = pal != nullptr && shifted_residue_cover(claim.p, pal->set, claim.nonzero_only);
    } else if (claim.kind == "alpha") {
        report.params = {{"alpha_sq", claim.alpha_sq}};
        const Rational alpha = parse_rational(claim.alpha_sq);
        const AlphaCertificate cert = certify_rational(numerator(alpha), denominator(alpha));
        const CertCheck check = verify_certificate(cert);
        report.verdict = check.ok && cert.M == claim.expect_m;
        report.params["M"] = cert.M;
        if (want_transcript) {
            report.transcript = Json::object();
            report.transcript["certificate"] = certificate_to_json(cert);
            report.transcript["checks"] = check.transcript;
        }
    } else {
        throw ParameterOutOfRange("unknown claim kind: " + claim.kind);
    }

    report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return report;
}

std::vector<ClaimReport> run_reproduce(const std::vector<ReproClaim>& table,
                                       const std::string& only, int jobs, bool want_transcript) {
    std::vector<ClaimReport> out;
    for (const auto& claim : table) {
        if (!only.empty() && claim.group != only) continue;
        out.push_back(run_claim(claim, jobs, want_transcript));
    }
    return out;
}

Json cover_outcome_to_json(const CoverOutcome& outcome) {
    Json j;
    j["holds"] = outcome.holds;
    if (outcome.counterexample) {
        j["counterexample"] = {{"m", outcome.counterexample->m},
                               {"b0", outcome.counterexample->b0},
                               {"c0", outcome.counterexample->c0},
                               {"failure", to_string(outcome.counterexample->failure)}};
    }
    return j;
}

Json checks_to_json(const std::vector<CheckRecord>& checks) {
    Json arr = Json::array();
    for (const auto& check : checks) {
        Json j;
        j["check"] = check.name;
        j["set"] = check.set.elements();
        if (check.n >= 0) j["N"] = check.n;
        j["outcome"] = cover_outcome_to_json(check.outcome);
        arr.push_back(std::move(j));
    }
    return arr;
}

Json certificate_to_json(const AlphaCertificate& cert) {
    Json j;
    j["schema"] = "alpha-certificate/1";
    j["case"] = to_string(cert.case_tag);
    j["p"] = cert.p;
    j["alpha_sq"] = to_string(cert.alpha_sq);
    j["alpha_red_sq"] = to_string(cert.alpha_red_sq);
    j["alpha_blue_sq"] = to_string(cert.alpha_blue_sq);
    j["b_int"] = cert.b_int.str();
    j["epsilon"] = to_string(cert.epsilon);
    j["M"] = cert.M;
    return j;
}

AlphaCertificate certificate_from_json(const Json& j) {
    AlphaCertificate cert;
    const std::string tag = j.at("case").get<std::string>();
    bool found = false;
    for (auto c : {CertCase::kRationalCase1, CertCase::kRationalCase2, CertCase::kRationalCase3,
                   CertCase::kFinalCase})
        if (tag == to_string(c)) {
            cert.case_tag = c;
            found = true;
        }
    if (!found) throw ParameterOutOfRange("unknown certificate case: " + tag);
    cert.p = j.at("p").get<int>();
    cert.alpha_sq = parse_rational(j.at("alpha_sq").get<std::string>());
    cert.alpha_red_sq = parse_rational(j.at("alpha_red_sq").get<std::string>());
    cert.alpha_blue_sq = parse_rational(j.at("alpha_blue_sq").get<std::string>());
    cert.b_int = BigInt(j.at("b_int").get<std::string>());
    cert.epsilon = parse_rational(j.at("epsilon").get<std::string>());
    cert.M = j.at("M").get<long>();
    return cert;
}

Json report_to_json(const ClaimReport& report, bool timing, bool transcript) {
    Json j;
    j["claim"] = report.id;
    j["group"] = report.group;
    j["params"] = report.params;
    j["verdict"] = report.verdict;
    if (!report.counterexample.is_null()) j["counterexample"] = report.counterexample;
    if (transcript && !report.transcript.is_null()) j["transcript"] = report.transcript;
    if (timing) j["duration_ms"] = report.duration_ms;
    return j;
}

std::string render_json_lines(const std::vector<ClaimReport>& rows, bool timing, bool transcript) {
    std::ostringstream out;
    for (const auto& row : rows) out << report_to_json(row, timing, transcript).dump() << '\n';
    return out.str();
}

std::string render_table(const std::vector<ClaimReport>& rows, bool timing) {
    std::size_t id_width = 5;
    for (const auto& row : rows) id_width = std::max(id_width, row.id.size());
    std::ostringstream out;
    for (const auto& row : rows) {
        out << (row.verdict ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(id_width + 2))
            << row.id << row.params.dump();
        if (timing) out << "  [" << row.duration_ms << " ms]";
        out << '\n';
    }
    return out.str();
}

int reports_exit_code(const std::vector<ClaimReport>& rows) {
    for (const auto& row : rows)
        if (!row.verdict) return 1;
    return 0;
}

}  // namespace apramsey
