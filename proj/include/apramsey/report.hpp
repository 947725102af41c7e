#pragma once

#include "apramsey/alpha.hpp"
#include "apramsey/search.hpp"
#include "apramsey/verifier.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace apramsey {

// ordered_json keeps field order stable so records are diffable.
using Json = nlohmann::ordered_json;

struct ClaimReport {
    std::string group;    // pair | classic | multi | parallelogram | palette | alpha
    std::string id;
    Json params;
    bool verdict = false;
    Json counterexample;  // first failing cover cell, when a sub-check failed
    Json transcript;      // populated on demand
    std::int64_t duration_ms = 0;
};

// One entry of the built-in reproduction suite; which fields matter depends
// on kind.
struct ReproClaim {
    std::string group;
    std::string id;
    std::string kind;  // pair | multi | parallelogram | palette | alpha
    int p = 0;
    int d = 0;
    std::vector<std::vector<int>> sets;
    std::vector<int> lengths;  // pair: {red, blue}; parallelogram: {gamma, m}
    bool nonzero_only = false;
    std::string alpha_sq;
    long expect_m = 0;
};

// The full fixed suite: the three pair claims, the two classic recoveries,
// the three 3-colorings, the four parallelogram claims, the palette covers
// (plus the nonzero variant for p = 59), and three sample certificates.
const std::vector<ReproClaim>& reproduction_table();

ClaimReport run_claim(const ReproClaim& claim, int jobs, bool want_transcript);

std::vector<ClaimReport> run_reproduce(const std::vector<ReproClaim>& table,
                                       const std::string& only, int jobs, bool want_transcript);

Json cover_outcome_to_json(const CoverOutcome& outcome);
Json checks_to_json(const std::vector<CheckRecord>& checks);
Json certificate_to_json(const AlphaCertificate& cert);
AlphaCertificate certificate_from_json(const Json& j);

Json report_to_json(const ClaimReport& report, bool timing, bool transcript);
std::string render_json_lines(const std::vector<ClaimReport>& rows, bool timing, bool transcript);
std::string render_table(const std::vector<ClaimReport>& rows, bool timing);
int reports_exit_code(const std::vector<ClaimReport>& rows);

}  // namespace apramsey
