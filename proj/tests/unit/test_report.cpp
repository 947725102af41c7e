#include "apramsey/report.hpp"

#include <doctest.h>

using namespace apramsey;

TEST_CASE("the reproduction table lists every fixed claim") {
    const auto& table = reproduction_table();
    CHECK(table.size() == 23);
    int pairs = 0, classic = 0, multi = 0, pgram = 0, palette = 0, alpha = 0;
    for (const auto& claim : table) {
        if (claim.group == "pair") ++pairs;
        if (claim.group == "classic") ++classic;
        if (claim.group == "multi") ++multi;
        if (claim.group == "parallelogram") ++pgram;
        if (claim.group == "palette") ++palette;
        if (claim.group == "alpha") ++alpha;
    }
    CHECK(pairs == 3);
    CHECK(classic == 2);
    CHECK(multi == 3);
    CHECK(pgram == 4);
    CHECK(palette == 8);  // seven covers plus the nonzero variant for 59
    CHECK(alpha == 3);
}

TEST_CASE("group filtering") {
    const auto rows = run_reproduce(reproduction_table(), "palette", 0, false);
    CHECK(rows.size() == 8);
    for (const auto& row : rows) {
        CHECK(row.group == "palette");
        CHECK(row.verdict);
    }
    const auto pgram = run_reproduce(reproduction_table(), "parallelogram", 0, false);
    CHECK(pgram.size() == 4);
}

TEST_CASE("a corrupted constant table is detected") {
    auto table = reproduction_table();
    for (auto& claim : table)
        if (claim.id == "pair-l5-l8") claim.lengths[1] = 7;  // claim one better, falsely
    const auto rows = run_reproduce(table, "pair", 0, false);
    CHECK(reports_exit_code(rows) == 1);
    bool saw_failure = false;
    for (const auto& row : rows)
        if (row.id == "pair-l5-l8") saw_failure = !row.verdict;
    CHECK(saw_failure);
}

TEST_CASE("records render stably") {
    auto table = reproduction_table();
    std::vector<ReproClaim> light;
    for (const auto& claim : table)
        if (claim.group == "alpha" || claim.group == "palette") light.push_back(claim);
    const auto rows = run_reproduce(light, "", 0, true);
    CHECK(reports_exit_code(rows) == 0);

    const std::string json = render_json_lines(rows, false, true);
    CHECK(json.find("\"claim\":\"alpha-1\"") != std::string::npos);
    CHECK(json.find("duration_ms") == std::string::npos);  // timing off
    const std::string timed = render_json_lines(rows, true, false);
    CHECK(timed.find("duration_ms") != std::string::npos);

    const std::string table_text = render_table(rows, false);
    CHECK(table_text.find("PASS") != std::string::npos);
    CHECK(table_text.find("FAIL") == std::string::npos);

    // parse back one line and check the schema fields
    const auto first_line = json.substr(0, json.find('\n'));
    const Json parsed = Json::parse(first_line);
    CHECK(parsed.contains("claim"));
    CHECK(parsed.contains("params"));
    CHECK(parsed.contains("verdict"));
}

TEST_CASE("certificates round-trip through their serialized form") {
    const AlphaCertificate cert = certify_rational(94, 1);
    const Json j = certificate_to_json(cert);
    CHECK(j.at("schema") == "alpha-certificate/1");
    CHECK(j.at("case") == "rational-case2");
    CHECK(j.at("alpha_red_sq") == "95/94");
    const AlphaCertificate back = certificate_from_json(j);
    CHECK(back.p == cert.p);
    CHECK(back.alpha_red_sq == cert.alpha_red_sq);
    CHECK(back.alpha_blue_sq == cert.alpha_blue_sq);
    CHECK(back.b_int == cert.b_int);
    CHECK(back.M == cert.M);
    CHECK(verify_certificate(back).ok);

    // field order is pinned for diffability
    const std::string dumped = j.dump();
    CHECK(dumped.find("\"case\"") < dumped.find("\"p\""));
    CHECK(dumped.find("\"p\"") < dumped.find("\"alpha_sq\""));
    CHECK(dumped.find("\"alpha_sq\"") < dumped.find("\"M\""));
}

TEST_CASE("cover outcomes serialize with the documented failure names") {
    const ColoringSpec empty(7, 2, ResidueSet(7));
    const Json j = cover_outcome_to_json(covers(empty, 3));
    CHECK(j.at("holds") == false);
    CHECK(j.at("counterexample").at("failure") == "K0-empty");
    CHECK(cover_failure_from_string("min(K0)>max(K1)") == CoverFailure::kMinK0AboveMaxK1);
    CHECK_FALSE(cover_failure_from_string("nonsense").has_value());
}
