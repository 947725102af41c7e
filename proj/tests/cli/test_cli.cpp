#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

// Drives the built binary end to end: exit codes, output schema, and
// determinism across worker counts.

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(APRAMSEY_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    RunResult result{-1, {}};
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<nlohmann::ordered_json> parse_lines(const std::string& text) {
    std::vector<nlohmann::ordered_json> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        if (eol > pos) rows.push_back(nlohmann::ordered_json::parse(text.substr(pos, eol - pos)));
        pos = eol + 1;
    }
    return rows;
}

}  // namespace

TEST_CASE("verify pair: exit codes 0 / 1 / 2") {
    CHECK(run_cli("verify pair --p 29 --d 7 --set 0,1,2,3,4,5,6 --red 3 --blue 20").exit_code == 0);
    CHECK(run_cli("verify pair --p 29 --d 7 --set 0,1,2,3,4,5,6 --red 3 --blue 19").exit_code == 1);
    CHECK(run_cli("verify pair --p 0 --d 7 --set 0 --red 3 --blue 20").exit_code == 2);
    CHECK(run_cli("verify pair --p 29 --d 7 --set 0..x --red 3 --blue 20").exit_code == 2);
    CHECK(run_cli("verify pair --p 29 --d 7 --set 29 --red 3 --blue 20").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("verify json record carries the schema fields") {
    const RunResult r =
        run_cli("verify pair --p 5 --d 2 --set 0,1 --red 5 --blue 8 --format json --transcript --timing");
    CHECK(r.exit_code == 0);
    const auto rows = parse_lines(r.output);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].at("claim") == "pair");
    CHECK(rows[0].at("verdict") == true);
    CHECK(rows[0].at("params").at("p") == 5);
    CHECK(rows[0].contains("duration_ms"));
    REQUIRE(rows[0].contains("transcript"));
    CHECK(rows[0].at("transcript").size() == 2);
    CHECK(rows[0].at("transcript")[0].at("check") == "red");
    CHECK_FALSE(rows[0].contains("counterexample"));  // nothing failed

    // a false claim surfaces the first failing cell in the record itself
    const RunResult bad = run_cli("verify pair --p 5 --d 2 --set 0,1 --red 5 --blue 7 --format json");
    CHECK(bad.exit_code == 1);
    const auto bad_rows = parse_lines(bad.output);
    REQUIRE(bad_rows.size() == 1);
    REQUIRE(bad_rows[0].contains("counterexample"));
    CHECK(bad_rows[0].at("counterexample").at("check") == "blue");
    CHECK(bad_rows[0].at("counterexample").contains("m"));
    CHECK(bad_rows[0].at("counterexample").contains("failure"));
}

TEST_CASE("verify multi and parallelogram") {
    CHECK(run_cli("verify multi --p 10 --d 2 --set 0,1 --set 5,6 --lengths 3,3,8").exit_code == 0);
    CHECK(run_cli("verify multi --p 3 --d 2 --set 0 --set 1 --lengths 4,4,4").exit_code == 0);
    CHECK(run_cli("verify multi --p 10 --d 2 --set 0,1 --set 1,2 --lengths 3,3,8").exit_code == 2);
    CHECK(run_cli("verify parallelogram --p 17 --d 2 --set 0..3 --gamma 4 --m 21").exit_code == 0);
    // one below the minimal window, so the blue side must fail
    CHECK(run_cli("verify parallelogram --p 17 --d 2 --set 0..3 --gamma 4 --m 20").exit_code == 1);
}

TEST_CASE("min-n prints the smallest window") {
    const RunResult r = run_cli("min-n --p 29 --d 7 --set 0..6 --max 30 --format json");
    CHECK(r.exit_code == 0);
    const auto rows = parse_lines(r.output);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].at("params").at("result") == 19);
    CHECK(run_cli("min-n --p 5 --d 2 --set 0 --max 8").exit_code == 1);  // no window exists
}

TEST_CASE("certify-alpha emits a verifiable certificate record") {
    const RunResult r = run_cli("certify-alpha --alpha-sq 94/1 --format json");
    CHECK(r.exit_code == 0);
    const auto rows = parse_lines(r.output);
    REQUIRE(rows.size() == 1);
    const auto& cert = rows[0].at("transcript").at("certificate");
    CHECK(cert.at("case") == "rational-case2");
    CHECK(cert.at("p") == 47);
    CHECK(cert.at("alpha_red_sq") == "95/94");
    CHECK(cert.at("M") == 2209);
    CHECK(rows[0].at("params").at("M") == 2209);

    CHECK(run_cli("certify-alpha --alpha-sq 2/4").exit_code == 2);  // not lowest terms
    CHECK(run_cli("certify-alpha --alpha-sq 0/1").exit_code == 2);
    CHECK(run_cli("certify-alpha --alpha-sq abc").exit_code == 2);
}

TEST_CASE("reproduce filtering and row counts") {
    const RunResult pgram = run_cli("reproduce --only parallelogram --format json");
    CHECK(pgram.exit_code == 0);
    CHECK(parse_lines(pgram.output).size() == 4);

    const RunResult palettes = run_cli("reproduce --only palette --format json");
    CHECK(parse_lines(palettes.output).size() == 8);

    CHECK(run_cli("reproduce --only nonsense").exit_code == 2);
}

TEST_CASE("search pair emits the published record") {
    const RunResult r = run_cli("search pair --p 5..5 --red 5 --max-set 2 --cap 10 --format json");
    CHECK(r.exit_code == 0);
    const auto rows = parse_lines(r.output);
    bool found = false;
    for (const auto& row : rows)
        if (row.at("params").at("p") == 5 && row.at("params").at("d") == 2 &&
            row.at("params").at("set") == nlohmann::ordered_json::array({0, 1}) &&
            row.at("params").at("blue") == 8)
            found = true;
    CHECK(found);
}

TEST_CASE("structured reproduce output is byte-identical across worker counts") {
    const RunResult one = run_cli("reproduce --format json --jobs 1");
    const RunResult eight = run_cli("reproduce --format json --jobs 8");
    CHECK(one.exit_code == 0);
    CHECK(eight.exit_code == 0);
    CHECK(one.output == eight.output);
    CHECK(parse_lines(one.output).size() == 23);
}
