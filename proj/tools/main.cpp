#include "apramsey/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace apramsey;

// "0,5,10", "0..6", or a mix like "0..3,16..18"; ranges are inclusive.
std::vector<int> parse_set_expr(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string token = text.substr(pos, comma - pos);
        if (token.empty()) throw ParameterOutOfRange("empty entry in set expression");
        const std::size_t dots = token.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoi(token));
        } else {
            const int first = std::stoi(token.substr(0, dots));
            const int last = std::stoi(token.substr(dots + 2));
            if (last < first) throw ParameterOutOfRange("descending range in set expression");
            for (int r = first; r <= last; ++r) out.push_back(r);
        }
        pos = comma + 1;
    }
    return out;
}

void parse_p_range(const std::string& text, int& lo, int& hi) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        lo = hi = std::stoi(text);
    } else {
        lo = std::stoi(text.substr(0, dots));
        hi = std::stoi(text.substr(dots + 2));
    }
}

std::vector<int> parse_lengths(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(std::stoi(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

struct OutputOptions {
    std::string format = "table";
    bool timing = false;
    bool transcript = false;
    int jobs = 0;
};

void print_reports(const std::vector<ClaimReport>& rows, const OutputOptions& opt) {
    if (opt.format == "json")
        std::cout << render_json_lines(rows, opt.timing, opt.transcript);
    else
        std::cout << render_table(rows, opt.timing);
}

int run_verify_pair(int p, int d, const std::string& set_expr, int red, int blue,
                    const OutputOptions& opt) {
    ReproClaim claim;
    claim.group = "pair";
    claim.id = "pair";
    claim.kind = "pair";
    claim.p = p;
    claim.d = d;
    claim.sets = {parse_set_expr(set_expr)};
    claim.lengths = {red, blue};
    const auto report = run_claim(claim, opt.jobs, opt.transcript);
    print_reports({report}, opt);
    return report.verdict ? 0 : 1;
}

int run_verify_multi(int p, int d, const std::vector<std::string>& set_exprs,
                     const std::string& lengths_expr, const OutputOptions& opt) {
    ReproClaim claim;
    claim.group = "multi";
    claim.id = "multi";
    claim.kind = "multi";
    claim.p = p;
    claim.d = d;
    for (const auto& expr : set_exprs) claim.sets.push_back(parse_set_expr(expr));
    claim.lengths = parse_lengths(lengths_expr);
    const auto report = run_claim(claim, opt.jobs, opt.transcript);
    print_reports({report}, opt);
    return report.verdict ? 0 : 1;
}

int run_verify_parallelogram(int p, int d, const std::string& set_expr, int gamma, int m,
                             const OutputOptions& opt) {
    ReproClaim claim;
    claim.group = "parallelogram";
    claim.id = "parallelogram";
    claim.kind = "parallelogram";
    claim.p = p;
    claim.d = d;
    claim.sets = {parse_set_expr(set_expr)};
    claim.lengths = {gamma, m};
    const auto report = run_claim(claim, opt.jobs, opt.transcript);
    print_reports({report}, opt);
    return report.verdict ? 0 : 1;
}

int run_reproduce(const std::string& only, const OutputOptions& opt) {
    const auto rows = apramsey::run_reproduce(reproduction_table(), only, opt.jobs, opt.transcript);
    if (rows.empty()) {
        std::cerr << "no claims match group '" << only << "'\n";
        return 2;
    }
    print_reports(rows, opt);
    return reports_exit_code(rows);
}

int run_search_pair(const std::string& p_expr, int red, int max_set, int cap, int d_fixed,
                    int d_max, bool no_prune, const OutputOptions& opt) {
    SearchSpace space;
    parse_p_range(p_expr, space.p_lo, space.p_hi);
    space.red_length = red;
    space.max_set_size = max_set;
    space.n_cap = cap;
    if (d_fixed > 0)
        space.d_rule = [d_fixed](int, int d) { return d == d_fixed; };
    else if (d_max > 0)
        space.d_rule = [d_max](int, int d) { return d <= d_max; };

    bool any = false;
    search_pairs(
        space,
        [&](const SearchRecord& rec) {
            any = true;
            ClaimReport row;
            row.group = "search";
            row.id = "search-pair";
            row.params = {{"p", rec.spec.p},
                          {"d", rec.spec.d},
                          {"set", rec.spec.set.elements()},
                          {"red", rec.red_length},
                          {"blue", rec.best_blue}};
            row.verdict = true;
            print_reports({row}, opt);
        },
        opt.jobs, !no_prune);
    if (!any) std::cerr << "search produced no records\n";
    return 0;
}

int run_search_multi(const std::string& p_expr, const std::string& lengths_expr, int max_first,
                     int max_second, int d_fixed, bool no_prune, const OutputOptions& opt) {
    MultiSearchSpace space;
    parse_p_range(p_expr, space.p_lo, space.p_hi);
    space.lengths = parse_lengths(lengths_expr);
    space.max_first = max_first;
    space.max_second = max_second;
    if (d_fixed > 0) space.d_rule = [d_fixed](int, int d) { return d == d_fixed; };

    search_multi(
        space,
        [&](const MultiSearchRecord& rec) {
            ClaimReport row;
            row.group = "search";
            row.id = "search-multi";
            Json sets = Json::array();
            sets.push_back(rec.first.elements());
            sets.push_back(rec.second.elements());
            row.params = {{"p", rec.p}, {"d", rec.d}, {"sets", sets}, {"lengths", rec.lengths}};
            row.verdict = true;
            print_reports({row}, opt);
        },
        opt.jobs, !no_prune);
    return 0;
}

int run_certify(const std::string& alpha_sq, const OutputOptions& opt) {
    Rational target;
    try {
        target = parse_rational(alpha_sq);
    } catch (const ParameterOutOfRange&) {
        throw ParameterOutOfRange(
            "alpha^2 must be an exact rational a/b; irrational ratios have no finite "
            "certificate check and are not supported");
    }
    if (target <= 0) throw ParameterOutOfRange("alpha^2 must be positive");
    // reject inputs that are not in lowest terms instead of silently reducing
    const auto slash = alpha_sq.find('/');
    if (slash != std::string::npos) {
        const BigInt raw_num(alpha_sq.substr(0, slash));
        const BigInt raw_den(alpha_sq.substr(slash + 1));
        if (gcd(raw_num, raw_den) != 1)
            throw NotCoprime("--alpha-sq must be given in lowest terms");
    }
    const AlphaCertificate cert = certify_rational(numerator(target), denominator(target));
    const CertCheck check = verify_certificate(cert);

    ClaimReport row;
    row.group = "alpha";
    row.id = "certify-alpha";
    row.params = {{"alpha_sq", to_string(cert.alpha_sq)}, {"M", cert.M}};
    row.verdict = check.ok;
    row.transcript = Json::object();
    row.transcript["certificate"] = certificate_to_json(cert);
    if (opt.transcript) row.transcript["checks"] = check.transcript;
    OutputOptions with_cert = opt;
    with_cert.transcript = true;
    print_reports({row}, with_cert);
    return check.ok ? 0 : 1;
}

int run_min_n(int p, int d, const std::string& set_expr, int n_max, const OutputOptions& opt) {
    const ColoringSpec spec(p, d, ResidueSet::of(p, parse_set_expr(set_expr)));
    const auto result = min_cover_n(spec, n_max, opt.jobs);
    ClaimReport row;
    row.group = "min-n";
    row.id = "min-n";
    row.params = {{"p", p}, {"d", d}, {"set", spec.set.elements()}, {"max", n_max}};
    row.verdict = result.has_value();
    if (result) row.params["result"] = *result;
    print_reports({row}, opt);
    return result ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifier and search tool for spherical colorings that avoid short "
                 "monochromatic arithmetic progressions"};
    app.require_subcommand(1);

    OutputOptions opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--jobs", opt.jobs, "worker threads (default: $APRAMSEY_JOBS or hardware)");
    app.add_flag("--timing", opt.timing, "include wall-clock durations in the output");
    app.add_flag("--transcript", opt.transcript, "include sub-check outcomes in the output");

    // verify
    auto* verify = app.add_subcommand("verify", "verify a single claim");
    verify->require_subcommand(1);
    verify->fallthrough();
    int p = 0, d = 1, red = 3, blue = 3, gamma = 1, m = 2;
    std::string set_expr, lengths_expr;
    std::vector<std::string> set_exprs;

    auto* vpair = verify->add_subcommand("pair", "no red l_r, no blue l_s");
    vpair->fallthrough();
    vpair->add_option("--p", p, "modulus")->required()->check(CLI::Range(2, 512));
    vpair->add_option("--d", d, "multiplier")->required()->check(CLI::PositiveNumber);
    vpair->add_option("--set", set_expr, "red residues, e.g. 0..6 or 0,5,10")->required();
    vpair->add_option("--red", red, "red progression length")->required()->check(CLI::Range(2, 10000));
    vpair->add_option("--blue", blue, "blue progression length")->required()->check(CLI::Range(2, 10000));

    auto* vmulti = verify->add_subcommand("multi", "one palette per color, last color is the rest");
    vmulti->fallthrough();
    vmulti->add_option("--p", p)->required()->check(CLI::Range(2, 512));
    vmulti->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    vmulti->add_option("--set", set_exprs, "palette (repeatable)")->required();
    vmulti->add_option("--lengths", lengths_expr, "comma-separated lengths, one per color")->required();

    auto* vpgram = verify->add_subcommand("parallelogram", "no red parallelogram family, no blue l_m");
    vpgram->fallthrough();
    vpgram->add_option("--p", p)->required()->check(CLI::Range(2, 512));
    vpgram->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    vpgram->add_option("--set", set_expr)->required();
    vpgram->add_option("--gamma", gamma, "half difference of squared diagonals")->required();
    vpgram->add_option("--m", m, "blue progression length")->required()->check(CLI::Range(2, 10000));

    // reproduce
    auto* repro = app.add_subcommand("reproduce", "run the built-in claim suite");
    repro->fallthrough();
    std::string only;
    repro->add_option("--only", only, "restrict to one group")
        ->check(CLI::IsMember({"pair", "classic", "multi", "parallelogram", "palette", "alpha"}));

    // search
    auto* search = app.add_subcommand("search", "hunt for parameter sets");
    search->require_subcommand(1);
    search->fallthrough();
    std::string p_expr;
    int max_set = 1, cap = 40, d_fixed = 0, d_max = 0, max_first = 1, max_second = 1;
    bool no_prune = false;

    auto* spair = search->add_subcommand("pair", "two colors");
    spair->fallthrough();
    spair->add_option("--p", p_expr, "modulus or range lo..hi")->required();
    spair->add_option("--red", red, "red progression length")->required()->check(CLI::Range(2, 10000));
    spair->add_option("--max-set", max_set, "largest |S|")->required()->check(CLI::PositiveNumber);
    spair->add_option("--cap", cap, "largest cover window to try")->check(CLI::PositiveNumber);
    spair->add_option("--d", d_fixed, "fix d (default rule: d <= p/2)");
    spair->add_option("--d-max", d_max, "cap d");
    spair->add_flag("--no-prune", no_prune, "disable red-side pruning");

    auto* smulti = search->add_subcommand("multi", "three colors");
    smulti->fallthrough();
    smulti->add_option("--p", p_expr)->required();
    smulti->add_option("--lengths", lengths_expr, "three comma-separated lengths")->required();
    smulti->add_option("--max-first", max_first)->check(CLI::PositiveNumber);
    smulti->add_option("--max-second", max_second)->check(CLI::PositiveNumber);
    smulti->add_option("--d", d_fixed, "fix d (default rule: d <= p/2)");
    smulti->add_flag("--no-prune", no_prune, "disable red-side pruning");

    // certify-alpha
    auto* certify = app.add_subcommand("certify-alpha", "certificate for a rational alpha^2");
    certify->fallthrough();
    std::string alpha_sq;
    certify->add_option("--alpha-sq", alpha_sq, "alpha^2 as a/b in lowest terms")->required();

    // min-n
    auto* minn = app.add_subcommand("min-n", "smallest covering window for (p, d, S)");
    minn->fallthrough();
    minn->add_option("--p", p)->required()->check(CLI::Range(2, 512));
    minn->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    minn->add_option("--set", set_expr)->required();
    int n_max = 40;
    minn->add_option("--max", n_max, "largest window to try")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (vpair->parsed()) return run_verify_pair(p, d, set_expr, red, blue, opt);
        if (vmulti->parsed()) return run_verify_multi(p, d, set_exprs, lengths_expr, opt);
        if (vpgram->parsed()) return run_verify_parallelogram(p, d, set_expr, gamma, m, opt);
        if (repro->parsed()) return run_reproduce(only, opt);
        if (spair->parsed())
            return run_search_pair(p_expr, red, max_set, cap, d_fixed, d_max, no_prune, opt);
        if (smulti->parsed())
            return run_search_multi(p_expr, lengths_expr, max_first, max_second, d_fixed, no_prune, opt);
        if (certify->parsed()) return run_certify(alpha_sq, opt);
        if (minn->parsed()) return run_min_n(p, d, set_expr, n_max, opt);
    } catch (const apramsey::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
