#include "apramsey/report.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace apramsey;

namespace {

ColoringSpec make_spec(int p, int d, const std::vector<int>& set) {
    return {p, d, ResidueSet::of(p, set)};
}

py::object json_to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::dict cover_outcome_dict(const CoverOutcome& outcome) {
    py::dict out;
    out["holds"] = outcome.holds;
    if (outcome.counterexample) {
        py::dict cex;
        cex["m"] = outcome.counterexample->m;
        cex["b0"] = outcome.counterexample->b0;
        cex["c0"] = outcome.counterexample->c0;
        cex["failure"] = to_string(outcome.counterexample->failure);
        out["counterexample"] = cex;
    } else {
        out["counterexample"] = py::none();
    }
    return out;
}

py::dict verify_result_dict(const VerifyResult& result) {
    py::dict out;
    out["verified"] = result.verified;
    py::list checks;
    for (const auto& check : result.checks) {
        py::dict c;
        c["check"] = check.name;
        c["set"] = check.set.elements();
        if (check.n >= 0) c["N"] = check.n;
        c["outcome"] = cover_outcome_dict(check.outcome);
        checks.append(c);
    }
    out["checks"] = checks;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic verifier and search engine for spherical colorings "
              "avoiding short monochromatic arithmetic progressions";

    py::register_exception<Error>(m, "VerifierError", PyExc_ValueError);

    m.def("complement",
          [](int p, const std::vector<int>& set) { return ResidueSet::of(p, set).complement().elements(); },
          py::arg("p"), py::arg("set"));
    m.def("translate",
          [](int p, const std::vector<int>& set, long long t) {
              return ResidueSet::of(p, set).translate(t).elements();
          },
          py::arg("p"), py::arg("set"), py::arg("t"));
    m.def("canonical_translate",
          [](int p, const std::vector<int>& set) {
              return ResidueSet::of(p, set).canonical_translate().elements();
          },
          py::arg("p"), py::arg("set"));
    m.def("quadratic_residues",
          [](int p, bool include_zero) { return quadratic_residues(p, include_zero).elements(); },
          py::arg("p"), py::arg("include_zero") = true);

    m.def("floor_div", [](std::int64_t n, std::int64_t mdiv) {
        if (mdiv < 1) throw ParameterOutOfRange("floor_div needs a positive divisor");
        return floor_div(n, mdiv);
    }, py::arg("n"), py::arg("m"));
    m.def("mod_inverse",
          [](const std::string& a, const std::string& n) { return mod_inverse(BigInt(a), BigInt(n)).str(); },
          py::arg("a"), py::arg("n"), "arbitrary-precision modular inverse; decimal strings in and out");
    m.def("mod_inverse", [](std::int64_t a, std::int64_t n) {
        return static_cast<std::int64_t>(mod_inverse(BigInt(a), BigInt(n)));
    }, py::arg("a"), py::arg("n"));

    m.def("k_sets",
          [](int p, int d, const std::vector<int>& set, int n, std::int64_t m_, std::int64_t b0,
             std::int64_t c0) {
              const KSets ks = k_sets(make_spec(p, d, set), n, m_, b0, c0);
              return py::make_tuple(ks.k0, ks.k1);
          },
          py::arg("p"), py::arg("d"), py::arg("set"), py::arg("n"), py::arg("m"), py::arg("b0"),
          py::arg("c0"));

    m.def("covers",
          [](int p, int d, const std::vector<int>& set, int n, int jobs) {
              CoverOutcome outcome;
              {
                  py::gil_scoped_release release;
                  outcome = covers(make_spec(p, d, set), n, jobs);
              }
              return cover_outcome_dict(outcome);
          },
          py::arg("p"), py::arg("d"), py::arg("set"), py::arg("n"), py::arg("jobs") = 0);

    m.def("min_cover_n",
          [](int p, int d, const std::vector<int>& set, int n_max, int jobs) -> std::optional<int> {
              py::gil_scoped_release release;
              return min_cover_n(make_spec(p, d, set), n_max, jobs);
          },
          py::arg("p"), py::arg("d"), py::arg("set"), py::arg("n_max"), py::arg("jobs") = 0);

    m.def("real_witness",
          [](int p, int d, const std::vector<int>& set, int n) {
              const ColoringSpec spec = make_spec(p, d, set);
              const CoverOutcome outcome = covers(spec, n, 0);
              if (outcome.holds)
                  throw ParameterOutOfRange("covers holds at this window; no witness exists");
              const RealWitness w = real_witness(spec, n, *outcome.counterexample);
              py::dict out;
              out["b"] = to_string(w.b);
              out["c"] = to_string(w.c);
              out["n"] = w.n;
              out["valid"] = witness_avoids(spec, n, w.b, w.c);
              return out;
          },
          py::arg("p"), py::arg("d"), py::arg("set"), py::arg("n"),
          "witness coefficients (b, c) for the first failing cell at window n");

    m.def("verify_pair",
          [](int p, int d, const std::vector<int>& set, int red, int blue, int jobs) {
              return verify_result_dict(verify_pair(PairClaim(make_spec(p, d, set), red, blue), jobs));
          },
          py::arg("p"), py::arg("d"), py::arg("set"), py::arg("red"), py::arg("blue"),
          py::arg("jobs") = 0);

    m.def("verify_multi",
          [](int p, int d, const std::vector<std::vector<int>>& sets, const std::vector<int>& lengths,
             int jobs) {
              std::vector<ResidueSet> palettes;
              for (const auto& s : sets) palettes.push_back(ResidueSet::of(p, s));
              return verify_result_dict(verify_multi(p, d, palettes, lengths, jobs));
          },
          py::arg("p"), py::arg("d"), py::arg("sets"), py::arg("lengths"), py::arg("jobs") = 0);

    m.def("red_l3_free",
          [](int p, int d, const std::vector<int>& set) { return red_l3_free_direct(make_spec(p, d, set)); },
          py::arg("p"), py::arg("d"), py::arg("set"));

    m.def("parallelogram_free",
          [](int p, int d, const std::vector<int>& set, int gamma) {
              return parallelogram_free(make_spec(p, d, set), ParallelogramFamily{gamma});
          },
          py::arg("p"), py::arg("d"), py::arg("set"), py::arg("gamma"));

    m.def("verify_parallelogram",
          [](int p, int d, const std::vector<int>& set, int gamma, int m_, int jobs) {
              return verify_result_dict(verify_parallelogram_claim(make_spec(p, d, set), gamma, m_, jobs));
          },
          py::arg("p"), py::arg("d"), py::arg("set"), py::arg("gamma"), py::arg("m"),
          py::arg("jobs") = 0);

    m.def("shifted_residue_cover",
          [](int p, const std::vector<int>& set, bool nonzero_only) {
              return shifted_residue_cover(p, ResidueSet::of(p, set), nonzero_only);
          },
          py::arg("p"), py::arg("set"), py::arg("nonzero_only") = false);

    m.def("red_interval_condition",
          [](const std::string& x, int p) { return red_interval_condition(parse_rational(x), p); },
          py::arg("x"), py::arg("p"));

    m.def("certify_alpha",
          [](const std::string& alpha_sq) {
              const auto slash = alpha_sq.find('/');
              if (slash != std::string::npos &&
                  gcd(BigInt(alpha_sq.substr(0, slash)), BigInt(alpha_sq.substr(slash + 1))) != 1)
                  throw NotCoprime("alpha_sq must be given in lowest terms");
              const Rational target = parse_rational(alpha_sq);
              const AlphaCertificate cert = certify_rational(numerator(target), denominator(target));
              return json_to_py(certificate_to_json(cert));
          },
          py::arg("alpha_sq"), "build and verify a certificate for alpha^2 given as 'a/b'");

    m.def("verify_certificate",
          [](const py::dict& cert) {
              const std::string dumped =
                  py::module_::import("json").attr("dumps")(cert).cast<std::string>();
              const CertCheck check = verify_certificate(certificate_from_json(Json::parse(dumped)));
              return py::make_tuple(check.ok, check.transcript);
          },
          py::arg("certificate"));

    m.def("search_pairs",
          [](int p_lo, int p_hi, int max_set, int red, int cap, int d_fixed, int jobs) {
              SearchSpace space;
              space.p_lo = p_lo;
              space.p_hi = p_hi;
              space.max_set_size = max_set;
              space.red_length = red;
              space.n_cap = cap;
              if (d_fixed > 0) space.d_rule = [d_fixed](int, int dv) { return dv == d_fixed; };
              py::list out;
              for (const auto& rec : search_pairs(space, jobs)) {
                  py::dict row;
                  row["p"] = rec.spec.p;
                  row["d"] = rec.spec.d;
                  row["set"] = rec.spec.set.elements();
                  row["red"] = rec.red_length;
                  row["blue"] = rec.best_blue;
                  out.append(row);
              }
              return out;
          },
          py::arg("p_lo"), py::arg("p_hi"), py::arg("max_set"), py::arg("red"), py::arg("cap") = 40,
          py::arg("d") = 0, py::arg("jobs") = 0);

    m.def("reproduce",
          [](const std::string& only, int jobs) {
              py::list out;
              for (const auto& row : run_reproduce(reproduction_table(), only, jobs, false))
                  out.append(json_to_py(report_to_json(row, false, false)));
              return out;
          },
          py::arg("only") = "", py::arg("jobs") = 0);
}
