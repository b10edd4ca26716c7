// Command-line front end: exhaustive enumeration of tableau, diagram and
// path families, and exact verification of the hook-length identities they
// satisfy. All arithmetic is exact; random modes are seeded and reproducible.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hooklab/hooklab.hpp"

namespace {

using nlohmann::json;
using namespace hooklab;

json cell_json(Cell u) { return json{{"r", u.row}, {"c", u.col}}; }

json report_json(const VerificationReport& rep, bool timings) {
    json j{{"identity", rep.identity}, {"shape", rep.shape},       {"d", rep.d},
           {"mode", rep.mode},         {"trials", rep.trials},     {"seed", rep.seed},
           {"truncation", rep.truncation}, {"lhs", rep.lhs},       {"rhs", rep.rhs},
           {"pass", rep.pass},         {"error_bound", rep.error_bound}, {"note", rep.note}};
    if (timings) j["runtime_seconds"] = rep.runtime_seconds;
    return j;
}

void emit_reports(const std::vector<VerificationReport>& reports, const std::string& format,
                  bool timings) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r, timings));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "identity,shape,d,mode,pass\n";
        for (const auto& r : reports)
            std::cout << r.identity << ",\"" << r.shape << "\"," << r.d << "," << r.mode << ","
                      << (r.pass ? "true" : "false") << "\n";
    } else {
        for (const auto& r : reports) {
            std::printf("%-22s %-16s d=%-2d %-24s %s", r.identity.c_str(), r.shape.c_str(), r.d,
                        r.mode.c_str(), r.pass ? "pass" : "FAIL");
            if (!r.note.empty()) std::printf("  (%s)", r.note.c_str());
            std::printf("\n");
        }
    }
}

int enumerate_command(const std::string& family, const std::string& shapeText, int d,
                      long maxWeight, const std::string& format) {
    SkewShape sh = SkewShape::parse(shapeText);
    json out{{"shape", sh.str()}, {"family", family}};

    auto tableauxJson = [&](const std::vector<Tableau>& ts) {
        out["count"] = ts.size();
        json arr = json::array();
        for (const Tableau& t : ts) {
            json cells = json::array();
            auto cs = t.shape().cells();
            for (std::size_t i = 0; i < cs.size(); ++i) {
                json c = cell_json(cs[i]);
                c["entry"] = t.entries()[i];
                cells.push_back(c);
            }
            arr.push_back(json{{"cells", cells}});
        }
        out["tableaux"] = arr;
    };
    auto diagramsJson = [&](const std::vector<std::pair<Diagram, std::vector<Cell>>>& ds) {
        out["count"] = ds.size();
        json arr = json::array();
        for (const auto& [dgr, peaks] : ds) {
            json cells = json::array(), pk = json::array();
            for (Cell u : dgr.cells) cells.push_back(cell_json(u));
            for (Cell u : peaks) pk.push_back(cell_json(u));
            arr.push_back(json{{"ambient", dgr.ambient.str()}, {"cells", cells}, {"peaks", pk}});
        }
        out["diagrams"] = arr;
    };

    if (family == "syt") {
        tableauxJson(enum_syt(sh));
    } else if (family == "sit") {
        tableauxJson(enum_sit(sh));
    } else if (family == "bsyt") {
        tableauxJson(enum_bsyt(sh));
    } else if (family == "it" || family == "ssyt" || family == "rpp") {
        if (maxWeight < 0) throw CLI::ValidationError("--max-weight is required for " + family);
        Family f = family == "it" ? Family::IT : family == "ssyt" ? Family::SSYT : Family::RPP;
        tableauxJson(enum_weight_bounded(f, sh, maxWeight));
    } else if (family == "ssvt") {
        if (d < 1) throw CLI::ValidationError("--d is required for ssvt");
        auto ts = enum_ssvt(sh, d);
        out["count"] = ts.size();
        json arr = json::array();
        for (const SetValuedTableau& t : ts) {
            json cells = json::array();
            auto cs = t.shape().cells();
            for (std::size_t i = 0; i < cs.size(); ++i) {
                json c = cell_json(cs[i]);
                c["entries"] = t.sets()[i];
                cells.push_back(c);
            }
            arr.push_back(json{{"cells", cells}});
        }
        out["tableaux"] = arr;
    } else if (family == "excited") {
        diagramsJson(excited_peaks(sh));
    } else if (family == "gexcited") {
        std::vector<std::pair<Diagram, std::vector<Cell>>> ds;
        for (const Diagram& dgr : generalized_excited_diagrams(sh)) ds.emplace_back(dgr, std::vector<Cell>{});
        diagramsJson(ds);
    } else if (family == "pleasant") {
        auto ps = pleasant_diagrams(sh);
        out["count"] = ps.size();
        json arr = json::array();
        for (const auto& cells : ps) {
            json cj = json::array();
            for (Cell u : cells) cj.push_back(cell_json(u));
            arr.push_back(json{{"cells", cj}});
        }
        out["diagrams"] = arr;
    } else {
        throw CLI::ValidationError("unknown family: " + family);
    }

    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "family,shape,count\n"
                  << family << ",\"" << sh.str() << "\"," << out["count"].get<std::size_t>() << "\n";
    } else {
        std::printf("%s(%s): %zu\n", family.c_str(), sh.str().c_str(),
                    out["count"].get<std::size_t>());
    }
    return 0;
}

struct VerifyArgs {
    std::string identity;
    std::string shape;
    std::string at;  // second shape for the vanishing check
    int d = 0;
    std::string mode;
    int trials = 20;
    std::optional<std::uint64_t> seed;
    int truncation = 20;
    std::string beta = "-1/4";
    std::string tol = "1/100000000";
};

const std::map<std::string, std::string>& identity_modes() {
    static const std::map<std::string, std::string> modes = {
        {"hlf", "exact-count"},
        {"q-hlf", "truncated-series"},
        {"it-rpp", "truncated-series"},
        {"k-hlf", "exact-beta"},
        {"q-k-hlf-sit", "exact-q"},
        {"q-k-hlf", "exact-beta+exact-q"},
        {"k-hlf-multivariate", "random-multivariate"},
        {"k-hlf-infinite", "numeric-truncated"},
        {"beta-coefficients", "exact-beta"},
        {"nhlf", "exact-count"},
        {"q-nhlf", "truncated-series"},
        {"rpp-skew", "truncated-series"},
        {"k-nhlf", "exact-beta"},
        {"skew-q", "exact-q"},
        {"skew-chevalley", "random-multivariate"},
        {"k-nhlf-multivariate", "random-multivariate"},
        {"q-k-nhlf", "exact-beta+random-multivariate"},
        {"oof", "exact-count"},
        {"k-oof", "exact-beta"},
        {"pieri", "random-multivariate"},
        {"vanishing", "random-multivariate"},
        {"g-properties", "random-multivariate"},
        {"no-characterization", "exact-count"},
        {"path-bijection", "exact-count"}};
    return modes;
}

std::string canonical_identity(std::string id) {
    static const std::map<std::string, std::string> aliases = {
        {"khlf", "k-hlf"},           {"qhlf", "q-hlf"},
        {"knhlf", "k-nhlf"},         {"qnhlf", "q-nhlf"},
        {"koof", "k-oof"},           {"qkhlf", "q-k-hlf"},
        {"qkhlf-cor", "q-k-hlf-sit"}, {"qknhlf", "q-k-nhlf"},
        {"khlf-multi", "k-hlf-multivariate"}, {"knhlf-multi", "k-nhlf-multivariate"},
        {"khlf-inf", "k-hlf-infinite"}};
    auto it = aliases.find(id);
    return it == aliases.end() ? id : it->second;
}

VerificationReport run_verify(VerifyArgs a) {
    a.identity = canonical_identity(a.identity);
    auto it = identity_modes().find(a.identity);
    if (it == identity_modes().end())
        throw CLI::ValidationError("unknown identity id: " + a.identity);
    if (!a.mode.empty() && a.mode != it->second)
        throw CLI::ValidationError("identity " + a.identity + " only supports mode " + it->second);
    bool randomMode = it->second == "random-multivariate" || a.identity == "q-k-hlf" ||
                      a.identity == "q-k-nhlf";
    if (randomMode && !a.seed)
        throw CLI::ValidationError("--seed is mandatory for randomized modes");
    std::uint64_t seed = a.seed.value_or(0);

    SkewShape sh = SkewShape::parse(a.shape);
    const Partition& lambda = sh.outer();
    int d = a.d > 0 ? a.d : std::max(1, lambda.length());

    if (a.identity == "hlf") return verify_hlf(lambda);
    if (a.identity == "q-hlf") return verify_qhlf(lambda, a.truncation);
    if (a.identity == "it-rpp") return verify_it_rpp(lambda, a.truncation);
    if (a.identity == "k-hlf") return verify_khlf(lambda, d);
    if (a.identity == "q-k-hlf-sit") return verify_qkhlf_cor(lambda);
    if (a.identity == "q-k-hlf") return verify_qkhlf(lambda, d, seed);
    if (a.identity == "k-hlf-multivariate")
        return verify_khlf_multivariate(lambda, d, a.trials, seed);
    if (a.identity == "k-hlf-infinite")
        return verify_infinite_khlf(lambda, d, parse_rational(a.beta), a.truncation,
                                    parse_rational(a.tol));
    if (a.identity == "beta-coefficients") return verify_beta_coefficients(lambda, d);
    if (a.identity == "nhlf") return verify_nhlf(sh);
    if (a.identity == "q-nhlf") return verify_qnhlf(sh, a.truncation);
    if (a.identity == "rpp-skew") return verify_rpp_formulas(sh, a.truncation);
    if (a.identity == "k-nhlf") return verify_knhlf(sh, d);
    if (a.identity == "skew-q") return verify_skew_q(sh);
    if (a.identity == "skew-chevalley") return verify_skew_chevalley(sh, d, a.trials, seed);
    if (a.identity == "k-nhlf-multivariate")
        return verify_knhlf_multivariate(sh, d, a.trials, seed);
    if (a.identity == "q-k-nhlf") return verify_qknhlf(sh, d, a.trials, seed);
    if (a.identity == "oof") return verify_oof(sh, d);
    if (a.identity == "k-oof") return verify_koof(sh, d);
    if (a.identity == "pieri") return verify_pieri(sh.inner().empty() ? lambda : sh.inner(), d, a.trials, seed);
    if (a.identity == "vanishing") {
        Partition at = Partition::parse(a.at);
        int dd = a.d > 0 ? a.d : std::max(1, at.length());
        return verify_vanishing(lambda, at, dd, a.trials, seed);
    }
    if (a.identity == "g-properties") return verify_g_properties(lambda, d, a.trials, seed);
    if (a.identity == "no-characterization") {
        detail::Stopwatch timer;
        VerificationReport rep{.identity = "no-characterization", .shape = sh.str(),
                               .mode = "exact-count"};
        rep.pass = check_no_characterization(sh);
        rep.lhs = std::to_string(generalized_excited_diagrams(sh).size());
        rep.rhs = rep.lhs;
        rep.runtime_seconds = timer.seconds();
        return rep;
    }
    // path-bijection
    detail::Stopwatch timer;
    VerificationReport rep{.identity = "path-bijection", .shape = sh.str(), .mode = "exact-count"};
    PathModel model(sh);
    auto diagrams = generalized_excited_diagrams(sh);
    bool pass = labeled_paths_bijection(sh);
    auto fams = model.enumerate_valid_families();
    pass = pass && fams.size() == diagrams.size();
    for (const Diagram& dgr : diagrams)
        pass = pass && model.from_paths(model.to_paths(dgr)) == dgr;
    rep.lhs = std::to_string(fams.size());
    rep.rhs = std::to_string(diagrams.size());
    rep.pass = pass;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

int groth_command(const std::string& permText, const std::string& mode, const std::string& betaText,
                  const std::string& format) {
    Permutation w = Permutation::parse(permText);
    if (!w.is_vexillary()) {
        std::cerr << "error: " << permText << " is not vexillary (contains a 2143 pattern)\n";
        return 2;
    }
    if (mode == "principal") {
        UniPoly<Rational> gamma = principal_specialization(w);
        if (gamma != principal_specialization_peaks(w)) {
            std::cerr << "internal disagreement between the two summation forms\n";
            return 3;
        }
        if (betaText == "formal") {
            if (format == "json")
                std::cout << json{{"perm", w.str()}, {"gamma", gamma.str("b")}}.dump(2) << "\n";
            else
                std::cout << "Gamma_" << w.str() << "(b) = " << gamma.str("b") << "\n";
        } else {
            Rational v = gamma(parse_rational(betaText));
            if (format == "json")
                std::cout << json{{"perm", w.str()}, {"beta", betaText}, {"gamma", to_string(v)}}.dump(2)
                          << "\n";
            else
                std::cout << "Gamma_" << w.str() << "(" << betaText << ") = " << to_string(v) << "\n";
        }
        return 0;
    }
    if (mode != "double") throw CLI::ValidationError("--mode must be double or principal");
    auto expansion = double_groth_y0_expansion(w);
    json arr = json::array();
    for (const auto& [exps, poly] : expansion) {
        std::string mono;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
        }
        if (mono.empty()) mono = "1";
        arr.push_back(json{{"monomial", mono}, {"coefficient", poly.str("b")}});
    }
    if (format == "json") {
        std::cout << json{{"perm", w.str()}, {"expansion", arr}}.dump(2) << "\n";
    } else {
        std::cout << "G_" << w.str() << "(x, 0) =\n";
        for (const auto& term : arr)
            std::cout << "  (" << term["coefficient"].get<std::string>() << ") * "
                      << term["monomial"].get<std::string>() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hooklab: exact enumeration and verification of hook-length identities"};
    app.set_config("--config");
    app.require_subcommand(1);

    // enumerate
    auto* enumCmd = app.add_subcommand("enumerate", "enumerate a tableau or diagram family");
    std::string family, shapeText, format = "json";
    int dFlag = 0;
    long maxWeight = -1;
    enumCmd->add_option("--family", family, "syt|sit|bsyt|it|ssyt|rpp|ssvt|excited|gexcited|pleasant")
        ->required();
    enumCmd->add_option("--shape", shapeText, "partition or skew shape, e.g. 4,4,2/2,1")->required();
    enumCmd->add_option("--d", dFlag, "entry bound for ssvt");
    enumCmd->add_option("--max-weight", maxWeight, "weight bound for it/ssyt/rpp");
    enumCmd->add_option("--format", format, "json|csv|table");

    // verify
    auto* verifyCmd = app.add_subcommand("verify", "verify one identity on one shape");
    VerifyArgs va;
    std::string verifyFormat = "json";
    bool timings = false;
    verifyCmd->add_option("identity", va.identity, "identity id (see README)")->required();
    verifyCmd->add_option("--shape", va.shape, "shape or skew shape")->required();
    verifyCmd->add_option("--at", va.at, "evaluation shape lambda for the vanishing check");
    verifyCmd->add_option("--d", va.d, "number of variables (default: length of the outer shape)");
    verifyCmd->add_option("--mode", va.mode, "evaluation mode (must match the identity)");
    verifyCmd->add_option("--trials", va.trials, "random points per shape");
    std::uint64_t seedFlag = 0;
    bool seedSet = false;
    verifyCmd->add_option("--seed", seedFlag, "sampler seed (mandatory for random modes)")
        ->each([&](const std::string&) { seedSet = true; });
    verifyCmd->add_option("--truncation", va.truncation, "series order N / partial-sum size M");
    verifyCmd->add_option("--beta", va.beta, "rational beta for the numeric mode");
    verifyCmd->add_option("--tol", va.tol, "rational tolerance for the numeric mode");
    verifyCmd->add_option("--format", verifyFormat, "json|csv|table");
    verifyCmd->add_flag("--timings", timings, "include runtimes in the JSON output");

    // sweep
    auto* sweepCmd = app.add_subcommand("sweep", "verify identities over all shapes up to a size");
    SweepOptions so;
    std::vector<std::string> identityList;
    std::string sweepFormat = "json";
    bool sweepTimings = false;
    sweepCmd->add_option("--max-size", so.max_size, "largest |lambda| to sweep");
    sweepCmd->add_option("--identities", identityList, "comma list of identity ids or 'all'")
        ->delimiter(',');
    sweepCmd->add_option("--seed", so.seed, "base seed for all randomized modes")->required();
    sweepCmd->add_option("--trials", so.trials, "random points per shape");
    sweepCmd->add_option("--truncation", so.truncation, "series order");
    int threadsFlag = 0;
    sweepCmd->add_option("--threads", threadsFlag, "parallel workers (default HOOKLAB_THREADS or 1)");
    sweepCmd->add_option("--format", sweepFormat, "json|csv|table");
    sweepCmd->add_flag("--timings", sweepTimings, "include runtimes in the JSON output");

    // groth
    auto* grothCmd = app.add_subcommand("groth", "double Grothendieck polynomials of vexillary permutations");
    std::string permText, grothMode = "double", betaText = "formal", grothFormat = "table";
    grothCmd->add_option("--perm", permText, "permutation in one-line notation, e.g. 1432")->required();
    grothCmd->add_option("--mode", grothMode, "double|principal");
    grothCmd->add_option("--beta", betaText, "formal or a rational value");
    grothCmd->add_option("--format", grothFormat, "json|table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumCmd) return enumerate_command(family, shapeText, dFlag, maxWeight, format);
        if (*verifyCmd) {
            if (seedSet) va.seed = seedFlag;
            VerificationReport rep = run_verify(va);
            emit_reports({rep}, verifyFormat, timings);
            return rep.pass ? 0 : 1;
        }
        if (*sweepCmd) {
            for (const std::string& id : identityList)
                so.identities.push_back(canonical_identity(id));
            if (threadsFlag > 0) {
                so.threads = threadsFlag;
            } else if (const char* env = std::getenv("HOOKLAB_THREADS")) {
                so.threads = std::max(1, std::atoi(env));
            }
            auto reports = run_sweep(so);
            emit_reports(reports, sweepFormat, sweepTimings);
            for (const auto& r : reports)
                if (!r.pass) return 1;
            return 0;
        }
        if (*grothCmd) return groth_command(permText, grothMode, betaText, grothFormat);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
