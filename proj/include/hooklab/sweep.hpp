#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "hooklab/sampler.hpp"
#include "hooklab/verify.hpp"

namespace hooklab {

struct SweepOptions {
    int max_size = 6;
    std::vector<std::string> identities;  // empty means all
    std::uint64_t seed = 1;
    int trials = 20;
    int truncation = 20;
    int threads = 1;
};

inline const std::vector<std::string>& sweep_identity_names() {
    static const std::vector<std::string> names = {
        "hlf",        "q-hlf",          "it-rpp",          "k-hlf",
        "q-k-hlf-sit", "q-k-hlf",       "k-hlf-multivariate", "k-hlf-infinite",
        "beta-coefficients", "nhlf",    "q-nhlf",          "rpp-skew",
        "k-nhlf",     "skew-q",         "skew-chevalley",  "k-nhlf-multivariate",
        "q-k-nhlf",   "oof",            "k-oof",           "pieri",
        "vanishing",  "g-properties"};
    return names;
}

/// Deterministic task list for the requested identities over all shapes up
/// to the size bound. Per-task seeds depend only on (seed, task key), so a
/// parallel run produces the same reports as a serial one.
inline std::vector<VerificationReport> run_sweep(const SweepOptions& opt) {
    std::set<std::string> wanted(opt.identities.begin(), opt.identities.end());
    if (wanted.count("all")) wanted.clear();
    auto active = [&](const std::string& id) { return wanted.empty() || wanted.count(id); };

    std::vector<std::function<VerificationReport()>> tasks;
    auto seed_for = [&](const std::string& key) { return derive_seed(opt.seed, key); };

    for (int n = 0; n <= opt.max_size; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            int d = std::max(1, lambda.length());
            std::string key = lambda.str();
            if (active("hlf")) tasks.push_back([=] { return verify_hlf(lambda); });
            if (active("q-hlf"))
                tasks.push_back([=] { return verify_qhlf(lambda, opt.truncation); });
            if (active("it-rpp"))
                tasks.push_back([=] { return verify_it_rpp(lambda, opt.truncation); });
            if (active("k-hlf")) tasks.push_back([=] { return verify_khlf(lambda, d); });
            if (active("q-k-hlf-sit")) tasks.push_back([=] { return verify_qkhlf_cor(lambda); });
            if (active("q-k-hlf"))
                tasks.push_back([=] { return verify_qkhlf(lambda, d, seed_for("q-k-hlf/" + key)); });
            if (active("k-hlf-multivariate"))
                tasks.push_back([=] {
                    return verify_khlf_multivariate(lambda, d, opt.trials,
                                                    seed_for("k-hlf-multivariate/" + key));
                });
            if (active("k-hlf-infinite"))
                tasks.push_back([=] {
                    return verify_infinite_khlf(lambda, d, make_rational(-1, lambda.part(1) + d + 1),
                                                400, make_rational(1, 100000000));
                });
            if (active("beta-coefficients"))
                tasks.push_back([=] { return verify_beta_coefficients(lambda, d); });
            if (active("pieri") && lambda.length() + 1 <= 4)
                tasks.push_back([=] {
                    return verify_pieri(lambda, lambda.length() + 1, opt.trials,
                                        seed_for("pieri/" + key));
                });
            if (active("g-properties") && lambda.length() <= 4)
                tasks.push_back([=] {
                    return verify_g_properties(lambda, std::max(1, lambda.length()), opt.trials,
                                               seed_for("g-properties/" + key));
                });

            for (const Partition& mu : subdiagrams(lambda)) {
                SkewShape sh(lambda, mu);
                std::string skey = sh.str();
                if (active("nhlf")) tasks.push_back([=] { return verify_nhlf(sh); });
                if (active("q-nhlf"))
                    tasks.push_back([=] { return verify_qnhlf(sh, opt.truncation); });
                if (active("rpp-skew"))
                    tasks.push_back([=] { return verify_rpp_formulas(sh, opt.truncation); });
                if (active("k-nhlf")) tasks.push_back([=] { return verify_knhlf(sh, d); });
                if (active("skew-q")) tasks.push_back([=] { return verify_skew_q(sh); });
                if (active("skew-chevalley"))
                    tasks.push_back([=] {
                        return verify_skew_chevalley(sh, d, opt.trials,
                                                     seed_for("skew-chevalley/" + skey));
                    });
                if (active("k-nhlf-multivariate"))
                    tasks.push_back([=] {
                        return verify_knhlf_multivariate(sh, d, opt.trials,
                                                         seed_for("k-nhlf-multivariate/" + skey));
                    });
                if (active("q-k-nhlf"))
                    tasks.push_back([=] { return verify_qknhlf(sh, d, opt.trials, seed_for("q-k-nhlf/" + skey)); });
                if (active("oof")) tasks.push_back([=] { return verify_oof(sh, d); });
                if (active("k-oof")) tasks.push_back([=] { return verify_koof(sh, d); });
            }
        }
    }

    if (active("vanishing")) {
        // mu = lambda pairs plus a spread of non-contained pairs
        for (int n = 0; n <= std::min(opt.max_size, 4); ++n)
            for (const Partition& lambda : partitions_of(n)) {
                int d = std::max(1, lambda.length());
                tasks.push_back([=] {
                    return verify_vanishing(lambda, lambda, d, opt.trials,
                                            seed_for("vanishing/" + lambda.str()));
                });
            }
        for (int n = 1; n <= opt.max_size; ++n)
            for (const Partition& mu : partitions_of(n))
                for (const Partition& lambda : partitions_up_to(std::min(opt.max_size, 4))) {
                    if (lambda.contains(mu) || lambda.length() > 3) continue;
                    int d = std::max(3, lambda.length());
                    if (mu.length() > d) continue;
                    tasks.push_back([=] {
                        return verify_vanishing(mu, lambda, d, opt.trials,
                                                seed_for("vanishing/" + mu.str() + "@" + lambda.str()));
                    });
                }
    }

    std::vector<VerificationReport> reports(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            reports[i] = tasks[i]();
        }
    };
    int threads = std::max(1, opt.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::sort(reports.begin(), reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
        return std::tie(a.identity, a.shape, a.d, a.mode) < std::tie(b.identity, b.shape, b.d, b.mode);
    });
    return reports;
}

}  // namespace hooklab
