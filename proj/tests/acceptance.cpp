// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria carry their own time ceilings where one is due.
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qcert/cli.hpp"
#include "qcert/dissection.hpp"
#include "qcert/partitions.hpp"
#include "qcert/qproducts.hpp"
#include "qcert/theorems.hpp"

using namespace qcert;

namespace {

struct Criterion {
    std::string name;
    double time_limit_s; // <= 0: no limit
    std::function<void(std::string&)> body;
};

void require(bool ok, const std::string& what, std::string& detail) {
    if (!ok && detail.empty()) detail = what;
}

void golden_value(std::string& detail) {
    const SeriesZ series = grs_generating(2, 5, 14, ExactRing{});
    require(series.coeff(13) == 2, "series coefficient a(2,5)(13) != 2", detail);

    const CountTable table = count_distinct_regular({2, 5}, 13);
    require(table[13] == 2, "oracle count a(2,5)(13) != 2", detail);

    const auto parts = enumerate_distinct_regular({2, 5}, 13);
    require(parts.size() == 2 && parts[0] == std::vector<std::int64_t>{13} &&
                parts[1] == std::vector<std::int64_t>{9, 3, 1},
            "enumeration is not {[13],[9,3,1]}", detail);
}

void oracle_equivalence(std::string& detail) {
    for (const auto& [r, s] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 5}, {2, 7}, {4, 5}, {4, 9}, {3, 5}}) {
        const SeriesZ series = grs_generating(r, s, 201, ExactRing{});
        const CountTable table = count_distinct_regular({r, s}, 200);
        for (std::int64_t n = 0; n <= 200; ++n) {
            if (series.coeff(n) != table[static_cast<std::size_t>(n)]) {
                detail = "mismatch at (" + std::to_string(r) + "," + std::to_string(s) +
                         "), n = " + std::to_string(n);
                return;
            }
        }
    }
}

void identity_suite(std::string& detail) {
    for (NamedIdentity id : all_identities()) {
        const IdentityReport report = verify_identity(id, 500);
        if (!report.pass) {
            detail = std::string("identity ") + identity_name(id) + " failed at exponent " +
                     std::to_string(report.diff->exponent);
            return;
        }
    }
    std::mt19937_64 rng(20240815);
    std::uniform_int_distribution<std::int64_t> exp_dist(1, 8);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    const ExactRing Z;
    for (int trial = 0; trial < 20; ++trial) {
        const ThetaSpec spec{sign_dist(rng) ? +1 : -1, exp_dist(rng), sign_dist(rng) ? +1 : -1,
                             exp_dist(rng)};
        if (!equal_up_to(theta_sum(spec, 300, Z), theta_product(spec, 300, Z), 300)) {
            detail = "triple product law failed on randomized spec " + std::to_string(trial);
            return;
        }
    }
}

void p_dissection_suite(std::string& detail) {
    for (std::int64_t p : {5, 7, 11, 13}) {
        const PDissectionReport report = verify_p_dissection(p, p * p + 50);
        if (!report.series_equal) {
            detail = "series mismatch for p = " + std::to_string(p);
            return;
        }
        if (!report.residues_excluded) {
            detail = "residue exclusion failed for p = " + std::to_string(p);
            return;
        }
    }
}

void theorem_sweep(std::string& detail) {
    VerifyEngine engine(60000);
    const std::vector<VerificationReport> reports = engine.verify_all(Profile::Quick);
    std::map<std::string, std::int64_t> checked;
    for (const VerificationReport& r : reports) {
        if (r.outcome != Outcome::Pass) {
            detail = "claim " + r.claim + " " + to_string(r.outcome) +
                     (r.reason.empty() ? "" : ": " + r.reason);
            if (!r.counterexamples.empty()) {
                detail += " first counterexample n=" + std::to_string(r.counterexamples[0].n);
            }
            return;
        }
        checked[r.claim] = r.n_checked;
    }
    // the sweep must include the stated claims at at least the stated ranges
    const std::vector<std::pair<std::string, std::int64_t>> floors = {
        {"thm1/e1", 2000},
        {"thm1/e2", 500},
        {"thm3/e8[gamma=0,p=17]", 499},
        {"thm3/e8a[gamma=0,p=17]", 499},
        {"thm3/e9[gamma=0,p=17,j=1]", 30},
        {"thm3/e9[gamma=0,p=17,j=16]", 30},
        {"thm3/e9b[gamma=0,p=17,j=1]", 8},
        {"thm3/e9b[gamma=0,p=17,j=16]", 8},
        {"thm4/e10[beta=0]", 499},
        {"thm4/e10[beta=1]", 15},
        {"thm4/e11[beta=0]", 499},
        {"thm4/e12[beta=0,w=13]", 400},
        {"thm4/e12[beta=0,w=37]", 400},
        {"thm4/e13[beta=0,w=41]", 400},
        {"thm4/e13[beta=0,w=89]", 400},
        {"thm4/abstract", 1000},
        {"thm5/f1[alpha=0,p=11]", 499},
        {"thm5/f1a[alpha=0,p=11]", 499},
        {"thm5/f2[alpha=0,p=11,j=1]", 30},
        {"thm5/f2[alpha=0,p=11,j=10]", 30},
        {"thm5/f2a[alpha=0,p=11,j=1]", 30},
        {"thm5/f2a[alpha=0,p=11,j=10]", 30},
        {"thm7/c3[alpha=0]", 499},
        {"thm7/c3[alpha=1]", 499},
        {"thm7/c3[alpha=2]", 499},
        {"thm7/c4[alpha=0,w=13]", 400},
        {"thm7/c4[alpha=1,w=13]", 400},
        {"thm7/c4[alpha=0,w=17]", 400},
        {"thm7/c4[alpha=1,w=17]", 400},
        {"thm8/c1[alpha=0,p=11]", 499},
        {"thm8/c2[alpha=0,p=11,j=1]", 30},
        {"thm8/c2[alpha=0,p=11,j=10]", 30},
        {"thm9/i1[w=3]", 800},
        {"thm9/i1[w=5]", 800},
        {"thm9/i2", 800},
        {"thm9/i3[alpha=0]", 400},
        {"thm9/i3[alpha=1]", 100},
        {"thm9/i4[w=13]", 800},
        {"thm9/i4[w=25]", 800},
        {"thm9/i4[w=37]", 800},
        {"thm9/i5", 500},
        {"classic/p5n4", 199},
        {"classic/p7n5", 142},
        {"classic/p11n6", 90},
    };
    for (const auto& [id, floor] : floors) {
        auto it = checked.find(id);
        if (it == checked.end()) {
            detail = "claim " + id + " missing from the quick sweep";
            return;
        }
        if (it->second < floor) {
            detail = "claim " + id + " checked only to n = " + std::to_string(it->second);
            return;
        }
    }
}

void proof_step_registry(std::string& detail) {
    for (const std::string& id : proof_step_ids()) {
        const ProofStepReport report = verify_proof_step(id, 300);
        if (!report.pass) {
            detail = "proof step " + id + " failed at exponent " +
                     std::to_string(report.diff->exponent);
            return;
        }
    }
}

void binomial_congruence(std::string& detail) {
    std::mt19937_64 rng(424242);
    const ModRing m2(2);
    for (int trial = 0; trial < 50; ++trial) {
        const std::int64_t t = 1 + static_cast<std::int64_t>(rng() % 10);
        const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 5);
        const SeriesMod lhs = power(euler(t, 200, m2), 2 * m);
        const SeriesMod rhs = power(euler(2 * t, 200, m2), m);
        if (!equal_up_to(lhs, rhs, 200)) {
            detail = "f_" + std::to_string(t) + "^" + std::to_string(2 * m) +
                     " != f_" + std::to_string(2 * t) + "^" + std::to_string(m) + " (mod 2)";
            return;
        }
    }
}

void determinism(std::string& detail) {
    auto run_once = [] {
        std::ostringstream out, err;
        const int rc =
            run_cli({"verify", "all", "--profile", "quick", "--format", "json"}, out, err);
        return std::pair<int, std::string>(rc, out.str());
    };
    const auto [rc1, out1] = run_once();
    const auto [rc2, out2] = run_once();
    require(rc1 == 0 && rc2 == 0, "verify all did not exit cleanly", detail);
    nlohmann::json a = nlohmann::json::parse(out1);
    nlohmann::json b = nlohmann::json::parse(out2);
    for (auto& report : a) report["millis"] = nullptr;
    for (auto& report : b) report["millis"] = nullptr;
    require(a == b, "reports differ beyond the wall-time field", detail);
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"golden value a(2,5)(13) by series, oracle and enumeration", 1.0, golden_value},
        {"oracle equivalence to n = 200 for five (r,s) pairs", 5.0, oracle_equivalence},
        {"identity suite t1-t6, g1, u7 at order 500 + 20 random triple products", 10.0,
         identity_suite},
        {"prime dissection of f_1 for p = 5, 7, 11, 13 at order p^2+50", 30.0,
         p_dissection_suite},
        {"theorem sweep, quick profile, every registry claim", 120.0, theorem_sweep},
        {"proof-step identity registry at order 300", 10.0, proof_step_registry},
        {"binomial congruence f_t^2m = f_2t^m mod 2, 50 random picks", 0.0,
         binomial_congruence},
        {"determinism of verify all --profile quick --format json", 0.0, determinism},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (detail.empty() && c.time_limit_s > 0 && seconds > c.time_limit_s) {
            detail = "took " + std::to_string(seconds) + " s, limit " +
                     std::to_string(c.time_limit_s) + " s";
        }
        const bool pass = detail.empty();
        if (!pass) ++failed;
        std::printf("[%zu/%zu] %-68s %s (%.2f s)%s%s\n", i + 1, criteria.size(), c.name.c_str(),
                    pass ? "PASS" : "FAIL", seconds, pass ? "" : " -- ",
                    pass ? "" : detail.c_str());
    }
    if (failed == 0) {
        std::printf("ACCEPTANCE: %zu/%zu PASS\n", criteria.size(), criteria.size());
        return 0;
    }
    std::printf("ACCEPTANCE: %d criteria FAILED\n", failed);
    return 1;
}
