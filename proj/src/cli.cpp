#include "qcert/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qcert/dissection.hpp"
#include "qcert/partitions.hpp"
#include "qcert/qproducts.hpp"
#include "qcert/series.hpp"
#include "qcert/theorems.hpp"

namespace qcert {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::int64_t kDefaultQuickBudget = 60000;
constexpr std::int64_t kDefaultFullBudget = 100000;

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
    std::int64_t budget = -1; // -1: resolve from env / profile default
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
    cmd->add_option("--format", opts->format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", opts->out_path, "write output to this file instead of stdout");
    cmd->add_option("--budget", opts->budget, "maximum series order");
}

std::int64_t resolve_budget(const CommonOpts& opts, std::int64_t profile_default) {
    if (opts.budget >= 1) return opts.budget;
    if (const char* env = std::getenv("QC_BUDGET")) {
        try {
            const std::int64_t v = std::stoll(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        throw PreconditionError("QC_BUDGET must be a positive integer");
    }
    return profile_default;
}

// All output is buffered and emitted in one piece so that --out and stdout
// carry identical bytes.
int emit(const CommonOpts& opts, const std::string& payload, std::ostream& out,
         std::ostream& err) {
    if (opts.out_path.empty()) {
        out << payload;
        return kExitOk;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << opts.out_path << "' for writing\n";
        return kExitInternal;
    }
    file << payload;
    return kExitOk;
}

Json counterexample_json(const Counterexample& ce) {
    Json j;
    j["n"] = ce.n;
    j["argument"] = ce.argument.str();
    j["value"] = ce.value;
    j["expected"] = ce.expected;
    if (ce.lifted) {
        j["lifted"] = ce.lifted->str();
    } else {
        j["lifted"] = nullptr;
    }
    return j;
}

Json report_json(const VerificationReport& r) {
    Json j;
    j["claim"] = r.claim;
    j["family"] = r.family;
    j["params"] = r.params;
    j["n_checked"] = r.n_checked;
    j["outcome"] = to_string(r.outcome);
    Json ces = Json::array();
    for (const Counterexample& ce : r.counterexamples) ces.push_back(counterexample_json(ce));
    j["counterexamples"] = std::move(ces);
    j["order"] = r.order;
    j["millis"] = r.millis;
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

struct ExpandArgs {
    std::int64_t r = 0;
    std::int64_t s = 0;
    std::int64_t n_pos = -1;
    std::int64_t n_flag = -1;
    std::int64_t modulus = 0;
    CommonOpts common;
};

std::int64_t pick_n(std::int64_t n_flag, std::int64_t n_pos, const char* what) {
    const std::int64_t n = n_flag >= 0 ? n_flag : n_pos;
    if (n < 0) throw PreconditionError(std::string(what) + ": give the coefficient range as a "
                                                           "positional argument or with -N");
    return n;
}

int cmd_expand(const ExpandArgs& args, std::ostream& out, std::ostream& err) {
    const std::int64_t n_max = pick_n(args.n_flag, args.n_pos, "expand");
    const std::int64_t budget = resolve_budget(args.common, kDefaultFullBudget);
    if (n_max + 1 > budget) {
        throw ResourceError("expand: order " + std::to_string(n_max + 1) + " exceeds budget " +
                            std::to_string(budget));
    }
    std::ostringstream body;
    const bool json = args.common.format == "json";
    Json rows = Json::array();
    if (args.modulus != 0) {
        const ModRing ring(static_cast<std::uint64_t>(args.modulus));
        const SeriesMod series = grs_generating(args.r, args.s, n_max + 1, ring);
        for (std::int64_t n = 0; n <= n_max; ++n) {
            if (json) {
                rows.push_back({{"n", n}, {"value", std::to_string(series.coeff(n))}});
            } else {
                body << n << "\t" << series.coeff(n) << "\n";
            }
        }
    } else {
        const SeriesZ series = grs_generating(args.r, args.s, n_max + 1, ExactRing{});
        for (std::int64_t n = 0; n <= n_max; ++n) {
            if (json) {
                rows.push_back({{"n", n}, {"value", series.coeff(n).str()}});
            } else {
                body << n << "\t" << series.coeff(n) << "\n";
            }
        }
    }
    if (json) body << rows.dump(2) << "\n";
    return emit(args.common, body.str(), out, err);
}

int cmd_oracle(const ExpandArgs& args, std::ostream& out, std::ostream& err) {
    const std::int64_t n_max = pick_n(args.n_flag, args.n_pos, "oracle");
    const std::int64_t budget = resolve_budget(args.common, kDefaultFullBudget);
    if (n_max + 1 > budget) {
        throw ResourceError("oracle: order " + std::to_string(n_max + 1) + " exceeds budget " +
                            std::to_string(budget));
    }
    const SeriesZ series = grs_generating(args.r, args.s, n_max + 1, ExactRing{});
    const CountTable table = count_distinct_regular({args.r, args.s}, n_max);
    bool all_match = true;
    std::ostringstream body;
    Json rows = Json::array();
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const BigInt& from_series = series.coeff(n);
        const BigInt& from_dp = table[static_cast<std::size_t>(n)];
        const bool match = from_series == from_dp;
        all_match = all_match && match;
        if (args.common.format == "json") {
            rows.push_back({{"n", n},
                            {"series", from_series.str()},
                            {"oracle", from_dp.str()},
                            {"match", match}});
        } else {
            body << n << "\t" << from_series << "\t" << from_dp << "\t"
                 << (match ? "OK" : "MISMATCH") << "\n";
        }
    }
    if (args.common.format == "json") {
        Json j;
        j["rows"] = std::move(rows);
        j["all_match"] = all_match;
        body << j.dump(2) << "\n";
    }
    const int rc = emit(args.common, body.str(), out, err);
    if (rc != kExitOk) return rc;
    return all_match ? kExitOk : kExitFail;
}

struct CheckArgs {
    std::string id;
    std::int64_t order_pos = -1;
    std::int64_t order_flag = -1;
    CommonOpts common;
};

int cmd_check_identity(const CheckArgs& args, std::ostream& out, std::ostream& err) {
    std::int64_t order = args.order_flag >= 0 ? args.order_flag : args.order_pos;
    if (order < 0) order = 500;
    const std::int64_t budget = resolve_budget(args.common, kDefaultFullBudget);
    if (order > budget) {
        throw ResourceError("check-identity: order " + std::to_string(order) +
                            " exceeds budget " + std::to_string(budget));
    }

    std::string id = args.id;
    std::int64_t diff_exp = 0;
    std::string diff_lhs, diff_rhs;
    bool pass = false;
    bool has_diff = false;

    if (const std::optional<NamedIdentity> named = identity_from_string(id)) {
        const IdentityReport r = verify_identity(*named, order);
        pass = r.pass;
        if (r.diff) {
            has_diff = true;
            diff_exp = r.diff->exponent;
            diff_lhs = r.diff->lhs;
            diff_rhs = r.diff->rhs;
        }
    } else if (std::find(proof_step_ids().begin(), proof_step_ids().end(), id) !=
               proof_step_ids().end()) {
        const ProofStepReport r = verify_proof_step(id, order);
        pass = r.pass;
        if (r.diff) {
            has_diff = true;
            diff_exp = r.diff->exponent;
            diff_lhs = r.diff->lhs;
            diff_rhs = r.diff->rhs;
        }
    } else if (id == "pdiss5" || id == "pdiss7" || id == "pdiss11" || id == "pdiss13") {
        const std::int64_t p = std::stoll(id.substr(5));
        const std::int64_t effective = std::max(order, p * p + 50);
        const PDissectionReport r = verify_p_dissection(p, effective);
        order = effective;
        pass = r.pass();
        if (r.diff) {
            has_diff = true;
            diff_exp = r.diff->exponent;
            diff_lhs = r.diff->lhs;
            diff_rhs = r.diff->rhs;
        } else if (!r.residues_excluded) {
            has_diff = false;
        }
    } else {
        err << "error: unknown identity '" << id << "'\n";
        return kExitUsage;
    }

    std::ostringstream body;
    if (args.common.format == "json") {
        Json j;
        j["identity"] = id;
        j["order"] = order;
        j["outcome"] = pass ? "PASS" : "FAIL";
        if (has_diff) {
            j["first_difference"] = {{"exponent", diff_exp}, {"lhs", diff_lhs}, {"rhs", diff_rhs}};
        } else {
            j["first_difference"] = nullptr;
        }
        body << j.dump(2) << "\n";
    } else {
        body << (pass ? "PASS" : "FAIL") << "\t" << id << "\torder=" << order;
        if (has_diff) {
            body << "\tfirst_difference=" << diff_exp << "\tlhs=" << diff_lhs
                 << "\trhs=" << diff_rhs;
        }
        body << "\n";
    }
    const int rc = emit(args.common, body.str(), out, err);
    if (rc != kExitOk) return rc;
    return pass ? kExitOk : kExitFail;
}

struct VerifyArgs {
    std::string family;
    std::string profile = "quick";
    std::int64_t n_cap = -1;
    CommonOpts common;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    const std::optional<Profile> profile = profile_from_string(args.profile);
    if (!profile) {
        err << "error: unknown profile '" << args.profile << "'\n";
        return kExitUsage;
    }
    std::string family;
    if (args.family != "all") {
        if (find_family(args.family) == nullptr) {
            err << "error: unknown theorem '" << args.family << "' (use thm1, thm3, thm4, "
                   "thm5, thm7, thm8, thm9, classic or all)\n";
            return kExitUsage;
        }
        family = args.family;
    }
    const std::int64_t budget = resolve_budget(
        args.common, *profile == Profile::Quick ? kDefaultQuickBudget : kDefaultFullBudget);

    VerifyEngine engine(budget);
    const std::vector<VerificationReport> reports =
        engine.verify_all(*profile, family, args.n_cap);

    std::int64_t passed = 0, failed = 0, skipped = 0;
    for (const VerificationReport& r : reports) {
        if (r.outcome == Outcome::Pass) ++passed;
        if (r.outcome == Outcome::Fail) ++failed;
        if (r.outcome == Outcome::Skipped) ++skipped;
    }

    std::ostringstream body;
    if (args.common.format == "json") {
        Json arr = Json::array();
        for (const VerificationReport& r : reports) arr.push_back(report_json(r));
        body << arr.dump(2) << "\n";
    } else {
        for (const VerificationReport& r : reports) {
            body << to_string(r.outcome) << "\t" << r.claim << "\tn=" << r.n_checked
                 << "\torder=" << r.order;
            if (!r.reason.empty()) body << "\t" << r.reason;
            body << "\n";
            for (const Counterexample& ce : r.counterexamples) {
                body << "\tcounterexample\tn=" << ce.n << "\targ=" << ce.argument
                     << "\tvalue=" << ce.value << "\texpected=" << ce.expected;
                if (ce.lifted) body << "\texact=" << *ce.lifted;
                body << "\n";
            }
        }
        body << "# passed=" << passed << " failed=" << failed << " skipped=" << skipped << "\n";
    }
    const int rc = emit(args.common, body.str(), out, err);
    if (rc != kExitOk) return rc;
    return failed == 0 ? kExitOk : kExitFail;
}

struct PrimesArgs {
    std::string family;
    std::int64_t limit = 100;
    CommonOpts common;
};

int cmd_primes(const PrimesArgs& args, std::ostream& out, std::ostream& err) {
    const FamilyInfo* fam = find_family(args.family);
    if (fam == nullptr) {
        err << "error: unknown family '" << args.family << "'\n";
        return kExitUsage;
    }
    std::ostringstream body;
    if (!fam->has_prime_condition()) {
        err << "family '" << args.family << "' has no prime hypothesis\n";
        return emit(args.common, body.str(), out, err);
    }
    const std::vector<std::int64_t> primes = qualifying_primes(args.family, args.limit);
    if (args.common.format == "json") {
        Json arr = Json::array();
        for (std::int64_t p : primes) arr.push_back(p);
        body << arr.dump(2) << "\n";
    } else {
        for (std::int64_t p : primes) body << p << "\n";
    }
    return emit(args.common, body.str(), out, err);
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"q-series expansion and congruence verification for (r,s)-regular "
                 "partitions into distinct parts"};
    app.name("qcert");
    app.require_subcommand(1);

    ExpandArgs expand_args;
    CLI::App* expand = app.add_subcommand("expand", "print a_{r,s}(n) coefficients");
    expand->add_option("r", expand_args.r, "first regularity parameter")->required();
    expand->add_option("s", expand_args.s, "second regularity parameter")->required();
    expand->add_option("n_max", expand_args.n_pos, "largest n to print");
    expand->add_option("-N,--order", expand_args.n_flag, "largest n to print");
    expand->add_option("--modulus", expand_args.modulus, "reduce coefficients mod this")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
    add_common(expand, &expand_args.common);

    ExpandArgs oracle_args;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "cross-check the series against the combinatorial counter");
    oracle->add_option("r", oracle_args.r)->required();
    oracle->add_option("s", oracle_args.s)->required();
    oracle->add_option("n_max", oracle_args.n_pos, "largest n to check");
    oracle->add_option("-N,--order", oracle_args.n_flag, "largest n to check");
    add_common(oracle, &oracle_args.common);

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check-identity", "certify a named identity to "
                                                           "bounded order");
    check->add_option("id", check_args.id, "identity name (t1..t6, g1, u7, proof steps "
                                           "j1/s2/..., pdiss5/7/11/13)")
        ->required();
    check->add_option("order_n", check_args.order_pos, "comparison order (default 500)");
    check->add_option("-N,--order", check_args.order_flag, "comparison order");
    add_common(check, &check_args.common);

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run the congruence claim registry");
    verify->add_option("theorem", verify_args.family, "thm1|thm3|thm4|thm5|thm7|thm8|thm9|"
                                                      "classic|all")
        ->required();
    verify->add_option("--profile", verify_args.profile, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("-n,--n-max", verify_args.n_cap, "cap every claim's check range");
    add_common(verify, &verify_args.common);

    PrimesArgs primes_args;
    CLI::App* primes = app.add_subcommand("primes", "list primes satisfying a family's "
                                                    "hypothesis");
    primes->add_option("family", primes_args.family)->required();
    primes->add_option("--limit", primes_args.limit, "largest prime to consider");
    add_common(primes, &primes_args.common);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (expand->parsed()) return cmd_expand(expand_args, out, err);
        if (oracle->parsed()) return cmd_oracle(oracle_args, out, err);
        if (check->parsed()) return cmd_check_identity(check_args, out, err);
        if (verify->parsed()) return cmd_verify(verify_args, out, err);
        if (primes->parsed()) return cmd_primes(primes_args, out, err);
        err << "error: no command given\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace qcert
