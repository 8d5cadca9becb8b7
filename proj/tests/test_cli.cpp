#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qcert/cli.hpp"

using namespace qcert;

namespace {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int rc = run_cli(std::move(args), out, err);
    return {rc, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
    auto end = text.find_last_not_of('\n');
    if (end == std::string::npos) return {};
    auto start = text.rfind('\n', end);
    return text.substr(start == std::string::npos ? 0 : start + 1,
                       end - (start == std::string::npos ? 0 : start + 1) + 1);
}

} // namespace

TEST_CASE("expand prints the worked coefficient") {
    const CliResult r = run({"expand", "2", "5", "13"});
    CHECK(r.exit_code == kExitOk);
    CHECK(last_line(r.out) == "13\t2");
}

TEST_CASE("expand of n = 0 prints the empty partition count") {
    const CliResult r = run({"expand", "2", "5", "0"});
    CHECK(r.exit_code == kExitOk);
    CHECK(r.out == "0\t1\n");
}

TEST_CASE("expand rejects non-coprime r and s") {
    const CliResult r = run({"expand", "4", "6", "-N", "9"});
    CHECK(r.exit_code == kExitUsage);
    CHECK(r.err.find("coprime") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("expand with a modulus reduces coefficients") {
    const CliResult r = run({"expand", "2", "5", "13", "--modulus", "2"});
    CHECK(r.exit_code == kExitOk);
    CHECK(last_line(r.out) == "13\t0");
}

TEST_CASE("oracle cross-check is clean") {
    const CliResult r = run({"oracle", "2", "5", "60"});
    CHECK(r.exit_code == kExitOk);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
    // a(2,5)(60) = 77 by exhaustive recursion over the allowed parts
    CHECK(last_line(r.out) == "60\t77\t77\tOK");
}

TEST_CASE("check-identity passes and fails by exit code") {
    const CliResult pass = run({"check-identity", "t3", "300"});
    CHECK(pass.exit_code == kExitOk);
    CHECK(pass.out.find("PASS") == 0);

    const CliResult unknown = run({"check-identity", "bogus"});
    CHECK(unknown.exit_code == kExitUsage);
    CHECK(unknown.err.find("unknown identity") != std::string::npos);
}

TEST_CASE("check-identity handles proof steps and dissections") {
    CHECK(run({"check-identity", "s15", "200"}).exit_code == kExitOk);
    CHECK(run({"check-identity", "pdiss7", "200"}).exit_code == kExitOk);
}

TEST_CASE("verify thm1 reports two passing claims") {
    const CliResult r = run({"verify", "thm1"});
    CHECK(r.exit_code == kExitOk);
    CHECK(r.out.find("PASS\tthm1/e1") != std::string::npos);
    CHECK(r.out.find("PASS\tthm1/e2") != std::string::npos);
    CHECK(last_line(r.out) == "# passed=2 failed=0 skipped=0");
}

TEST_CASE("verify rejects unknown theorem ids") {
    const CliResult r = run({"verify", "thm2"});
    CHECK(r.exit_code == kExitUsage);
}

TEST_CASE("verify thm4 emits schema-stable JSON including the abstract instance") {
    const CliResult r = run({"verify", "thm4", "--format", "json"});
    CHECK(r.exit_code == kExitOk);
    const nlohmann::json reports = nlohmann::json::parse(r.out);
    REQUIRE(reports.is_array());
    bool saw_abstract = false;
    for (const auto& report : reports) {
        for (const char* field :
             {"claim", "family", "params", "n_checked", "outcome", "counterexamples", "order",
              "millis"}) {
            INFO("field ", field);
            CHECK(report.contains(field));
        }
        CHECK(report["outcome"] == "PASS");
        if (report["claim"] == "thm4/abstract") saw_abstract = true;
    }
    CHECK(saw_abstract);
}

TEST_CASE("verify honors the budget flag by skipping") {
    const CliResult r = run({"verify", "thm1", "--budget", "100"});
    CHECK(r.exit_code == kExitOk); // skipped, not failed
    CHECK(r.out.find("SKIPPED") != std::string::npos);
}

TEST_CASE("primes lists qualifying primes one per line") {
    const CliResult r = run({"primes", "thm3", "--limit", "60"});
    CHECK(r.exit_code == kExitOk);
    CHECK(r.out == "17\n29\n31\n43\n");

    const CliResult none = run({"primes", "thm4"});
    CHECK(none.exit_code == kExitOk);
    CHECK(none.out.empty());
}

TEST_CASE("usage errors for missing commands and arguments") {
    CHECK(run({}).exit_code == kExitUsage);
    CHECK(run({"expand", "2"}).exit_code == kExitUsage);
    CHECK(run({"expand", "2", "5"}).exit_code == kExitUsage); // no range given
    CHECK(run({"frobnicate"}).exit_code == kExitUsage);
    CHECK(run({"--help"}).exit_code == kExitOk);
}

TEST_CASE("verify text output is deterministic across runs") {
    const CliResult a = run({"verify", "thm7"});
    const CliResult b = run({"verify", "thm7"});
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("--out writes the same bytes to a file") {
    const std::string path = "qcert_cli_test_out.txt";
    const CliResult direct = run({"expand", "2", "7", "25"});
    const CliResult filed = run({"expand", "2", "7", "25", "--out", path});
    CHECK(filed.exit_code == kExitOk);
    CHECK(filed.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == direct.out);
    in.close();
    std::remove(path.c_str());
}
