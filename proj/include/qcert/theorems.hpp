#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcert/dissection.hpp"
#include "qcert/numeric.hpp"
#include "qcert/qproducts.hpp"
#include "qcert/series.hpp"

namespace qcert {

enum class ClaimKind { Vanishing, SeriesCongruence, Characterization };
enum class Profile { Quick, Full };
enum class Outcome { Pass, Fail, Skipped };

const char* to_string(Outcome o);
std::optional<Profile> profile_from_string(std::string_view s);

// What the claim talks about: a_{r,s}(n) or the plain partition function.
struct Target {
    enum class Kind { RegularDistinct, Partition };
    Kind kind = Kind::RegularDistinct;
    std::int64_t r = 0;
    std::int64_t s = 0;

    std::string name() const;
};

struct EtaTerm {
    std::int64_t k = 1;
    int exponent = 1;
};

// Right-hand side of a series congruence: scalar * q^shift * prod f_k^e.
struct RhsSpec {
    std::int64_t scalar = 1;
    std::int64_t shift = 0;
    std::vector<EtaTerm> eta;

    std::string text() const;
};

// One checkable congruence assertion on a coefficient progression A*n + B.
struct Claim {
    std::string id;
    std::string family;
    std::string params;
    Target target;
    ClaimKind kind = ClaimKind::Vanishing;
    BigInt progression_a;
    BigInt progression_b;
    std::uint64_t modulus = 2;
    std::optional<RhsSpec> rhs;

    // Desk-scale check ranges (inclusive max n); full_n == -1 means "derive
    // the range from the series-order budget".
    std::int64_t quick_n = 0;
    std::int64_t full_n = 0;
    bool in_quick = true;

    std::string describe() const;
};

struct Counterexample {
    std::int64_t n = 0;
    BigInt argument;
    std::uint64_t value = 0;
    std::optional<BigInt> lifted;
    std::string expected;
};

struct VerificationReport {
    std::string claim;
    std::string family;
    std::string params;
    std::int64_t n_checked = 0;
    Outcome outcome = Outcome::Pass;
    std::vector<Counterexample> counterexamples;
    std::int64_t order = 0;
    double millis = 0.0;
    std::string reason;
};

// Euler's criterion, mapped to {-1, 0, +1}. p must be an odd prime.
int legendre_symbol(const BigInt& a, std::int64_t p);

struct FamilyInfo {
    std::string id;
    std::string description;
    std::int64_t prime_lower_bound = 0; // qualifying primes must exceed this
    std::int64_t legendre_disc = 0;     // nonzero: require (disc/p) == -1

    bool has_prime_condition() const { return legendre_disc != 0; }
};

const std::vector<FamilyInfo>& families();
const FamilyInfo* find_family(std::string_view id);

// Primes p <= limit satisfying the family's bound and Legendre condition.
// Families without a prime hypothesis yield an empty list.
std::vector<std::int64_t> qualifying_primes(std::string_view family_id, std::int64_t limit);

// Free parameters of a claim template: t is the tower exponent (gamma, beta
// or alpha depending on the family), p a qualifying prime, j a progression
// index in [1, p-1], w a member of the template's finite set.
struct FamilyParams {
    std::int64_t t = 0;
    std::int64_t p = 0;
    std::int64_t j = 0;
    std::int64_t w = 0;
};

// Builds the flattened (A, B, M) claim for one labelled equation of a family,
// checking the prime hypothesis, the parameter ranges and every divisibility
// the displayed formula relies on. Check ranges are left at zero.
Claim instantiate(std::string_view family_id, std::string_view eq, const FamilyParams& params);

// The desk-scale claim registry in canonical order.
const std::vector<Claim>& registry();

// Evaluates claims against cached generating-function expansions.
class VerifyEngine {
public:
    explicit VerifyEngine(std::int64_t max_series_order);

    std::int64_t budget() const { return budget_; }

    // Checks the claim for all 0 <= n <= n_max. Throws ResourceError when the
    // required series order exceeds the budget.
    VerificationReport verify_claim(const Claim& claim, std::int64_t n_max);

    // Runs the registry (optionally one family) at the profile's check
    // ranges; budget overruns become Skipped reports. n_cap >= 0 lowers every
    // claim's range.
    std::vector<VerificationReport> verify_all(Profile profile, std::string_view family = {},
                                               std::int64_t n_cap = -1);

    // Cached expansions, grown on demand. Reduced eta form of Eq (1.5) for
    // a_{r,s}; 1/f_1 for p(n).
    std::shared_ptr<const SeriesMod> target_series(const Target& target, std::uint64_t modulus,
                                                   std::int64_t order);
    std::shared_ptr<const SeriesZ> target_series_exact(const Target& target, std::int64_t order);

    static ProductSpec target_eta_spec(const Target& target);

private:
    std::int64_t required_order(const Claim& claim, std::int64_t n_max) const;

    std::int64_t budget_;
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<const SeriesMod>> mod_cache_;
    std::map<std::string, std::shared_ptr<const SeriesZ>> exact_cache_;
};

// Identities the proofs pass through that are themselves bounded-order
// checkable: exact two-term dissections and mod-2 reductions of the base
// generating functions.
struct ProofStepReport {
    std::string id;
    std::int64_t order = 0;
    bool pass = false;
    std::optional<DifferenceSite> diff;
};

const std::vector<std::string>& proof_step_ids();
ProofStepReport verify_proof_step(std::string_view id, std::int64_t order);

} // namespace qcert
