#include "qcert/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace qcert {

const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Skipped: return "SKIPPED";
    }
    return "?";
}

std::optional<Profile> profile_from_string(std::string_view s) {
    if (s == "quick") return Profile::Quick;
    if (s == "full") return Profile::Full;
    return std::nullopt;
}

std::string Target::name() const {
    if (kind == Kind::Partition) return "p";
    return "a(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

std::string RhsSpec::text() const {
    std::ostringstream os;
    bool first = true;
    if (scalar != 1) {
        os << scalar;
        first = false;
    }
    if (shift != 0) {
        if (!first) os << "*";
        os << "q^" << shift;
        first = false;
    }
    for (const EtaTerm& t : eta) {
        if (!first) os << "*";
        os << "f" << t.k;
        if (t.exponent != 1) os << "^" << t.exponent;
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string Claim::describe() const {
    std::ostringstream os;
    const std::string arg =
        progression_a.str() + "n+" + progression_b.str();
    switch (kind) {
    case ClaimKind::Vanishing:
        os << target.name() << "(" << arg << ") == 0 (mod " << modulus << ")";
        break;
    case ClaimKind::SeriesCongruence:
        os << "sum " << target.name() << "(" << arg << ") q^n == " << (rhs ? rhs->text() : "?")
           << " (mod " << modulus << ")";
        break;
    case ClaimKind::Characterization:
        os << target.name() << "(" << arg << ") odd iff n is generalized pentagonal";
        break;
    }
    return os.str();
}

int legendre_symbol(const BigInt& a, std::int64_t p) {
    if (p < 3 || !is_prime_i64(p)) {
        throw PreconditionError("legendre_symbol: p must be an odd prime");
    }
    BigInt r = a % p;
    if (r < 0) r += p;
    const auto av = static_cast<std::uint64_t>(r);
    if (av == 0) return 0;
    const std::uint64_t e =
        pow_mod_u64(av, static_cast<std::uint64_t>((p - 1) / 2), static_cast<std::uint64_t>(p));
    return e == 1 ? 1 : -1;
}

const std::vector<FamilyInfo>& families() {
    static const std::vector<FamilyInfo> table = {
        {"thm1", "a(2,5) mod 2 on the 4n and 4n+2 progressions", 0, 0},
        {"thm3", "a(2,5) mod 2 prime-power families, (-10/p) = -1", 5, -10},
        {"thm4", "a(2,5) mod 4 powers-of-5 families", 0, 0},
        {"thm5", "a(2,7) mod 2 prime-power families, (-14/p) = -1", 7, -14},
        {"thm7", "a(4,5) mod 2 powers-of-5 families", 0, 0},
        {"thm8", "a(4,5) mod 2 prime-power families, (-5/p) = -1", 5, -5},
        {"thm9", "a(4,9) mod 2 families on 6n and 48n progressions", 0, 0},
        {"classic", "p(n) modulo 5, 7 and 11", 0, 0},
    };
    return table;
}

const FamilyInfo* find_family(std::string_view id) {
    for (const FamilyInfo& f : families()) {
        if (f.id == id) return &f;
    }
    return nullptr;
}

std::vector<std::int64_t> qualifying_primes(std::string_view family_id, std::int64_t limit) {
    if (limit < 7) throw PreconditionError("qualifying_primes: limit must be at least 7");
    const FamilyInfo* fam = find_family(family_id);
    if (fam == nullptr) {
        throw PreconditionError("unknown family '" + std::string(family_id) + "'");
    }
    std::vector<std::int64_t> out;
    if (!fam->has_prime_condition()) return out;
    for (std::int64_t p = fam->prime_lower_bound + 1; p <= limit; ++p) {
        if (!is_prime_i64(p) || p == 2) continue;
        if (legendre_symbol(BigInt(fam->legendre_disc), p) == -1) out.push_back(p);
    }
    return out;
}

namespace {

// One labelled equation of a theorem, with its progression as exact-integer
// formula data:
//   A = a_c * base^(a_e0 + a_e1 t)
//   B = j_c * base^(j_e0 + j_e1 t) * j + (c * base^(c_e0 + c_e1 t) - c_sub)/c_div
// where base is the family's prime parameter (base == 0) or a fixed prime
// power base, t the tower exponent, and c is the w parameter when c_c == -1.
struct EqDef {
    const char* family;
    const char* eq;
    Target target;
    ClaimKind kind;
    std::uint64_t modulus;
    std::int64_t base;
    std::int64_t a_c;
    int a_e0, a_e1;
    std::int64_t j_c;
    int j_e0, j_e1;
    std::int64_t c_c; // -1: use the w parameter
    int c_e0, c_e1;
    std::int64_t c_sub, c_div;
    std::vector<std::int64_t> w_set;
    std::optional<RhsSpec> rhs;
    const char* t_name; // "gamma"/"beta"/"alpha", nullptr if the eq has no tower
};

const Target kA25{Target::Kind::RegularDistinct, 2, 5};
const Target kA27{Target::Kind::RegularDistinct, 2, 7};
const Target kA45{Target::Kind::RegularDistinct, 4, 5};
const Target kA49{Target::Kind::RegularDistinct, 4, 9};
const Target kP{Target::Kind::Partition, 0, 0};

const std::vector<EqDef>& eq_table() {
    static const std::vector<EqDef> table = {
        // thm1
        {"thm1", "e1", kA25, ClaimKind::Vanishing, 2, 1, 4, 0, 0, 0, 0, 0, 2, 0, 0, 0, 1, {},
         std::nullopt, nullptr},
        {"thm1", "e2", kA25, ClaimKind::Characterization, 2, 1, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
         {}, std::nullopt, nullptr},
        // thm3 (prime p, gamma tower)
        {"thm3", "e8", kA25, ClaimKind::SeriesCongruence, 2, 0, 4, 0, 2, 0, 0, 0, 7, 0, 2, 1, 6,
         {}, RhsSpec{1, 0, {{2, 1}, {5, 1}}}, "gamma"},
        {"thm3", "e9", kA25, ClaimKind::Vanishing, 2, 0, 4, 2, 2, 4, 1, 2, 7, 2, 2, 1, 6, {},
         std::nullopt, "gamma"},
        {"thm3", "e8a", kA25, ClaimKind::SeriesCongruence, 2, 0, 20, 0, 2, 0, 0, 0, 55, 0, 2, 1, 6,
         {}, RhsSpec{1, 0, {{1, 1}, {10, 1}}}, "gamma"},
        {"thm3", "e9b", kA25, ClaimKind::Vanishing, 2, 0, 20, 2, 2, 20, 1, 2, 55, 2, 2, 1, 6, {},
         std::nullopt, "gamma"},
        // thm4 (base 5, beta tower, modulus 4)
        {"thm4", "e10", kA25, ClaimKind::SeriesCongruence, 4, 5, 4, 0, 2, 0, 0, 0, 13, 0, 2, 1, 6,
         {}, RhsSpec{2, 2, {{1, 1}, {20, 3}}}, "beta"},
        {"thm4", "e11", kA25, ClaimKind::SeriesCongruence, 4, 5, 4, 1, 2, 0, 0, 0, 17, 1, 2, 1, 6,
         {}, RhsSpec{2, 0, {{4, 3}, {5, 1}}}, "beta"},
        {"thm4", "e12", kA25, ClaimKind::Vanishing, 4, 5, 4, 1, 2, 0, 0, 0, -1, 0, 2, 1, 6,
         {13, 37}, std::nullopt, "beta"},
        {"thm4", "e13", kA25, ClaimKind::Vanishing, 4, 5, 4, 2, 2, 0, 0, 0, -1, 1, 2, 1, 6,
         {41, 89}, std::nullopt, "beta"},
        // thm5 (prime p, alpha tower)
        {"thm5", "f1", kA27, ClaimKind::SeriesCongruence, 2, 0, 2, 0, 2, 0, 0, 0, 5, 0, 2, 1, 4,
         {}, RhsSpec{1, 0, {{1, 1}, {14, 1}}}, "alpha"},
        {"thm5", "f2", kA27, ClaimKind::Vanishing, 2, 0, 2, 2, 2, 2, 1, 2, 5, 2, 2, 1, 4, {},
         std::nullopt, "alpha"},
        {"thm5", "f1a", kA27, ClaimKind::SeriesCongruence, 2, 0, 14, 0, 2, 0, 0, 0, 21, 0, 2, 1, 4,
         {}, RhsSpec{1, 0, {{2, 1}, {7, 1}}}, "alpha"},
        {"thm5", "f2a", kA27, ClaimKind::Vanishing, 2, 0, 14, 2, 2, 14, 1, 2, 21, 2, 2, 1, 4, {},
         std::nullopt, "alpha"},
        // thm7 (base 5, alpha tower)
        {"thm7", "c3", kA45, ClaimKind::SeriesCongruence, 2, 5, 2, 0, 1, 0, 0, 0, 1, 0, 1, 1, 2,
         {}, RhsSpec{1, 0, {{1, 1}, {5, 1}}}, "alpha"},
        {"thm7", "c4", kA45, ClaimKind::Vanishing, 2, 5, 2, 1, 1, 0, 0, 0, -1, 0, 1, 1, 2,
         {13, 17}, std::nullopt, "alpha"},
        // thm8 (prime p, alpha tower)
        {"thm8", "c1", kA45, ClaimKind::SeriesCongruence, 2, 0, 2, 0, 2, 0, 0, 0, 1, 0, 2, 1, 2,
         {}, RhsSpec{1, 0, {{1, 1}, {5, 1}}}, "alpha"},
        {"thm8", "c2", kA45, ClaimKind::Vanishing, 2, 0, 2, 2, 2, 2, 1, 2, 1, 2, 2, 1, 2, {},
         std::nullopt, "alpha"},
        // thm9 (a(4,9))
        {"thm9", "i1", kA49, ClaimKind::Vanishing, 2, 1, 6, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1, {3, 5},
         std::nullopt, nullptr},
        {"thm9", "i2", kA49, ClaimKind::Vanishing, 2, 1, 24, 0, 0, 0, 0, 0, 19, 0, 0, 0, 1, {},
         std::nullopt, nullptr},
        {"thm9", "i3", kA49, ClaimKind::Vanishing, 2, 4, 6, 2, 1, 0, 0, 0, 20, 1, 1, 1, 1, {},
         std::nullopt, "alpha"},
        {"thm9", "i4", kA49, ClaimKind::Vanishing, 2, 1, 48, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1,
         {13, 25, 37}, std::nullopt, nullptr},
        {"thm9", "i5", kA49, ClaimKind::Characterization, 2, 1, 48, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1,
         {}, std::nullopt, nullptr},
        // Ramanujan's classical congruences
        {"classic", "p5n4", kP, ClaimKind::Vanishing, 5, 1, 5, 0, 0, 0, 0, 0, 4, 0, 0, 0, 1, {},
         std::nullopt, nullptr},
        {"classic", "p7n5", kP, ClaimKind::Vanishing, 7, 1, 7, 0, 0, 0, 0, 0, 5, 0, 0, 0, 1, {},
         std::nullopt, nullptr},
        {"classic", "p11n6", kP, ClaimKind::Vanishing, 11, 1, 11, 0, 0, 0, 0, 0, 6, 0, 0, 0, 1, {},
         std::nullopt, nullptr},
    };
    return table;
}

const EqDef* find_eq(std::string_view family, std::string_view eq) {
    for (const EqDef& d : eq_table()) {
        if (family == d.family && eq == d.eq) return &d;
    }
    return nullptr;
}

BigInt pow_big(std::int64_t base, std::int64_t exp) {
    if (exp < 0) throw InstantiationError("negative exponent in progression formula");
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

bool eq_uses_t(const EqDef& d) { return d.a_e1 != 0 || d.j_e1 != 0 || d.c_e1 != 0; }

} // namespace

Claim instantiate(std::string_view family_id, std::string_view eq, const FamilyParams& params) {
    const EqDef* def = find_eq(family_id, eq);
    if (def == nullptr) {
        throw PreconditionError("unknown claim '" + std::string(family_id) + "/" +
                                std::string(eq) + "'");
    }
    const FamilyInfo* fam = find_family(family_id);

    const std::int64_t t = params.t;
    if (eq_uses_t(*def) && t < 0) {
        throw InstantiationError(std::string(def->t_name) + " must be nonnegative");
    }

    std::int64_t base = def->base;
    if (base == 0) {
        const std::int64_t p = params.p;
        if (!is_prime_i64(p) || p == 2 || p <= fam->prime_lower_bound) {
            throw InstantiationError("p = " + std::to_string(p) + " must be a prime above " +
                                     std::to_string(fam->prime_lower_bound));
        }
        if (legendre_symbol(BigInt(fam->legendre_disc), p) != -1) {
            throw InstantiationError("p = " + std::to_string(p) + " fails the Legendre condition (" +
                                     std::to_string(fam->legendre_disc) + "/p) = -1");
        }
        base = p;
    }

    if (def->j_c != 0 && (params.j < 1 || params.j > base - 1)) {
        throw InstantiationError("j = " + std::to_string(params.j) + " must lie in [1, p-1]");
    }

    std::int64_t c_val = def->c_c;
    if (def->c_c == -1) {
        if (std::find(def->w_set.begin(), def->w_set.end(), params.w) == def->w_set.end()) {
            throw InstantiationError("w = " + std::to_string(params.w) +
                                     " is not in the allowed set");
        }
        c_val = params.w;
    }

    Claim claim;
    claim.family = def->family;
    claim.target = def->target;
    claim.kind = def->kind;
    claim.modulus = def->modulus;
    claim.rhs = def->rhs;

    claim.progression_a = def->a_c * pow_big(base, def->a_e0 + def->a_e1 * t);
    const BigInt c_num = c_val * pow_big(base, def->c_e0 + def->c_e1 * t) - def->c_sub;
    if (c_num % def->c_div != 0) {
        throw InstantiationError("progression offset (" + c_num.str() + ")/" +
                                 std::to_string(def->c_div) + " is not integral");
    }
    claim.progression_b = c_num / def->c_div;
    if (def->j_c != 0) {
        claim.progression_b += def->j_c * pow_big(base, def->j_e0 + def->j_e1 * t) * params.j;
    }
    if (claim.progression_a < 1 || claim.progression_b < 0) {
        throw InstantiationError("degenerate progression");
    }

    std::ostringstream idos, paramos;
    idos << def->family << "/" << def->eq;
    bool any = false;
    auto emit = [&](const std::string& key, std::int64_t value) {
        idos << (any ? "," : "[") << key << "=" << value;
        if (any) paramos << " ";
        paramos << key << "=" << value;
        any = true;
    };
    if (eq_uses_t(*def)) emit(def->t_name, t);
    if (def->base == 0) emit("p", base);
    if (def->j_c != 0) emit("j", params.j);
    if (def->c_c == -1) emit("w", params.w);
    if (any) idos << "]";
    claim.id = idos.str();
    claim.params = paramos.str();
    return claim;
}

namespace {

Claim ranged(Claim c, std::int64_t quick_n, std::int64_t full_n, bool in_quick = true) {
    c.quick_n = quick_n;
    c.full_n = full_n;
    c.in_quick = in_quick;
    return c;
}

std::vector<Claim> build_registry() {
    std::vector<Claim> r;
    // thm1
    r.push_back(ranged(instantiate("thm1", "e1", {}), 2000, 20000));
    r.push_back(ranged(instantiate("thm1", "e2", {}), 500, 20000));
    // thm3 with the smallest qualifying prime, p = 17
    r.push_back(ranged(instantiate("thm3", "e8", {.t = 0, .p = 17}), 500, 5000));
    r.push_back(ranged(instantiate("thm3", "e8", {.t = 1, .p = 17}), 0, -1, false));
    r.push_back(ranged(instantiate("thm3", "e8a", {.t = 0, .p = 17}), 500, 2000));
    for (std::int64_t j = 1; j <= 16; ++j) {
        r.push_back(ranged(instantiate("thm3", "e9", {.t = 0, .p = 17, .j = j}), 30, 60));
    }
    for (std::int64_t j = 1; j <= 16; ++j) {
        r.push_back(ranged(instantiate("thm3", "e9b", {.t = 0, .p = 17, .j = j}), 8, 15));
    }
    // thm4
    r.push_back(ranged(instantiate("thm4", "e10", {.t = 0}), 500, 5000));
    r.push_back(ranged(instantiate("thm4", "e10", {.t = 1}), 15, 900));
    r.push_back(ranged(instantiate("thm4", "e11", {.t = 0}), 500, 2000));
    r.push_back(ranged(instantiate("thm4", "e12", {.t = 0, .w = 13}), 400, 4000));
    r.push_back(ranged(instantiate("thm4", "e12", {.t = 0, .w = 37}), 400, 4000));
    {
        // the abstract's example: a(2,5)(20n+6) == 0 (mod 4)
        Claim abstract_claim = instantiate("thm4", "e12", {.t = 0, .w = 37});
        abstract_claim.id = "thm4/abstract";
        r.push_back(ranged(std::move(abstract_claim), 1000, 4000));
    }
    r.push_back(ranged(instantiate("thm4", "e13", {.t = 0, .w = 41}), 400, 990));
    r.push_back(ranged(instantiate("thm4", "e13", {.t = 0, .w = 89}), 400, 990));
    // thm5 with the smallest qualifying prime, p = 11
    r.push_back(ranged(instantiate("thm5", "f1", {.t = 0, .p = 11}), 500, 5000));
    r.push_back(ranged(instantiate("thm5", "f1a", {.t = 0, .p = 11}), 500, 5000));
    for (std::int64_t j = 1; j <= 10; ++j) {
        r.push_back(ranged(instantiate("thm5", "f2", {.t = 0, .p = 11, .j = j}), 30, 300));
    }
    for (std::int64_t j = 1; j <= 10; ++j) {
        r.push_back(ranged(instantiate("thm5", "f2a", {.t = 0, .p = 11, .j = j}), 30, 55));
    }
    // thm7
    r.push_back(ranged(instantiate("thm7", "c3", {.t = 0}), 500, 5000));
    r.push_back(ranged(instantiate("thm7", "c3", {.t = 1}), 500, 5000));
    r.push_back(ranged(instantiate("thm7", "c3", {.t = 2}), 500, 1900));
    for (std::int64_t w : {13, 17}) {
        r.push_back(ranged(instantiate("thm7", "c4", {.t = 0, .w = w}), 400, 1900));
        r.push_back(ranged(instantiate("thm7", "c4", {.t = 1, .w = w}), 400, 1900));
    }
    // thm8 with the smallest qualifying prime, p = 11
    r.push_back(ranged(instantiate("thm8", "c1", {.t = 0, .p = 11}), 500, 5000));
    for (std::int64_t j = 1; j <= 10; ++j) {
        r.push_back(ranged(instantiate("thm8", "c2", {.t = 0, .p = 11, .j = j}), 30, 300));
    }
    // thm9
    r.push_back(ranged(instantiate("thm9", "i1", {.w = 3}), 800, 15000));
    r.push_back(ranged(instantiate("thm9", "i1", {.w = 5}), 800, 15000));
    r.push_back(ranged(instantiate("thm9", "i2", {}), 800, 4000));
    r.push_back(ranged(instantiate("thm9", "i3", {.t = 0}), 400, 1000));
    r.push_back(ranged(instantiate("thm9", "i3", {.t = 1}), 100, 250));
    for (std::int64_t w : {13, 25, 37}) {
        r.push_back(ranged(instantiate("thm9", "i4", {.w = w}), 800, 2000));
    }
    r.push_back(ranged(instantiate("thm9", "i5", {}), 500, 2000));
    // classics, arguments up to 1000 in the quick profile
    r.push_back(ranged(instantiate("classic", "p5n4", {}), 199, 10000));
    r.push_back(ranged(instantiate("classic", "p7n5", {}), 142, 10000));
    r.push_back(ranged(instantiate("classic", "p11n6", {}), 90, 9000));
    return r;
}

} // namespace

const std::vector<Claim>& registry() {
    static const std::vector<Claim> r = build_registry();
    return r;
}

VerifyEngine::VerifyEngine(std::int64_t max_series_order) : budget_(max_series_order) {
    if (budget_ < 1) throw PreconditionError("budget must be positive");
}

ProductSpec VerifyEngine::target_eta_spec(const Target& target) {
    if (target.kind == Target::Kind::Partition) {
        return ProductSpec::eta({{1, -1}});
    }
    const std::int64_t r = target.r;
    const std::int64_t s = target.s;
    if (r < 2 || s < 2 || std::gcd(r, s) != 1) {
        throw PreconditionError("target: r, s must be coprime and at least 2");
    }
    // (-q^c;q^c) = f_{2c}/f_c applied to the four factors of Eq (1.5) gives
    // f2 f_r f_s f_{2rs} / (f1 f_{2r} f_{2s} f_{rs}) with exponents merged.
    std::map<std::int64_t, int> exps;
    exps[2] += 1;
    exps[r] += 1;
    exps[s] += 1;
    exps[2 * r * s] += 1;
    exps[1] -= 1;
    exps[2 * r] -= 1;
    exps[2 * s] -= 1;
    exps[r * s] -= 1;
    ProductSpec spec;
    for (const auto& [k, e] : exps) {
        if (e != 0) spec.factors.push_back(PochhammerFactor{+1, k, k, e});
    }
    return spec;
}

std::shared_ptr<const SeriesMod> VerifyEngine::target_series(const Target& target,
                                                             std::uint64_t modulus,
                                                             std::int64_t order) {
    const std::string key = target.name() + "%" + std::to_string(modulus);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = mod_cache_.find(key);
        if (it != mod_cache_.end() && it->second->order() >= order) return it->second;
    }
    auto series = std::make_shared<const SeriesMod>(
        eta_quotient(target_eta_spec(target), order, ModRing(modulus)));
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mod_cache_.find(key);
    if (it == mod_cache_.end() || it->second->order() < order) mod_cache_[key] = series;
    return mod_cache_[key];
}

std::shared_ptr<const SeriesZ> VerifyEngine::target_series_exact(const Target& target,
                                                                 std::int64_t order) {
    const std::string key = target.name();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = exact_cache_.find(key);
        if (it != exact_cache_.end() && it->second->order() >= order) return it->second;
    }
    auto series = std::make_shared<const SeriesZ>(
        eta_quotient(target_eta_spec(target), order, ExactRing{}));
    std::lock_guard<std::mutex> lock(mu_);
    auto it = exact_cache_.find(key);
    if (it == exact_cache_.end() || it->second->order() < order) exact_cache_[key] = series;
    return exact_cache_[key];
}

std::int64_t VerifyEngine::required_order(const Claim& claim, std::int64_t n_max) const {
    const BigInt need = claim.progression_a * n_max + claim.progression_b + 1;
    if (need > budget_) {
        throw ResourceError("claim " + claim.id + " needs series order " + need.str() +
                            " which exceeds the budget of " + std::to_string(budget_));
    }
    return to_int64(need, "series order");
}

VerificationReport VerifyEngine::verify_claim(const Claim& claim, std::int64_t n_max) {
    const auto t0 = std::chrono::steady_clock::now();
    if (n_max < 0) throw PreconditionError("verify_claim: n_max must be nonnegative");

    VerificationReport report;
    report.claim = claim.id;
    report.family = claim.family;
    report.params = claim.params;
    report.n_checked = n_max;
    report.order = required_order(claim, n_max);

    const std::int64_t a = to_int64(claim.progression_a, "progression step");
    const std::int64_t b = to_int64(claim.progression_b, "progression offset");
    const std::shared_ptr<const SeriesMod> series =
        target_series(claim.target, claim.modulus, report.order);

    constexpr std::size_t kMaxCounterexamples = 16;
    auto record = [&](std::int64_t n, std::int64_t arg, std::uint64_t value,
                      std::string expected) {
        if (report.counterexamples.size() >= kMaxCounterexamples) return;
        Counterexample ce;
        ce.n = n;
        ce.argument = arg;
        ce.value = value;
        ce.expected = std::move(expected);
        report.counterexamples.push_back(std::move(ce));
    };

    switch (claim.kind) {
    case ClaimKind::Vanishing: {
        for (std::int64_t n = 0; n <= n_max; ++n) {
            const std::uint64_t v = series->coeff(a * n + b);
            if (v != 0) record(n, a * n + b, v, "0");
        }
        break;
    }
    case ClaimKind::Characterization: {
        if (claim.modulus != 2) {
            throw StructuralError("characterization claims are parity claims (modulus 2)");
        }
        for (std::int64_t n = 0; n <= n_max; ++n) {
            const bool expected_odd = gen_pentagonal_index(n).has_value();
            const std::uint64_t v = series->coeff(a * n + b);
            if ((v == 1) != expected_odd) record(n, a * n + b, v, expected_odd ? "1" : "0");
        }
        break;
    }
    case ClaimKind::SeriesCongruence: {
        const std::int64_t compare = n_max + 1;
        const ModRing ring(claim.modulus);
        SeriesMod rhs = eta_quotient(ProductSpec::eta({}), compare, ring);
        for (const EtaTerm& term : claim.rhs->eta) {
            ProductSpec spec;
            spec.factors.push_back(PochhammerFactor{+1, term.k, term.k, term.exponent});
            rhs = mul(rhs, eta_quotient(spec, compare, ring));
        }
        if (claim.rhs->shift != 0) rhs = shift(rhs, claim.rhs->shift);
        if (claim.rhs->scalar != 1) rhs = scale(rhs, claim.rhs->scalar);
        const SeriesMod lhs = extract(*series, a, b);
        for (std::int64_t n = 0; n < compare; ++n) {
            const std::uint64_t got = lhs.coeff(n);
            const std::uint64_t want = rhs.coeff(n);
            if (got != want) record(n, a * n + b, got, std::to_string(want));
        }
        break;
    }
    }

    report.outcome = report.counterexamples.empty() ? Outcome::Pass : Outcome::Fail;

    // Attach exact lifts to failures when the expansion is cheap enough to
    // redo over Z; a counterexample claim should be auditable.
    if (report.outcome == Outcome::Fail && report.order <= 20000) {
        const std::shared_ptr<const SeriesZ> exact =
            target_series_exact(claim.target, report.order);
        for (Counterexample& ce : report.counterexamples) {
            ce.lifted = exact->coeff(to_int64(ce.argument, "argument"));
        }
    }

    const auto t1 = std::chrono::steady_clock::now();
    report.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

std::vector<VerificationReport> VerifyEngine::verify_all(Profile profile,
                                                         std::string_view family,
                                                         std::int64_t n_cap) {
    struct Item {
        const Claim* claim;
        std::int64_t n;
    };
    std::vector<Item> work;
    for (const Claim& c : registry()) {
        if (!family.empty() && c.family != family) continue;
        if (profile == Profile::Quick && !c.in_quick) continue;
        std::int64_t n = profile == Profile::Quick ? c.quick_n : c.full_n;
        if (n == -1) {
            // derive the widest range the budget allows
            const BigInt nb = (BigInt(budget_) - 1 - c.progression_b) / c.progression_a;
            n = nb < 0 ? -1 : to_int64(nb, "derived range");
        }
        if (n_cap >= 0 && n > n_cap) n = n_cap;
        work.push_back({&c, n});
    }

    // Warm the cache once per (target, modulus) at the largest order needed,
    // so a dozen claims share one expansion.
    std::map<std::string, std::pair<const Claim*, std::int64_t>> max_need;
    for (const Item& item : work) {
        if (item.n < 0) continue;
        const BigInt need =
            item.claim->progression_a * item.n + item.claim->progression_b + 1;
        if (need > budget_) continue;
        const std::string key =
            item.claim->target.name() + "%" + std::to_string(item.claim->modulus);
        const std::int64_t need64 = to_int64(need, "series order");
        auto it = max_need.find(key);
        if (it == max_need.end() || it->second.second < need64) {
            max_need[key] = {item.claim, need64};
        }
    }
    for (const auto& [key, entry] : max_need) {
        target_series(entry.first->target, entry.first->modulus, entry.second);
    }

    std::vector<VerificationReport> reports;
    reports.reserve(work.size());
    for (const Item& item : work) {
        if (item.n < 0) {
            VerificationReport r;
            r.claim = item.claim->id;
            r.family = item.claim->family;
            r.params = item.claim->params;
            r.outcome = Outcome::Skipped;
            r.reason = "no checkable range within the series-order budget";
            reports.push_back(std::move(r));
            continue;
        }
        try {
            reports.push_back(verify_claim(*item.claim, item.n));
        } catch (const ResourceError& e) {
            VerificationReport r;
            r.claim = item.claim->id;
            r.family = item.claim->family;
            r.params = item.claim->params;
            r.outcome = Outcome::Skipped;
            r.reason = e.what();
            reports.push_back(std::move(r));
        }
    }
    return reports;
}

namespace {

// Proof-step registry: LHS is a progression extraction of a base generating
// function, RHS a sum of eta-quotient terms; mod2 steps compare residues,
// the rest compare exact integers.
struct StepTerm {
    std::int64_t scalar;
    std::int64_t shiftq;
    std::vector<EtaTerm> eta;
};

struct StepDef {
    const char* id;
    Target target;
    std::int64_t a, b;
    bool mod2;
    std::vector<StepTerm> rhs;
};

const std::vector<StepDef>& step_table() {
    static const std::vector<StepDef> table = {
        {"j1", kA25, 1, 0, false,
         {{1, 0, {{8, 1}, {20, 3}, {4, -1}, {10, -2}, {40, -1}}},
          {1, 1, {{4, 2}, {40, 1}, {2, -1}, {8, -1}, {10, -1}}}}},
        {"s2", kA25, 2, 0, false, {{1, 0, {{4, 1}, {10, 3}, {2, -1}, {5, -2}, {20, -1}}}}},
        {"s4", kA25, 2, 1, false, {{1, 0, {{2, 2}, {20, 1}, {1, -1}, {4, -1}, {5, -1}}}}},
        {"s14", kA25, 2, 0, false,
         {{1, 0, {{4, 1}, {40, 5}, {2, -1}, {10, -2}, {20, -1}, {80, -2}}},
          {2, 5, {{4, 1}, {20, 1}, {80, 2}, {2, -1}, {10, -2}, {40, -1}}}}},
        {"s15", kA25, 4, 2, false,
         {{2, 2, {{2, 1}, {10, 1}, {40, 2}, {1, -1}, {5, -2}, {20, -1}}}}},
        {"s30", kA45, 1, 0, false,
         {{1, 0, {{4, 1}, {20, 1}, {2, -1}, {10, -1}}},
          {1, 1, {{4, 4}, {40, 2}, {2, -2}, {8, -2}, {20, -2}}}}},
        {"s31", kA45, 2, 0, false, {{1, 0, {{2, 1}, {10, 1}, {1, -1}, {5, -1}}}}},
        {"s37", kA49, 1, 0, false,
         {{1, 0, {{4, 1}, {12, 3}, {72, 1}, {2, -1}, {6, -1}, {8, -1}, {36, -2}}},
          {1, 1, {{4, 3}, {6, 1}, {72, 1}, {2, -2}, {8, -1}, {12, -1}, {18, -1}}}}},
        {"s40", kA49, 6, 1, true,
         {{1, 0, {{4, 3}, {6, 2}, {2, -2}, {12, -1}}}, {1, 1, {{12, 3}, {4, -1}}}}},
        {"s41", kA49, 12, 7, true, {{1, 0, {{6, 3}, {2, -1}}}}},
        {"s45", kA49, 12, 1, true, {{1, 0, {{4, 1}}}}},
    };
    return table;
}

template <class R>
ProofStepReport run_step(const StepDef& def, std::int64_t order, const R& ring) {
    const std::int64_t base_order = def.a * (order - 1) + def.b + 1;
    const Series<R> base =
        eta_quotient(VerifyEngine::target_eta_spec(def.target), base_order, ring);
    const Series<R> lhs =
        (def.a == 1 && def.b == 0) ? base : extract(base, def.a, def.b);

    Series<R> rhs = zero_series(ring, order);
    for (const StepTerm& term : def.rhs) {
        ProductSpec spec;
        for (const EtaTerm& e : term.eta) {
            spec.factors.push_back(PochhammerFactor{+1, e.k, e.k, e.exponent});
        }
        Series<R> t = eta_quotient(spec, order, ring);
        if (term.shiftq != 0) t = shift(t, term.shiftq);
        if (term.scalar != 1) t = scale(t, term.scalar);
        rhs = add(rhs, t);
    }

    ProofStepReport report;
    report.id = def.id;
    report.order = order;
    const Series<R> lhs_cut = truncated(lhs, order);
    const std::optional<std::int64_t> diff = first_difference(lhs_cut, rhs);
    report.pass = !diff.has_value();
    if (diff) {
        report.diff = DifferenceSite{*diff, R::to_string(lhs_cut.coeff(*diff)),
                                     R::to_string(rhs.coeff(*diff))};
    }
    return report;
}

} // namespace

const std::vector<std::string>& proof_step_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const StepDef& d : step_table()) v.emplace_back(d.id);
        return v;
    }();
    return ids;
}

ProofStepReport verify_proof_step(std::string_view id, std::int64_t order) {
    if (order < 8) throw PreconditionError("verify_proof_step: order must be at least 8");
    for (const StepDef& d : step_table()) {
        if (id == d.id) {
            return d.mod2 ? run_step(d, order, ModRing(2)) : run_step(d, order, ExactRing{});
        }
    }
    throw PreconditionError("unknown proof step '" + std::string(id) + "'");
}

} // namespace qcert
