#include "qcert/dissection.hpp"

#include <array>
#include <utility>

#include "qcert/numeric.hpp"

namespace qcert {

std::optional<std::int64_t> gen_pentagonal_index(std::int64_t n) {
    if (n < 0) throw PreconditionError("gen_pentagonal_index: n must be nonnegative");
    const std::int64_t disc = 24 * n + 1;
    const std::int64_t s = isqrt_i64(disc);
    if (s * s != disc) return std::nullopt;
    // k(3k-1)/2 = n  <=>  k = (1 +/- s)/6; s is odd and coprime to 3, so
    // exactly one branch is integral.
    if ((1 + s) % 6 == 0) return (1 + s) / 6;
    if ((s - 1) % 6 == 0) return -(s - 1) / 6;
    return std::nullopt;
}

namespace {

// One product term  scalar * q^shift * prod f_k^e  with e >= 1.
struct FTerm {
    std::int64_t scalar;
    std::int64_t shift;
    std::vector<std::pair<std::int64_t, int>> fk;
};

SeriesZ eval_fterms(const std::vector<FTerm>& terms, std::int64_t order) {
    const ExactRing ring;
    SeriesZ acc = zero_series(ring, order);
    for (const FTerm& t : terms) {
        SeriesZ prod = one_series(ring, order);
        for (const auto& [k, e] : t.fk) {
            const SeriesZ fk = euler(k, order, ring);
            for (int i = 0; i < e; ++i) prod = mul(prod, fk);
        }
        if (t.shift != 0) prod = shift(prod, t.shift);
        if (t.scalar != 1) prod = scale(prod, t.scalar);
        acc = add(acc, prod);
    }
    return acc;
}

struct TwoSides {
    std::vector<FTerm> lhs;
    std::vector<FTerm> rhs;
};

// Denominator-free forms of the quotient identities: both sides were
// multiplied by every f_k appearing in a denominator, so each check is a
// polynomial identity over exact integers.
TwoSides cross_multiplied_sides(NamedIdentity id) {
    switch (id) {
    case NamedIdentity::T1:
        // 1/f1^2 = f8^5/(f2^5 f16^2) + 2q f4^2 f16^2/(f2^5 f8),
        // times f1^2 f2^5 f8 f16^2:
        return {{{1, 0, {{2, 5}, {8, 1}, {16, 2}}}},
                {{1, 0, {{1, 2}, {8, 6}}}, {2, 1, {{1, 2}, {4, 2}, {16, 4}}}}};
    case NamedIdentity::T2:
        // f9/f1 = f12^3 f18/(f2^2 f6 f36) + q f4^2 f6 f36/(f2^3 f12),
        // times f1 f2^3 f6 f12 f36:
        return {{{1, 0, {{2, 3}, {6, 1}, {9, 1}, {12, 1}, {36, 1}}}},
                {{1, 0, {{1, 1}, {2, 1}, {12, 4}, {18, 1}}},
                 {1, 1, {{1, 1}, {4, 2}, {6, 2}, {36, 2}}}}};
    case NamedIdentity::T3:
        // f1 f5^3 = f2^3 f10 - q f2^2 f10^2 f20/f4 + 2q^2 f4 f20^3
        //           - 2q^3 f4^4 f10 f40^2/(f2 f8^2),  times f2 f4 f8^2:
        return {{{1, 0, {{1, 1}, {2, 1}, {4, 1}, {5, 3}, {8, 2}}}},
                {{1, 0, {{2, 4}, {4, 1}, {8, 2}, {10, 1}}},
                 {-1, 1, {{2, 3}, {8, 2}, {10, 2}, {20, 1}}},
                 {2, 2, {{2, 1}, {4, 2}, {8, 2}, {20, 3}}},
                 {-2, 3, {{4, 5}, {10, 1}, {40, 2}}}}};
    case NamedIdentity::T4:
        // f5/f1 = f8 f20^2/(f2^2 f40) + q f4^3 f10 f40/(f2^3 f8 f20),
        // times f1 f2^3 f8 f20 f40:
        return {{{1, 0, {{2, 3}, {5, 1}, {8, 1}, {20, 1}, {40, 1}}}},
                {{1, 0, {{1, 1}, {2, 1}, {8, 2}, {20, 3}}},
                 {1, 1, {{1, 1}, {4, 3}, {10, 1}, {40, 2}}}}};
    case NamedIdentity::T5:
        // f3^3/f1 = f4^3 f6^2/(f2^2 f12) + q f12^3/f4,  times f1 f2^2 f4 f12:
        return {{{1, 0, {{2, 2}, {3, 3}, {4, 1}, {12, 1}}}},
                {{1, 0, {{1, 1}, {4, 4}, {6, 2}}}, {1, 1, {{1, 1}, {2, 2}, {12, 4}}}}};
    case NamedIdentity::T6:
        // f1 f7 = f2 f14 f16^2 f56^5/(f4 f8 f28^3 f112^2) - q f4 f28
        //         + q^6 f2 f8^5 f14 f112^2/(f4^3 f16^2 f28 f56),
        // times f4^3 f8 f16^2 f28^3 f56 f112^2:
        return {{{1, 0, {{1, 1}, {4, 3}, {7, 1}, {8, 1}, {16, 2}, {28, 3}, {56, 1}, {112, 2}}}},
                {{1, 0, {{2, 1}, {4, 2}, {14, 1}, {16, 4}, {56, 6}}},
                 {-1, 1, {{4, 4}, {8, 1}, {16, 2}, {28, 4}, {56, 1}, {112, 2}}},
                 {1, 6, {{2, 1}, {8, 6}, {14, 1}, {28, 2}, {112, 4}}}}};
    default:
        throw PreconditionError("identity has no cross-multiplied table form");
    }
}

std::pair<SeriesZ, SeriesZ> g1_sides(std::int64_t order) {
    const ExactRing ring;
    // R(q^5) = P/Q with P = (q^10;q^25)(q^15;q^25), Q = (q^5;q^25)(q^20;q^25).
    // f1 = f25 (R(q^5) - q - q^2 R(q^5)^{-1})  times PQ becomes
    // f1 P Q = f25 (P^2 - q P Q - q^2 Q^2).
    ProductSpec pspec;
    pspec.factors = {PochhammerFactor{+1, 10, 25, 1}, PochhammerFactor{+1, 15, 25, 1}};
    ProductSpec qspec;
    qspec.factors = {PochhammerFactor{+1, 5, 25, 1}, PochhammerFactor{+1, 20, 25, 1}};
    const SeriesZ p = eta_quotient(pspec, order, ring);
    const SeriesZ q = eta_quotient(qspec, order, ring);
    const SeriesZ lhs = mul(euler(1, order, ring), mul(p, q));
    SeriesZ rhs = sub(sub(mul(p, p), shift(mul(p, q), 1)), shift(mul(q, q), 2));
    rhs = mul(euler(25, order, ring), rhs);
    return {lhs, rhs};
}

std::pair<SeriesZ, SeriesZ> u7_sides(std::int64_t order) {
    const ExactRing ring;
    // f1 = f49 (B/C - q A/B - q^2 + q^5 C/A) with A = f(-q^21,-q^28),
    // B = f(-q^14,-q^35), C = f(-q^7,-q^42); times ABC:
    // f1 A B C = f49 (A B^2 - q A^2 C - q^2 A B C + q^5 B C^2).
    const SeriesZ a = theta_sum(ThetaSpec{-1, 21, -1, 28}, order, ring);
    const SeriesZ b = theta_sum(ThetaSpec{-1, 14, -1, 35}, order, ring);
    const SeriesZ c = theta_sum(ThetaSpec{-1, 7, -1, 42}, order, ring);
    const SeriesZ abc = mul(a, mul(b, c));
    const SeriesZ lhs = mul(euler(1, order, ring), abc);
    SeriesZ rhs = mul(a, mul(b, b));
    rhs = sub(rhs, shift(mul(mul(a, a), c), 1));
    rhs = sub(rhs, shift(abc, 2));
    rhs = add(rhs, shift(mul(b, mul(c, c)), 5));
    rhs = mul(euler(49, order, ring), rhs);
    return {lhs, rhs};
}

IdentityReport compare_sides(const char* name, const SeriesZ& lhs, const SeriesZ& rhs,
                             std::int64_t order) {
    IdentityReport report;
    report.id = name;
    report.order = order;
    const std::optional<std::int64_t> diff = first_difference(lhs, rhs);
    report.pass = !diff.has_value();
    if (diff) {
        report.diff = DifferenceSite{*diff, lhs.coeff(*diff).str(), rhs.coeff(*diff).str()};
    }
    return report;
}

} // namespace

const std::vector<NamedIdentity>& all_identities() {
    static const std::vector<NamedIdentity> ids = {
        NamedIdentity::T1, NamedIdentity::T2, NamedIdentity::T3, NamedIdentity::T4,
        NamedIdentity::T5, NamedIdentity::T6, NamedIdentity::G1, NamedIdentity::U7,
    };
    return ids;
}

const char* identity_name(NamedIdentity id) {
    switch (id) {
    case NamedIdentity::T1: return "t1";
    case NamedIdentity::T2: return "t2";
    case NamedIdentity::T3: return "t3";
    case NamedIdentity::T4: return "t4";
    case NamedIdentity::T5: return "t5";
    case NamedIdentity::T6: return "t6";
    case NamedIdentity::G1: return "g1";
    case NamedIdentity::U7: return "u7";
    }
    return "?";
}

std::optional<NamedIdentity> identity_from_string(std::string_view name) {
    for (NamedIdentity id : all_identities()) {
        if (name == identity_name(id)) return id;
    }
    return std::nullopt;
}

IdentityReport verify_identity(NamedIdentity id, std::int64_t order) {
    if (order < 8) {
        throw PreconditionError("verify_identity: order must be at least 8 so every term "
                                "of every identity contributes");
    }
    if (id == NamedIdentity::G1) {
        const auto [lhs, rhs] = g1_sides(order);
        return compare_sides("g1", lhs, rhs, order);
    }
    if (id == NamedIdentity::U7) {
        const auto [lhs, rhs] = u7_sides(order);
        return compare_sides("u7", lhs, rhs, order);
    }
    const TwoSides sides = cross_multiplied_sides(id);
    const SeriesZ lhs = eval_fterms(sides.lhs, order);
    const SeriesZ rhs = eval_fterms(sides.rhs, order);
    return compare_sides(identity_name(id), lhs, rhs, order);
}

PDissectionInstance make_p_dissection_instance(std::int64_t p) {
    if (p < 5 || !is_prime_i64(p)) {
        throw PreconditionError("p-dissection: p must be a prime >= 5");
    }
    PDissectionInstance inst;
    inst.p = p;
    inst.p_star = (p % 6 == 1) ? p : -p;
    if ((inst.p_star - 1) % 6 != 0) {
        throw PreconditionError("p-dissection: (p*-1)/6 is not integral");
    }
    inst.exceptional_k = (inst.p_star - 1) / 6;
    if (inst.exceptional_k < -(p - 1) / 2 || inst.exceptional_k > (p - 1) / 2) {
        throw PreconditionError("p-dissection: exceptional k out of range");
    }
    return inst;
}

PDissectionReport verify_p_dissection(std::int64_t p, std::int64_t order) {
    if (p != 5 && p != 7 && p != 11 && p != 13) {
        throw PreconditionError("verify_p_dissection: supported primes are 5, 7, 11, 13");
    }
    if (order < p * p) {
        throw PreconditionError("verify_p_dissection: order must be at least p^2");
    }
    const PDissectionInstance inst = make_p_dissection_instance(p);
    const ExactRing ring;

    SeriesZ rhs = zero_series(ring, order);
    for (std::int64_t k = -(p - 1) / 2; k <= (p - 1) / 2; ++k) {
        if (k == inst.exceptional_k) continue;
        const std::int64_t head = (3 * k * k + k) / 2;
        const std::int64_t x = (3 * p * p + (6 * k + 1) * p) / 2;
        const std::int64_t y = (3 * p * p - (6 * k + 1) * p) / 2;
        SeriesZ term = theta_product(ThetaSpec{-1, x, -1, y}, order, ring);
        term = shift(term, head);
        if (k & 1) term = scale(term, -1);
        rhs = add(rhs, term);
    }
    SeriesZ tail = shift(euler(p * p, order, ring), (p * p - 1) / 24);
    if (inst.exceptional_k & 1) tail = scale(tail, -1);
    rhs = add(rhs, tail);

    const SeriesZ lhs = euler(1, order, ring);

    PDissectionReport report;
    report.instance = inst;
    report.order = order;
    const std::optional<std::int64_t> diff = first_difference(lhs, rhs);
    report.series_equal = !diff.has_value();
    if (diff) {
        report.diff = DifferenceSite{*diff, lhs.coeff(*diff).str(), rhs.coeff(*diff).str()};
    }

    report.residues_excluded = true;
    const std::int64_t target = ((p * p - 1) / 24) % p;
    for (std::int64_t k = -(p - 1) / 2; k <= (p - 1) / 2; ++k) {
        if (k == inst.exceptional_k) continue;
        std::int64_t r = ((3 * k * k + k) / 2) % p;
        if (r < 0) r += p;
        if (r == target) {
            report.residues_excluded = false;
            break;
        }
    }
    return report;
}

} // namespace qcert
