#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcert/qproducts.hpp"
#include "qcert/series.hpp"

namespace qcert {

// Arithmetic progression A*n + B of coefficient indices.
struct Progression {
    std::int64_t modulus = 1;
    std::int64_t residue = 0;
};

inline void validate(const Progression& p) {
    if (p.modulus < 1 || p.residue < 0 || p.residue >= p.modulus) {
        throw StructuralError("progression: need 0 <= residue < modulus");
    }
}

// Coefficient n of the result is coefficient A*n + B of the input.
template <class R>
Series<R> extract(const Series<R>& a, const Progression& p) {
    validate(p);
    if (p.residue >= a.order()) {
        throw PreconditionError("extract: residue " + std::to_string(p.residue) +
                                " is beyond the known coefficients");
    }
    const std::int64_t m = (a.order() - p.residue + p.modulus - 1) / p.modulus;
    std::vector<typename R::Value> c(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        c[static_cast<std::size_t>(i)] =
            a.coeffs()[static_cast<std::size_t>(p.modulus * i + p.residue)];
    }
    return Series<R>::from_coeffs(a.ring(), std::move(c));
}

template <class R>
Series<R> extract(const Series<R>& a, std::int64_t modulus, std::int64_t residue) {
    return extract(a, Progression{modulus, residue});
}

// q -> q^k: coefficient k*n of the result is coefficient n of the input.
template <class R>
Series<R> substitute_power(const Series<R>& a, std::int64_t k, std::int64_t order) {
    if (k < 1) throw StructuralError("substitute_power: k must be at least 1");
    if (order < 1) throw StructuralError("series order must be at least 1");
    const std::int64_t need = (order + k - 1) / k;
    if (a.order() < need) {
        throw PreconditionError("substitute_power: input order " + std::to_string(a.order()) +
                                " is below required " + std::to_string(need));
    }
    std::vector<typename R::Value> c(static_cast<std::size_t>(order), a.ring().zero());
    for (std::int64_t i = 0; i * k < order; ++i) {
        c[static_cast<std::size_t>(i * k)] = a.coeffs()[static_cast<std::size_t>(i)];
    }
    return Series<R>::from_coeffs(a.ring(), std::move(c));
}

// Returns the integer k with k(3k-1)/2 == n if n is a generalized pentagonal
// number, nothing otherwise.
std::optional<std::int64_t> gen_pentagonal_index(std::int64_t n);

// The named two-variable lemma identities checked at bounded order.
enum class NamedIdentity { T1, T2, T3, T4, T5, T6, G1, U7 };

const std::vector<NamedIdentity>& all_identities();
const char* identity_name(NamedIdentity id);
std::optional<NamedIdentity> identity_from_string(std::string_view name);

struct DifferenceSite {
    std::int64_t exponent = 0;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string id;
    std::int64_t order = 0;
    bool pass = false;
    std::optional<DifferenceSite> diff;
};

// Expands both sides over exact integers (quotients cross-multiplied into
// denominator-free form) and compares every coefficient below the order.
IdentityReport verify_identity(NamedIdentity id, std::int64_t order);

// One instance of the prime dissection of f_1: p, the sign-adjusted p*, and
// the excluded index k = (p*-1)/6.
struct PDissectionInstance {
    std::int64_t p = 5;
    std::int64_t p_star = -5;
    std::int64_t exceptional_k = -1;
};

// Validates p >= 5 prime and fills in p* (p when p = 1 mod 6, -p when
// p = 5 mod 6) together with the exceptional index.
PDissectionInstance make_p_dissection_instance(std::int64_t p);

struct PDissectionReport {
    PDissectionInstance instance;
    std::int64_t order = 0;
    bool series_equal = false;
    bool residues_excluded = false;
    std::optional<DifferenceSite> diff;
    bool pass() const { return series_equal && residues_excluded; }
};

// Expands the theta-term sum plus the f_{p^2} tail and checks it equals f_1,
// then checks that (3k^2+k)/2 is never congruent to (p^2-1)/24 mod p for any
// non-exceptional k in range. Supported desk-scale primes: 5, 7, 11, 13.
PDissectionReport verify_p_dissection(std::int64_t p, std::int64_t order);

} // namespace qcert
