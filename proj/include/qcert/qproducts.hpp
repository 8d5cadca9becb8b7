#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "qcert/series.hpp"

namespace qcert {

// One shifted q-Pochhammer factor (a; q^step)_inf^exponent with monomial
// a = sign * q^offset. offset >= 1 is required: offset 0 makes the constant
// term 0 (sign +1) or 2 (sign -1), neither of which is a unit mod 2.
struct PochhammerFactor {
    int sign = +1;
    std::int64_t offset = 1;
    std::int64_t step = 1;
    int exponent = 1;
};

inline void validate(const PochhammerFactor& f) {
    if (f.sign != 1 && f.sign != -1) throw StructuralError("pochhammer: sign must be +1 or -1");
    if (f.step < 1) throw StructuralError("pochhammer: step must be at least 1");
    if (f.offset < 1) {
        throw StructuralError("pochhammer: offset 0 gives a non-unit constant term");
    }
}

// Formal product of Pochhammer factors. Eta-quotients are the special case
// where every factor has sign +1 and offset == step.
struct ProductSpec {
    std::vector<PochhammerFactor> factors;

    // prod f_k^e over the given (k, e) pairs
    static ProductSpec eta(std::initializer_list<std::pair<std::int64_t, int>> kexp) {
        ProductSpec spec;
        for (const auto& [k, e] : kexp) {
            spec.factors.push_back(PochhammerFactor{+1, k, k, e});
        }
        return spec;
    }
};

// Ramanujan theta function f(a, b) with a = a_sign*q^a_exp, b = b_sign*q^b_exp.
struct ThetaSpec {
    int a_sign = 1;
    std::int64_t a_exp = 1;
    int b_sign = 1;
    std::int64_t b_exp = 1;
};

inline void validate(const ThetaSpec& t) {
    if ((t.a_sign != 1 && t.a_sign != -1) || (t.b_sign != 1 && t.b_sign != -1)) {
        throw StructuralError("theta: signs must be +1 or -1");
    }
    if (t.a_exp < 0 || t.b_exp < 0) throw StructuralError("theta: exponents must be nonnegative");
    if (t.a_exp + t.b_exp < 1) {
        throw StructuralError("theta: a_exp + b_exp must be positive (divergent spec)");
    }
}

namespace detail {

// Multiply c in place by (1 - sign q^t).
template <class R>
void binomial_inplace(const R& ring, std::vector<typename R::Value>& c, int sign, std::int64_t t) {
    const auto len = static_cast<std::int64_t>(c.size());
    if (sign > 0) {
        for (std::int64_t i = len - 1; i >= t; --i) {
            ring.sub_assign(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i - t)]);
        }
    } else {
        for (std::int64_t i = len - 1; i >= t; --i) {
            ring.add_assign(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i - t)]);
        }
    }
}

// Multiply c in place by prod_{t = offset, offset+step, ...; t < len} (1 - sign q^t).
template <class R>
void binomial_chain_inplace(const R& ring, std::vector<typename R::Value>& c, int sign,
                            std::int64_t offset, std::int64_t step) {
    const auto len = static_cast<std::int64_t>(c.size());
    for (std::int64_t t = offset; t < len; t += step) {
        binomial_inplace(ring, c, sign, t);
    }
}

inline bool is_euler_factor(const PochhammerFactor& f) {
    return f.sign == +1 && f.offset == f.step;
}

} // namespace detail

// f_k = (q^k; q^k)_inf by the pentagonal number theorem:
// sum over all integers j of (-1)^j q^{k j(3j-1)/2}. O(sqrt(order/k)) nonzeros.
template <class R>
Series<R> euler(std::int64_t k, std::int64_t order, const R& ring) {
    if (k < 1) throw PreconditionError("euler: k must be at least 1");
    if (order < 1) throw StructuralError("series order must be at least 1");
    std::vector<typename R::Value> c(static_cast<std::size_t>(order), ring.zero());
    c[0] = ring.one();
    const typename R::Value minus_one = ring.from_int(-1);
    for (std::int64_t j = 1;; ++j) {
        const std::int64_t e_pos = k * (j * (3 * j - 1) / 2);
        const std::int64_t e_neg = k * (j * (3 * j + 1) / 2);
        if (e_pos >= order && e_neg >= order) break;
        const bool odd = (j & 1) != 0;
        if (e_pos < order) c[static_cast<std::size_t>(e_pos)] = odd ? minus_one : ring.one();
        if (e_neg < order) c[static_cast<std::size_t>(e_neg)] = odd ? minus_one : ring.one();
    }
    return Series<R>::from_coeffs(ring, std::move(c));
}

inline SeriesZ euler(std::int64_t k, std::int64_t order) {
    return euler(k, order, ExactRing{});
}

// Truncated expansion of a single Pochhammer factor, negative exponents via
// one inversion of the expanded positive power.
template <class R>
Series<R> pochhammer(const PochhammerFactor& f, std::int64_t order, const R& ring) {
    validate(f);
    if (f.exponent == 0) return one_series(ring, order);
    std::vector<typename R::Value> c(static_cast<std::size_t>(order), ring.zero());
    if (order < 1) throw StructuralError("series order must be at least 1");
    c[0] = ring.one();
    const int reps = f.exponent > 0 ? f.exponent : -f.exponent;
    for (int i = 0; i < reps; ++i) {
        detail::binomial_chain_inplace(ring, c, f.sign, f.offset, f.step);
    }
    Series<R> base = Series<R>::from_coeffs(ring, std::move(c));
    return f.exponent > 0 ? base : invert(base);
}

// Product of all factors in the spec. Positive exponents are multiplied in
// first (sparse euler expansions where the factor is an f_k), then each
// negative-exponent factor is divided out through the sparse quotient
// recurrence, keeping the total cost near O(order^{3/2}) per factor for
// eta-quotients.
template <class R>
Series<R> eta_quotient(const ProductSpec& spec, std::int64_t order, const R& ring) {
    for (const auto& f : spec.factors) validate(f);
    Series<R> acc = one_series(ring, order);
    for (const auto& f : spec.factors) {
        if (f.exponent <= 0) continue;
        if (detail::is_euler_factor(f)) {
            const Series<R> ek = euler(f.step, order, ring);
            for (int i = 0; i < f.exponent; ++i) acc = mul(acc, ek);
        } else {
            std::vector<typename R::Value> c = acc.coeffs();
            for (int i = 0; i < f.exponent; ++i) {
                detail::binomial_chain_inplace(ring, c, f.sign, f.offset, f.step);
            }
            acc = Series<R>::from_coeffs(ring, std::move(c));
        }
    }
    for (const auto& f : spec.factors) {
        if (f.exponent >= 0) continue;
        PochhammerFactor base = f;
        base.exponent = 1;
        const Series<R> bs = detail::is_euler_factor(f) ? euler(f.step, order, ring)
                                                        : pochhammer(base, order, ring);
        for (int i = 0; i < -f.exponent; ++i) acc = divide(acc, bs);
    }
    return acc;
}

// Generating function of (r,s)-regular partitions into distinct parts,
// expanded directly from its four Pochhammer factors
//   (-q;q) (-q^{rs};q^{rs}) / ((-q^r;q^r) (-q^s;q^s)).
template <class R>
Series<R> grs_generating(std::int64_t r, std::int64_t s, std::int64_t order, const R& ring) {
    if (r < 2 || s < 2) throw PreconditionError("grs_generating: r and s must be at least 2");
    if (std::gcd(r, s) != 1) {
        throw PreconditionError("grs_generating: r and s must be coprime (gcd(" +
                                std::to_string(r) + "," + std::to_string(s) + ") != 1)");
    }
    ProductSpec spec;
    spec.factors = {
        PochhammerFactor{-1, 1, 1, +1},
        PochhammerFactor{-1, r * s, r * s, +1},
        PochhammerFactor{-1, r, r, -1},
        PochhammerFactor{-1, s, s, -1},
    };
    return eta_quotient(spec, order, ring);
}

// Bilateral theta sum, term by term while exponents stay below the order.
template <class R>
Series<R> theta_sum(const ThetaSpec& t, std::int64_t order, const R& ring) {
    validate(t);
    if (order < 1) throw StructuralError("series order must be at least 1");
    std::vector<typename R::Value> c(static_cast<std::size_t>(order), ring.zero());
    const typename R::Value pos = ring.one();
    const typename R::Value negv = ring.from_int(-1);
    auto accumulate = [&](std::int64_t tri_a, std::int64_t tri_b) -> bool {
        const std::int64_t e = t.a_exp * tri_a + t.b_exp * tri_b;
        if (e >= order) return false;
        bool neg = false;
        if (t.a_sign < 0 && (tri_a & 1)) neg = !neg;
        if (t.b_sign < 0 && (tri_b & 1)) neg = !neg;
        auto idx = static_cast<std::size_t>(e);
        c[idx] = ring.add(c[idx], neg ? negv : pos);
        return true;
    };
    accumulate(0, 0); // n = 0
    for (std::int64_t n = 1;; ++n) {
        // term n has exponents a*T(n) + b*T(n-1); term -n has a*T(n-1) + b*T(n)
        const std::int64_t tn = n * (n + 1) / 2;
        const std::int64_t tn1 = n * (n - 1) / 2;
        const bool up = accumulate(tn, tn1);
        const bool down = accumulate(tn1, tn);
        if (!up && !down) break;
    }
    return Series<R>::from_coeffs(ring, std::move(c));
}

// Jacobi triple product form (-a; ab) (-b; ab) (ab; ab), expanded one
// binomial at a time. When ab is negative the sign walks down the product
// with the power of ab, which a fixed-sign Pochhammer factor cannot express.
// Needs a_exp, b_exp >= 1 so that every factor has unit constant term.
template <class R>
Series<R> theta_product(const ThetaSpec& t, std::int64_t order, const R& ring) {
    validate(t);
    if (t.a_exp < 1 || t.b_exp < 1) {
        throw StructuralError("theta_product: a_exp and b_exp must be positive "
                              "(otherwise a factor has non-unit constant term)");
    }
    if (order < 1) throw StructuralError("series order must be at least 1");
    const std::int64_t period = t.a_exp + t.b_exp;
    const int ab_sign = t.a_sign * t.b_sign;
    std::vector<typename R::Value> c(static_cast<std::size_t>(order), ring.zero());
    c[0] = ring.one();
    // (-a; ab): terms 1 + a (ab)^n for n >= 0
    int sign = t.a_sign;
    for (std::int64_t e = t.a_exp; e < order; e += period) {
        detail::binomial_inplace(ring, c, -sign, e);
        sign *= ab_sign;
    }
    // (-b; ab): terms 1 + b (ab)^n for n >= 0
    sign = t.b_sign;
    for (std::int64_t e = t.b_exp; e < order; e += period) {
        detail::binomial_inplace(ring, c, -sign, e);
        sign *= ab_sign;
    }
    // (ab; ab): terms 1 - (ab)^n for n >= 1
    sign = ab_sign;
    for (std::int64_t e = period; e < order; e += period) {
        detail::binomial_inplace(ring, c, sign, e);
        sign *= ab_sign;
    }
    return Series<R>::from_coeffs(ring, std::move(c));
}

// Rogers-Ramanujan ratio R(q) = (q^2;q^5)(q^3;q^5) / ((q;q^5)(q^4;q^5)).
template <class R>
Series<R> rr_ratio(std::int64_t order, const R& ring) {
    ProductSpec spec;
    spec.factors = {
        PochhammerFactor{+1, 2, 5, 1},
        PochhammerFactor{+1, 3, 5, 1},
        PochhammerFactor{+1, 1, 5, -1},
        PochhammerFactor{+1, 4, 5, -1},
    };
    return eta_quotient(spec, order, ring);
}

template <class R>
Series<R> rr_ratio_inverse(std::int64_t order, const R& ring) {
    ProductSpec spec;
    spec.factors = {
        PochhammerFactor{+1, 1, 5, 1},
        PochhammerFactor{+1, 4, 5, 1},
        PochhammerFactor{+1, 2, 5, -1},
        PochhammerFactor{+1, 3, 5, -1},
    };
    return eta_quotient(spec, order, ring);
}

} // namespace qcert
