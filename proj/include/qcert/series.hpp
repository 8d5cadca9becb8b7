#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcert/errors.hpp"
#include "qcert/rings.hpp"

namespace qcert {

// Truncated formal power series in q. Coefficients are known for exponents
// 0..order-1 and live in the attached coefficient ring. Values are immutable
// after construction; every operation returns a fresh series. Binary
// operations truncate to the smaller operand order, so a coefficient is never
// reported outside the range where it is reliable.
template <class R>
class Series {
public:
    using Ring = R;
    using Value = typename R::Value;

    Series(R ring, std::int64_t order)
        : ring_(std::move(ring)),
          coeffs_(checked_order(order), ring_.zero()) {}

    // Takes ownership of a coefficient vector whose entries are already valid
    // ring elements (normalized for modular rings).
    static Series from_coeffs(R ring, std::vector<Value> coeffs) {
        if (coeffs.empty()) throw StructuralError("series order must be at least 1");
        Series s(std::move(ring), std::move(coeffs), 0);
        return s;
    }

    const R& ring() const { return ring_; }
    std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()); }
    const Value& coeff(std::int64_t n) const {
        if (n < 0 || n >= order()) {
            throw StructuralError("coefficient index " + std::to_string(n) +
                                  " outside known range [0, " + std::to_string(order()) + ")");
        }
        return coeffs_[static_cast<std::size_t>(n)];
    }
    const std::vector<Value>& coeffs() const { return coeffs_; }

    std::int64_t nonzero_below(std::int64_t n) const {
        std::int64_t c = 0;
        const std::int64_t lim = std::min(n, order());
        for (std::int64_t i = 0; i < lim; ++i) {
            if (!ring_.is_zero(coeffs_[static_cast<std::size_t>(i)])) ++c;
        }
        return c;
    }
    bool is_zero() const { return nonzero_below(order()) == 0; }

private:
    Series(R ring, std::vector<Value> coeffs, int)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

    static std::size_t checked_order(std::int64_t order) {
        if (order < 1) throw StructuralError("series order must be at least 1");
        return static_cast<std::size_t>(order);
    }

    R ring_;
    std::vector<Value> coeffs_;
};

using SeriesZ = Series<ExactRing>;
using SeriesMod = Series<ModRing>;

// Sparse term used by make_series.
struct Term {
    std::int64_t exponent;
    std::int64_t value;
};

namespace detail {

template <class R>
void require_same_ring(const Series<R>& a, const Series<R>& b, const char* op) {
    if (!a.ring().same(b.ring())) {
        throw StructuralError(std::string(op) + ": ring mismatch (" + a.ring().describe() +
                              " vs " + b.ring().describe() + ")");
    }
}

} // namespace detail

template <class R>
Series<R> zero_series(const R& ring, std::int64_t order) {
    return Series<R>(ring, order);
}

template <class R>
Series<R> one_series(const R& ring, std::int64_t order) {
    std::vector<typename R::Value> c(static_cast<std::size_t>(std::max<std::int64_t>(order, 1)),
                                     ring.zero());
    if (order < 1) throw StructuralError("series order must be at least 1");
    c[0] = ring.one();
    return Series<R>::from_coeffs(ring, std::move(c));
}

template <class R>
Series<R> make_series(const R& ring, std::int64_t order, std::span<const Term> terms) {
    if (order < 1) throw StructuralError("series order must be at least 1");
    std::vector<typename R::Value> c(static_cast<std::size_t>(order), ring.zero());
    std::vector<char> seen(static_cast<std::size_t>(order), 0);
    for (const Term& t : terms) {
        if (t.exponent < 0 || t.exponent >= order) {
            throw StructuralError("make_series: exponent " + std::to_string(t.exponent) +
                                  " outside [0, " + std::to_string(order) + ")");
        }
        auto idx = static_cast<std::size_t>(t.exponent);
        if (seen[idx]) {
            throw StructuralError("make_series: duplicate exponent " + std::to_string(t.exponent));
        }
        seen[idx] = 1;
        c[idx] = ring.from_int(t.value);
    }
    return Series<R>::from_coeffs(ring, std::move(c));
}

template <class R>
Series<R> make_series(const R& ring, std::int64_t order, std::initializer_list<Term> terms) {
    return make_series(ring, order, std::span<const Term>(terms.begin(), terms.size()));
}

template <class R>
Series<R> add(const Series<R>& a, const Series<R>& b) {
    detail::require_same_ring(a, b, "add");
    const R& ring = a.ring();
    const std::int64_t n = std::min(a.order(), b.order());
    std::vector<typename R::Value> c(static_cast<std::size_t>(n), ring.zero());
    for (std::int64_t i = 0; i < n; ++i) {
        c[static_cast<std::size_t>(i)] = ring.add(a.coeffs()[static_cast<std::size_t>(i)],
                                                  b.coeffs()[static_cast<std::size_t>(i)]);
    }
    return Series<R>::from_coeffs(ring, std::move(c));
}

template <class R>
Series<R> sub(const Series<R>& a, const Series<R>& b) {
    detail::require_same_ring(a, b, "sub");
    const R& ring = a.ring();
    const std::int64_t n = std::min(a.order(), b.order());
    std::vector<typename R::Value> c(static_cast<std::size_t>(n), ring.zero());
    for (std::int64_t i = 0; i < n; ++i) {
        c[static_cast<std::size_t>(i)] = ring.sub(a.coeffs()[static_cast<std::size_t>(i)],
                                                  b.coeffs()[static_cast<std::size_t>(i)]);
    }
    return Series<R>::from_coeffs(ring, std::move(c));
}

// Cauchy product truncated to the smaller operand order. The operand with
// fewer nonzeros below the cut runs on the outside, so multiplying by a
// pentagonal-support factor costs O(order * sqrt(order)) instead of
// O(order^2).
template <class R>
Series<R> mul(const Series<R>& a, const Series<R>& b) {
    detail::require_same_ring(a, b, "mul");
    const R& ring = a.ring();
    const std::int64_t n = std::min(a.order(), b.order());
    const Series<R>* outer = &a;
    const Series<R>* inner = &b;
    if (b.nonzero_below(n) < a.nonzero_below(n)) std::swap(outer, inner);
    std::vector<typename R::Value> c(static_cast<std::size_t>(n), ring.zero());
    const auto& oc = outer->coeffs();
    const auto& ic = inner->coeffs();
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& oi = oc[static_cast<std::size_t>(i)];
        if (ring.is_zero(oi)) continue;
        const std::int64_t lim = n - i;
        for (std::int64_t j = 0; j < lim; ++j) {
            const auto& ij = ic[static_cast<std::size_t>(j)];
            if (ring.is_zero(ij)) continue;
            ring.add_mul(c[static_cast<std::size_t>(i + j)], oi, ij);
        }
    }
    return Series<R>::from_coeffs(ring, std::move(c));
}

template <class R>
Series<R> power(const Series<R>& a, std::int64_t e) {
    if (e < 0) throw StructuralError("power: exponent must be nonnegative (use invert)");
    Series<R> result = one_series(a.ring(), a.order());
    if (e == 0) return result;
    Series<R> base = a;
    while (true) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e == 0) break;
        base = mul(base, base);
    }
    return result;
}

// Quotient num/den via the standard recurrence
//   c(n) = inv(den(0)) * (num(n) - sum_{k>=1} den(k) c(n-k)).
// Only nonzero den coefficients enter the sum, so dividing by a sparse series
// is as cheap as multiplying by one. Requires den(0) to be a unit.
template <class R>
Series<R> divide(const Series<R>& num, const Series<R>& den) {
    detail::require_same_ring(num, den, "divide");
    const R& ring = num.ring();
    const std::int64_t n = std::min(num.order(), den.order());
    const typename R::Value inv0 = ring.unit_inverse(den.coeff(0));
    std::vector<std::pair<std::int64_t, typename R::Value>> dnz;
    for (std::int64_t k = 1; k < n; ++k) {
        const auto& dk = den.coeffs()[static_cast<std::size_t>(k)];
        if (!ring.is_zero(dk)) dnz.emplace_back(k, dk);
    }
    std::vector<typename R::Value> c(static_cast<std::size_t>(n), ring.zero());
    for (std::int64_t i = 0; i < n; ++i) {
        typename R::Value s = num.coeffs()[static_cast<std::size_t>(i)];
        for (const auto& [k, dk] : dnz) {
            if (k > i) break;
            ring.sub_assign(s, ring.mul(dk, c[static_cast<std::size_t>(i - k)]));
        }
        c[static_cast<std::size_t>(i)] = ring.mul(inv0, s);
    }
    return Series<R>::from_coeffs(ring, std::move(c));
}

template <class R>
Series<R> invert(const Series<R>& a) {
    return divide(one_series(a.ring(), a.order()), a);
}

template <class R>
Series<R> scale(const Series<R>& a, const typename R::Value& v) {
    const R& ring = a.ring();
    std::vector<typename R::Value> c = a.coeffs();
    for (auto& x : c) x = ring.mul(x, v);
    return Series<R>::from_coeffs(ring, std::move(c));
}

template <class R>
Series<R> scale(const Series<R>& a, std::int64_t v) {
    return scale(a, a.ring().from_int(v));
}

// Multiply by q^d. The order is preserved: the top d coefficients of a fall
// off the end of the known range.
template <class R>
Series<R> shift(const Series<R>& a, std::int64_t d) {
    if (d < 0) throw StructuralError("shift: negative shift");
    const R& ring = a.ring();
    const std::int64_t n = a.order();
    std::vector<typename R::Value> c(static_cast<std::size_t>(n), ring.zero());
    for (std::int64_t i = d; i < n; ++i) {
        c[static_cast<std::size_t>(i)] = a.coeffs()[static_cast<std::size_t>(i - d)];
    }
    return Series<R>::from_coeffs(ring, std::move(c));
}

template <class R>
Series<R> truncated(const Series<R>& a, std::int64_t order) {
    if (order < 1 || order > a.order()) {
        throw StructuralError("truncated: order " + std::to_string(order) + " outside [1, " +
                              std::to_string(a.order()) + "]");
    }
    std::vector<typename R::Value> c(a.coeffs().begin(),
                                     a.coeffs().begin() + static_cast<std::ptrdiff_t>(order));
    return Series<R>::from_coeffs(a.ring(), std::move(c));
}

inline SeriesMod reduce_mod(const SeriesZ& a, std::uint64_t m) {
    ModRing ring(m); // rejects m < 2
    std::vector<ModRing::Value> c(static_cast<std::size_t>(a.order()));
    for (std::int64_t i = 0; i < a.order(); ++i) {
        c[static_cast<std::size_t>(i)] = ring.from_bigint(a.coeffs()[static_cast<std::size_t>(i)]);
    }
    return SeriesMod::from_coeffs(ring, std::move(c));
}

template <class R>
bool equal_up_to(const Series<R>& a, const Series<R>& b, std::int64_t n) {
    detail::require_same_ring(a, b, "equal_up_to");
    if (n < 0 || n > std::min(a.order(), b.order())) {
        throw StructuralError("equal_up_to: range " + std::to_string(n) +
                              " exceeds known coefficients");
    }
    for (std::int64_t i = 0; i < n; ++i) {
        if (a.coeffs()[static_cast<std::size_t>(i)] != b.coeffs()[static_cast<std::size_t>(i)]) {
            return false;
        }
    }
    return true;
}

// Least exponent below min(orders) where the series disagree, if any.
template <class R>
std::optional<std::int64_t> first_difference(const Series<R>& a, const Series<R>& b) {
    detail::require_same_ring(a, b, "first_difference");
    const std::int64_t n = std::min(a.order(), b.order());
    for (std::int64_t i = 0; i < n; ++i) {
        if (a.coeffs()[static_cast<std::size_t>(i)] != b.coeffs()[static_cast<std::size_t>(i)]) {
            return i;
        }
    }
    return std::nullopt;
}

template <class R>
Series<R> operator+(const Series<R>& a, const Series<R>& b) { return add(a, b); }
template <class R>
Series<R> operator-(const Series<R>& a, const Series<R>& b) { return sub(a, b); }
template <class R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) { return mul(a, b); }

} // namespace qcert
