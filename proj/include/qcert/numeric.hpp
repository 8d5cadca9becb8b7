#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "qcert/errors.hpp"

namespace qcert {

// Arbitrary-precision signed integer used for exact coefficients and for
// theorem-parameter arithmetic.
using BigInt = boost::multiprecision::cpp_int;

inline std::int64_t to_int64(const BigInt& v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw ResourceError(std::string(what) + ": " + v.str() + " exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

// Floor square root. Callers stay well below 2^62, so the +1 probe cannot wrap.
inline std::int64_t isqrt_i64(std::int64_t n) {
    if (n < 0) throw PreconditionError("isqrt_i64: negative argument");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) acc = mul_mod_u64(acc, base, m);
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

inline bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

} // namespace qcert
