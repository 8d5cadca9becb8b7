#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "qcert/errors.hpp"
#include "qcert/numeric.hpp"

namespace qcert {

// Coefficient ring of exact (arbitrary-precision) integers.
class ExactRing {
public:
    using Value = BigInt;
    static constexpr bool is_modular = false;

    Value zero() const { return Value(0); }
    Value one() const { return Value(1); }
    Value from_int(std::int64_t v) const { return Value(v); }
    Value from_bigint(BigInt v) const { return v; }

    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }
    void add_assign(Value& a, const Value& b) const { a += b; }
    void sub_assign(Value& a, const Value& b) const { a -= b; }
    void add_mul(Value& acc, const Value& a, const Value& b) const { acc += a * b; }

    bool is_zero(const Value& a) const { return a.is_zero(); }
    bool is_unit(const Value& a) const { return a == 1 || a == -1; }
    Value unit_inverse(const Value& a) const {
        if (!is_unit(a)) {
            throw InversionError("constant term " + a.str() + " is not a unit over Z");
        }
        return a; // +/-1 are self-inverse
    }

    bool same(const ExactRing&) const { return true; }
    std::string describe() const { return "Z"; }
    static std::string to_string(const Value& a) { return a.str(); }
};

// Integers modulo m (m >= 2); values are kept normalized to [0, m).
class ModRing {
public:
    using Value = std::uint64_t;
    static constexpr bool is_modular = true;

    explicit ModRing(std::uint64_t modulus) : m_(modulus) {
        if (m_ < 2) throw StructuralError("modulus must be at least 2");
        if (m_ > (std::uint64_t{1} << 62)) throw StructuralError("modulus too large");
        wide_ = m_ > (std::uint64_t{1} << 31);
    }

    std::uint64_t modulus() const { return m_; }

    Value zero() const { return 0; }
    Value one() const { return 1 % m_; }
    Value from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(m_);
        if (r < 0) r += static_cast<std::int64_t>(m_);
        return static_cast<Value>(r);
    }
    Value from_bigint(const BigInt& v) const {
        BigInt r = v % m_;
        if (r < 0) r += m_;
        return static_cast<Value>(r);
    }

    Value add(Value a, Value b) const {
        Value s = a + b; // both < m <= 2^62, no wrap
        return s >= m_ ? s - m_ : s;
    }
    Value sub(Value a, Value b) const { return a >= b ? a - b : a + (m_ - b); }
    Value mul(Value a, Value b) const {
        return wide_ ? mul_mod_u64(a, b, m_) : (a * b) % m_;
    }
    Value neg(Value a) const { return a == 0 ? 0 : m_ - a; }
    void add_assign(Value& a, Value b) const { a = add(a, b); }
    void sub_assign(Value& a, Value b) const { a = sub(a, b); }
    void add_mul(Value& acc, Value a, Value b) const { acc = add(acc, mul(a, b)); }

    bool is_zero(Value a) const { return a == 0; }
    bool is_unit(Value a) const { return std::gcd(a, m_) == 1; }
    Value unit_inverse(Value a) const {
        if (!is_unit(a)) {
            throw InversionError("constant term " + std::to_string(a) + " is not a unit mod " +
                                 std::to_string(m_));
        }
        // extended Euclid on (a, m)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(m_);
        std::int64_t new_r = static_cast<std::int64_t>(a);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(m_);
        return static_cast<Value>(t);
    }

    bool same(const ModRing& o) const { return m_ == o.m_; }
    std::string describe() const { return "Z/" + std::to_string(m_); }
    static std::string to_string(Value a) { return std::to_string(a); }

private:
    std::uint64_t m_;
    bool wide_ = false;
};

} // namespace qcert
