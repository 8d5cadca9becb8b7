#include "qcert/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qcert {

void validate(const RegularDistinctSpec& spec) {
    if (spec.r < 2 || spec.s < 2) {
        throw PreconditionError("regular-distinct spec: r and s must be at least 2");
    }
    if (std::gcd(spec.r, spec.s) != 1) {
        throw PreconditionError("regular-distinct spec: gcd(" + std::to_string(spec.r) + "," +
                                std::to_string(spec.s) + ") != 1");
    }
}

namespace {

std::vector<std::int64_t> allowed_parts(const RegularDistinctSpec& spec, std::int64_t nmax) {
    std::vector<std::int64_t> parts;
    for (std::int64_t part = 1; part <= nmax; ++part) {
        if (part % spec.r != 0 && part % spec.s != 0) parts.push_back(part);
    }
    return parts;
}

} // namespace

CountTable count_distinct_regular(const RegularDistinctSpec& spec, std::int64_t nmax) {
    validate(spec);
    if (nmax < 0) throw PreconditionError("count_distinct_regular: nmax must be nonnegative");
    CountTable table(static_cast<std::size_t>(nmax) + 1, BigInt(0));
    table[0] = 1;
    for (std::int64_t part : allowed_parts(spec, nmax)) {
        for (std::int64_t n = nmax; n >= part; --n) {
            table[static_cast<std::size_t>(n)] += table[static_cast<std::size_t>(n - part)];
        }
    }
    return table;
}

std::vector<std::vector<std::int64_t>> enumerate_distinct_regular(const RegularDistinctSpec& spec,
                                                                  std::int64_t n) {
    validate(spec);
    if (n < 0 || n > 40) {
        throw PreconditionError("enumerate_distinct_regular: n must lie in [0, 40]");
    }
    std::vector<std::vector<std::int64_t>> result;
    std::vector<std::int64_t> current;
    // Largest part first, so the output is already in descending
    // lexicographic order.
    auto dfs = [&](auto&& self, std::int64_t remaining, std::int64_t max_part) -> void {
        if (remaining == 0) {
            result.push_back(current);
            return;
        }
        for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
            if (part % spec.r == 0 || part % spec.s == 0) continue;
            current.push_back(part);
            self(self, remaining - part, part - 1);
            current.pop_back();
        }
    };
    dfs(dfs, n, n);
    return result;
}

CountTable count_partitions(std::int64_t nmax) {
    if (nmax < 0) throw PreconditionError("count_partitions: nmax must be nonnegative");
    CountTable table(static_cast<std::size_t>(nmax) + 1, BigInt(0));
    table[0] = 1;
    for (std::int64_t part = 1; part <= nmax; ++part) {
        for (std::int64_t n = part; n <= nmax; ++n) {
            table[static_cast<std::size_t>(n)] += table[static_cast<std::size_t>(n - part)];
        }
    }
    return table;
}

CountTable count_lregular(std::int64_t ell, std::int64_t nmax) {
    if (ell < 2) throw PreconditionError("count_lregular: ell must be at least 2");
    if (nmax < 0) throw PreconditionError("count_lregular: nmax must be nonnegative");
    CountTable table(static_cast<std::size_t>(nmax) + 1, BigInt(0));
    table[0] = 1;
    for (std::int64_t part = 1; part <= nmax; ++part) {
        if (part % ell == 0) continue;
        for (std::int64_t n = part; n <= nmax; ++n) {
            table[static_cast<std::size_t>(n)] += table[static_cast<std::size_t>(n - part)];
        }
    }
    return table;
}

} // namespace qcert
