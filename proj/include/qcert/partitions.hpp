#pragma once

#include <cstdint>
#include <vector>

#include "qcert/errors.hpp"
#include "qcert/numeric.hpp"

namespace qcert {

// Combinatorial ground truth. Everything in this header is computed by
// dynamic programming or exhaustive search directly on partitions; it must
// stay independent of the series machinery so that cross-checks against the
// generating functions carry weight.

// Partitions into distinct parts none of which is divisible by r or s.
struct RegularDistinctSpec {
    std::int64_t r = 2;
    std::int64_t s = 5;
};

void validate(const RegularDistinctSpec& spec);

// Exact count tables indexed by n = 0..nmax.
using CountTable = std::vector<BigInt>;

// a_{r,s}(n) via 0/1 knapsack over the allowed parts.
CountTable count_distinct_regular(const RegularDistinctSpec& spec, std::int64_t nmax);

// All (r,s)-regular partitions of n into distinct parts, each a strictly
// decreasing part list; the partitions are ordered lexicographically
// descending. Exhaustive search, so n is capped at 40.
std::vector<std::vector<std::int64_t>> enumerate_distinct_regular(const RegularDistinctSpec& spec,
                                                                  std::int64_t n);

// p(n) via unbounded knapsack.
CountTable count_partitions(std::int64_t nmax);

// Partitions with no part divisible by ell.
CountTable count_lregular(std::int64_t ell, std::int64_t nmax);

} // namespace qcert
