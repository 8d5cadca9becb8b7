#include <doctest.h>

#include <map>
#include <random>

#include "qcert/dissection.hpp"
#include "qcert/qproducts.hpp"

using namespace qcert;

namespace {
const ExactRing Z;
}

TEST_CASE("extract picks a coefficient progression") {
    const SeriesZ s = euler(1, 40);
    CHECK(equal_up_to(extract(s, 1, 0), s, 40));

    // f_2 has no odd exponents
    CHECK(extract(euler(2, 40), 2, 1).is_zero());

    const SeriesZ t = make_series(Z, 7, {{1, 10}, {3, 30}, {5, 50}});
    const SeriesZ odd = extract(t, 2, 1);
    CHECK(odd.order() == 3);
    CHECK(odd.coeff(0) == 10);
    CHECK(odd.coeff(1) == 30);
    CHECK(odd.coeff(2) == 50);

    CHECK_THROWS_AS(extract(t, 2, 2), StructuralError);   // residue >= modulus
    CHECK_THROWS_AS(extract(t, 10, 8), PreconditionError); // residue beyond order
}

TEST_CASE("even part of a(2,5) is f_2 mod 2") {
    const ModRing m2(2);
    const SeriesMod a25 = grs_generating(2, 5, 200, m2);
    const SeriesMod even = extract(a25, 2, 0);
    CHECK(equal_up_to(even, euler(2, 100, m2), 100));
}

TEST_CASE("substitute_power stretches exponents") {
    const SeriesZ f1 = euler(1, 50);
    CHECK(equal_up_to(substitute_power(f1, 1, 50), f1, 50));
    CHECK(equal_up_to(substitute_power(f1, 2, 100), euler(2, 100), 100));
    CHECK_THROWS_AS(substitute_power(euler(1, 10), 2, 100), PreconditionError);
}

TEST_CASE("extract inverts substitute_power") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
    for (std::int64_t k = 1; k <= 6; ++k) {
        std::vector<BigInt> c(30);
        for (auto& x : c) x = coeff(rng);
        const SeriesZ a = SeriesZ::from_coeffs(Z, std::move(c));
        CHECK(equal_up_to(extract(substitute_power(a, k, 30 * k), k, 0), a, 30));
    }
}

TEST_CASE("dissection completeness") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
    for (std::int64_t a_mod = 1; a_mod <= 7; ++a_mod) {
        const std::int64_t n = 7 * 8 * 3;
        std::vector<BigInt> c(static_cast<std::size_t>(n));
        for (auto& x : c) x = coeff(rng);
        const SeriesZ s = SeriesZ::from_coeffs(Z, std::move(c));
        SeriesZ rebuilt = zero_series(Z, n);
        for (std::int64_t b = 0; b < a_mod; ++b) {
            const SeriesZ part = extract(s, a_mod, b);
            // stretch back to exponents a_mod*k + b; the residue-b slice only
            // reaches order a_mod*part.order(), so the sum shrinks to the
            // shortest slice
            const SeriesZ stretched = substitute_power(part, a_mod, a_mod * part.order());
            rebuilt = add(rebuilt, shift(stretched, b));
        }
        CHECK(rebuilt.order() >= n - a_mod + 1);
        CHECK(equal_up_to(rebuilt, truncated(s, rebuilt.order()), rebuilt.order()));
    }
}

TEST_CASE("gen_pentagonal_index on small cases") {
    CHECK(gen_pentagonal_index(0) == 0);
    CHECK(gen_pentagonal_index(1) == 1);
    CHECK(gen_pentagonal_index(2) == -1);
    CHECK(!gen_pentagonal_index(3).has_value());
    CHECK(!gen_pentagonal_index(4).has_value());
    CHECK(gen_pentagonal_index(5) == 2);
    CHECK(gen_pentagonal_index(7) == -2);
    CHECK_THROWS_AS(gen_pentagonal_index(-1), PreconditionError);
}

TEST_CASE("gen_pentagonal_index against exhaustive enumeration") {
    std::map<std::int64_t, std::int64_t> table; // n -> k with k(3k-1)/2 = n
    for (std::int64_t k = -40; k <= 40; ++k) {
        const std::int64_t n = k * (3 * k - 1) / 2;
        if (n >= 0 && n <= 2000) table[n] = k;
    }
    CHECK(table.at(12) == 3);
    CHECK(table.at(15) == -3);
    for (std::int64_t n = 0; n <= 2000; ++n) {
        const auto got = gen_pentagonal_index(n);
        const auto it = table.find(n);
        if (it == table.end()) {
            CHECK(!got.has_value());
        } else {
            REQUIRE(got.has_value());
            CHECK(*got == it->second);
        }
    }
}

TEST_CASE("f_1 coefficients are odd exactly at generalized pentagonal numbers") {
    const SeriesMod f1 = euler(1, 500, ModRing(2));
    for (std::int64_t n = 0; n < 500; ++n) {
        CHECK((f1.coeff(n) == 1) == gen_pentagonal_index(n).has_value());
    }
}

TEST_CASE("named identities pass at order 500") {
    for (NamedIdentity id : all_identities()) {
        const IdentityReport report = verify_identity(id, 500);
        INFO("identity ", identity_name(id));
        CHECK(report.pass);
        CHECK(!report.diff.has_value());
    }
    CHECK_THROWS_AS(verify_identity(NamedIdentity::T1, 7), PreconditionError);
}

TEST_CASE("identity names round-trip") {
    CHECK(identity_from_string("t3") == NamedIdentity::T3);
    CHECK(identity_from_string("g1") == NamedIdentity::G1);
    CHECK(!identity_from_string("bogus").has_value());
}

TEST_CASE("p-dissection instances") {
    CHECK(make_p_dissection_instance(5).p_star == -5);
    CHECK(make_p_dissection_instance(5).exceptional_k == -1);
    CHECK(make_p_dissection_instance(7).p_star == 7);
    CHECK(make_p_dissection_instance(7).exceptional_k == 1);
    CHECK(make_p_dissection_instance(11).exceptional_k == -2);
    CHECK(make_p_dissection_instance(13).exceptional_k == 2);
    CHECK_THROWS_AS(make_p_dissection_instance(4), PreconditionError);
    CHECK_THROWS_AS(make_p_dissection_instance(3), PreconditionError);
}

TEST_CASE("p-dissection of f_1 passes for the desk-scale primes") {
    for (std::int64_t p : {5, 7, 11, 13}) {
        const PDissectionReport report = verify_p_dissection(p, p * p + 50);
        INFO("p = ", p);
        CHECK(report.series_equal);
        CHECK(report.residues_excluded);
        CHECK(report.pass());
    }
    CHECK_THROWS_AS(verify_p_dissection(9, 200), PreconditionError);
    CHECK_THROWS_AS(verify_p_dissection(5, 20), PreconditionError);
}

TEST_CASE("residue exclusion for p = 5 by direct enumeration") {
    // (3k^2+k)/2 mod 5 for k in {-2, 0, 1, 2} avoids (25-1)/24 = 1
    std::vector<std::int64_t> residues;
    for (std::int64_t k : {-2, 0, 1, 2}) {
        std::int64_t r = ((3 * k * k + k) / 2) % 5;
        if (r < 0) r += 5;
        residues.push_back(r);
    }
    for (std::int64_t r : residues) CHECK(r != 1);
    // and the excluded k = -1 does hit it
    CHECK((3 * 1 - 1) / 2 % 5 == 1);
}
