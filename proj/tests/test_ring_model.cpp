#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ucs/ring_model.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace ucs;

TEST_CASE("validate_local accepts exactly the strict descriptors") {
    auto f = validate_local(9, 3);
    CHECK(f.residue == 3);
    CHECK(f.prime == 3);
    CHECK(f.length == 2);
    CHECK(f.unit_count() == 6);

    auto gf8 = validate_local(8, 1);
    CHECK(gf8.is_field());
    CHECK(gf8.residue == 8);
    CHECK(gf8.length == 1);

    CHECK_THROWS_AS(validate_local(6, 2), NotPrimePower);
    CHECK_THROWS_AS(validate_local(6, 1), NotPrimePower);
    CHECK_THROWS_AS(validate_local(16, 2), NotRealizable);  // 16 is not a power of 8
    CHECK_THROWS_AS(validate_local(8, 3), Error);           // ideal must divide the order
    CHECK_THROWS_AS(validate_local(4, 4), Error);           // residue field size 1
    CHECK_THROWS_AS(validate_local(0, 1), Error);
    CHECK_THROWS_AS(validate_local(1, 1), Error);

    // lax mode keeps the descriptor but marks it unrealizable
    auto lax = validate_local(16, 2, /*strict=*/false);
    CHECK(lax.residue == 8);
    CHECK(lax.length == 0);
}

TEST_CASE("canonicalize sorts by residue then order and is permutation-invariant") {
    std::vector<LocalRingSpec> base = {
        validate_local(9, 3),   // residue 3
        validate_local(4, 1),   // residue 4
        validate_local(8, 4),   // residue 2
        validate_local(3, 1),   // residue 3
        validate_local(2, 1),   // residue 2
    };
    auto canon = canonicalize(base);
    std::vector<Int> residues;
    for (const auto& f : canon.factors) residues.push_back(f.residue);
    CHECK(residues == std::vector<Int>{2, 2, 3, 3, 4});
    CHECK(canon.factors[0].order == 2);  // residue ties broken by order
    CHECK(canon.factors[1].order == 8);
    CHECK(canon.order == 2 * 9 * 4 * 8 * 3);
    CHECK(canon.unit_count == 1 * 6 * 3 * 4 * 2);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto shuffled = base;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(canonicalize(shuffled) == canon);
    }
    CHECK(canonicalize(canon.factors) == canon);  // idempotent

    CHECK_THROWS_AS(canonicalize({}), EmptyProduct);
}

TEST_CASE("from_modulus matches a totient sieve") {
    const long N = 100000;
    std::vector<long> phi(N + 1);
    for (long i = 0; i <= N; ++i) phi[i] = i;
    for (long i = 2; i <= N; ++i)
        if (phi[i] == i)
            for (long j = i; j <= N; j += i) phi[j] -= phi[j] / i;

    for (long n = 2; n <= N; ++n) {
        auto spec = from_modulus(n);
        REQUIRE(spec.order == n);
        REQUIRE(spec.unit_count == phi[n]);
    }
    CHECK_THROWS_AS(from_modulus(1), Error);
}

TEST_CASE("from_modulus factors are canonical prime powers") {
    auto spec = from_modulus(360);  // 8 * 9 * 5
    REQUIRE(spec.s() == 3);
    CHECK(spec.factors[0].order == 8);
    CHECK(spec.factors[1].order == 9);
    CHECK(spec.factors[2].order == 5);
    for (const auto& f : spec.factors) CHECK(f.zmod);
}

TEST_CASE("enumerate_local_specs lists every strict descriptor once") {
    auto locals = enumerate_local_specs(16);
    CHECK(locals.size() == 15);
    std::set<std::pair<Int, Int>> seen;
    for (const auto& f : locals) {
        CHECK(f.order <= 16);
        CHECK(f.order == int_pow(f.residue, static_cast<unsigned long>(f.length)));
        CHECK(seen.insert({f.order, f.ideal_order}).second);
    }
}

TEST_CASE("enumerate_specs is duplicate-free, canonical and ordered") {
    auto specs = enumerate_specs(64);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto& spec = specs[i];
        CHECK(spec.order <= 64);
        CHECK(spec == canonicalize(spec.factors));
        CHECK(seen.insert(render(spec)).second);
        if (i) CHECK(specs[i - 1].order <= spec.order);
    }
    // order 4: F_4, Z/4, F_2[x]/x^2-type local(4,2) duplicates Z/4? No:
    // descriptors are (4,1), (4,2), (2,1)x(2,1) -- the two order-4 local rings
    // with |M|=2 share one descriptor.
    long count4 = 0;
    for (const auto& spec : specs)
        if (spec.order == 4) ++count4;
    CHECK(count4 == 3);
}

TEST_CASE("parse and render round-trip") {
    for (const char* expr : {"Z/12", "GF(9)", "GF(3)[x]/x^2 * GF(5)", "Z/4 x GF(3)",
                             "GF(2) \xc3\x97 GF(2) \xc3\x97 Z/9"}) {
        auto spec = parse_ring_expr(expr);
        CHECK(parse_ring_expr(render(spec)) == spec);
    }
    CHECK(render(parse_ring_expr("Z/12")) == "Z/4 \xc3\x97 GF(3)");
    CHECK(render(parse_ring_expr("GF(3)[x]/x^2*GF(5)")) == "Z/9 \xc3\x97 GF(5)");

    // Z/9 and GF(3)[x]/x^2 share a descriptor; render prefers the Z/ name.
    CHECK(render(parse_ring_expr("GF(3)[x]/x^2")) == "Z/9");

    auto lax = parse_ring_expr("local(16,2)", /*strict=*/false);
    CHECK(lax.factors[0].length == 0);
    CHECK_THROWS_AS(parse_ring_expr("local(16,2)"), NotRealizable);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_ring_expr("Z/4 * GF(6)");
        FAIL("expected failure");
    } catch (const NotPrimePower&) {
    }
    try {
        parse_ring_expr("Z/4 * * GF(3)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
    CHECK_THROWS_AS(parse_ring_expr(""), ParseError);
    CHECK_THROWS_AS(parse_ring_expr("Z/4 trailing"), ParseError);
    CHECK_THROWS_AS(parse_ring_expr("GF(4"), ParseError);
    CHECK_THROWS_AS(parse_ring_expr("Q/4"), ParseError);
}

TEST_CASE("prime helpers") {
    CHECK(smallest_prime_factor(91) == 7);
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    auto pp = prime_power_split(243);
    REQUIRE(pp.has_value());
    CHECK(pp->first == 3);
    CHECK(pp->second == 5);
    CHECK_FALSE(prime_power_split(12).has_value());
}
