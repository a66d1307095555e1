#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ucs/closed_spectra.hpp"
#include "ucs/energy_moments.hpp"
#include "ucs/ring_model.hpp"

using namespace ucs;

TEST_CASE("frozen line energies, one per branch") {
    auto a = line_energy(parse_ring_expr("Z/8"));
    CHECK(a.energy == 36);
    CHECK(a.branch == "all-residue-2-or-F2..F2xF3");

    auto b = line_energy(parse_ring_expr("GF(2) x GF(2) x GF(3)"));
    CHECK(b.energy == 16);
    CHECK(b.branch == "all-residue-2-or-F2..F2xF3");

    auto c = line_energy(parse_ring_expr("Z/4 x Z/4"));
    CHECK(c.energy == 72);
    CHECK(c.branch == "all-residue-2-or-F2..F2xF3");

    auto d = line_energy(parse_ring_expr("GF(3) x GF(5)"));
    CHECK(d.energy == 180);
    CHECK(d.branch == "all-residue-ge-3");

    auto e = line_energy(parse_ring_expr("Z/4 x GF(3)"));
    CHECK(e.energy == 52);
    CHECK(e.branch == "mixed-t");
}

TEST_CASE("every branch matches the spectral absolute sum") {
    for (const auto& spec : enumerate_specs(100))
        CHECK(line_energy(spec).energy == energy_of(spectrum_line(spec)));
}

TEST_CASE("hyperenergetic predicates") {
    auto k5 = line_energy(parse_ring_expr("GF(5)"));
    CHECK(k5.hyperenergetic_direct);   // E(L(K_5)) = 20 > 2*9
    CHECK(k5.hyperenergetic_corollary);

    auto c6 = line_energy(parse_ring_expr("Z/6"));
    CHECK_FALSE(c6.hyperenergetic_direct);  // E(C_6) = 8 <= 2*5

    // the known disagreement: all residues 2 with |R^x| = 2
    auto gap = line_energy(parse_ring_expr("GF(2) x Z/4"));
    CHECK_FALSE(gap.hyperenergetic_direct);
    CHECK(gap.hyperenergetic_corollary);
    CHECK(gap.corollary_case == "c");
}

TEST_CASE("frozen moments") {
    auto z12 = parse_ring_expr("Z/12");
    CHECK(moment_unitary(z12, 0) == 12);
    CHECK(moment_unitary(z12, 1) == 0);
    CHECK(moment_unitary(z12, 2) == 48);
    CHECK(moment_unitary(z12, 3) == 0);
    CHECK(moment_line(z12, 2) == 144);

    auto f5 = parse_ring_expr("GF(5)");
    CHECK(moment_unitary(f5, 2) == 20);   // 2 * #edges of K_5
    CHECK(moment_unitary(f5, 3) == 60);   // 6 * #triangles
    CHECK(moment_line(f5, 0) == 10);
}

TEST_CASE("odd moments vanish when some residue is 2") {
    auto spec = parse_ring_expr("Z/8 x GF(9)");
    for (int k = 1; k <= 9; k += 2) CHECK(moment_unitary(spec, k) == 0);
}

TEST_CASE("moments agree with spectral power sums") {
    for (const auto& spec : enumerate_specs(60)) {
        auto su = spectrum_unitary(spec);
        auto sl = spectrum_line(spec);
        for (int k = 0; k <= 6; ++k) {
            CHECK(moment_unitary(spec, k) == (k == 0 ? su.order : su.power_sum(k)));
            CHECK(moment_line(spec, k) == (k == 0 ? sl.order : sl.power_sum(k)));
        }
    }
}

TEST_CASE("moments are multiplicative over tensor factors") {
    // s_k(G x H) = s_k(G) * s_k(H) / (orders cancel): trace(A_G (x) A_H)^k
    // = trace(A_G^k) * trace(A_H^k)
    auto a = parse_ring_expr("Z/4");
    auto b = parse_ring_expr("GF(3)");
    auto ab = parse_ring_expr("Z/4 x GF(3)");
    for (int k = 1; k <= 8; ++k)
        CHECK(moment_unitary(ab, k) == moment_unitary(a, k) * moment_unitary(b, k));
}

TEST_CASE("generic_line_moment") {
    // C_4: n = 4, r = 2, moments 4, 0, 8, 0
    std::vector<Int> base = {4, 0, 8, 0};
    CHECK(generic_line_moment(4, 2, base, 0) == 4);
    CHECK(generic_line_moment(4, 2, base, 2) == 8);  // L(C_4) = C_4
    CHECK(generic_line_moment(4, 2, {4, 0, 8}, 2) == 8);  // exact length also fine
    CHECK_THROWS_AS(generic_line_moment(4, 2, {4, 0}, 2), LengthMismatch);

    // K_5: n = 5, r = 4; L(K_5) is the Petersen complement, s_2 = 2*30
    std::vector<Int> k5 = {5, 0, 20, 60};
    CHECK(generic_line_moment(5, 4, k5, 2) == 60);
}

TEST_CASE("frozen cycle counts") {
    auto f5 = parse_ring_expr("GF(5)");
    CHECK(cycle_count(f5, CycleTarget::Unitary, 3) == 10);
    CHECK(cycle_count(f5, CycleTarget::Unitary, 4) == 15);
    CHECK(cycle_count(f5, CycleTarget::Line, 3) == 10 + 20);  // triangles of L(K_5)

    auto z12 = parse_ring_expr("Z/12");
    CHECK(cycle_count(z12, CycleTarget::Unitary, 3) == 0);  // bipartite
    CHECK(cycle_count(z12, CycleTarget::Unitary, 4) == 30);

    CHECK_THROWS_AS(cycle_count(f5, CycleTarget::Unitary, 5), Error);
}
