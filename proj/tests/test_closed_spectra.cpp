#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ucs/closed_spectra.hpp"
#include "ucs/ring_model.hpp"

#include <map>

using namespace ucs;

namespace {

Spectrum make(std::map<Int, Int> acc, Int order) {
    return Spectrum::from_map(acc, order);
}

}  // namespace

TEST_CASE("frozen spectra of small rings") {
    CHECK(spectrum_unitary(parse_ring_expr("Z/4")) == make({{2, 1}, {0, 2}, {-2, 1}}, 4));
    CHECK(spectrum_unitary(parse_ring_expr("Z/6")) == make({{2, 1}, {1, 2}, {-1, 2}, {-2, 1}}, 6));
    CHECK(spectrum_unitary(parse_ring_expr("Z/4 x GF(2)")) ==
          make({{2, 2}, {0, 4}, {-2, 2}}, 8));
    CHECK(spectrum_complement(parse_ring_expr("Z/4")) == make({{1, 2}, {-1, 2}}, 4));
    CHECK(spectrum_line(parse_ring_expr("Z/6")) ==
          make({{2, 1}, {1, 2}, {-1, 2}, {-2, 1}}, 6));  // L(C_6) = C_6
    // complete graph K_5 and its line graph (Petersen complement)
    CHECK(spectrum_unitary(parse_ring_expr("GF(5)")) == make({{4, 1}, {-1, 4}}, 5));
    CHECK(spectrum_line(parse_ring_expr("GF(5)")) == make({{6, 1}, {1, 4}, {-2, 5}}, 10));
}

TEST_CASE("lambda_c values and errors") {
    auto spec = parse_ring_expr("Z/4 x GF(3)");  // residues 2, 3
    CHECK(lambda_c(spec, {}) == 4);
    CHECK(lambda_c(spec, {0}) == -4);
    CHECK(lambda_c(spec, {1}) == -2);
    CHECK(lambda_c(spec, {0, 1}) == 2);
    CHECK(lambda_c(spec, {1, 1, 0}) == 2);  // duplicate indices collapse
    CHECK_THROWS_AS(lambda_c(spec, {2}), IndexOutOfRange);
}

TEST_CASE("spectrum structure for fields and local rings") {
    // G_{F_q} = K_q
    for (long q : {2, 3, 4, 5, 7, 8, 9}) {
        auto s = spectrum_unitary(parse_ring_expr("GF(" + std::to_string(q) + ")"));
        CHECK(s == make({{q - 1, 1}, {-1, q - 1}}, q));
    }
    // local non-field: complete multipartite K_{q x m}
    auto s = spectrum_unitary(parse_ring_expr("Z/9"));
    CHECK(s == make({{6, 1}, {0, 6}, {-3, 2}}, 9));
}

TEST_CASE("subset multiplicities and the zero block") {
    auto spec = parse_ring_expr("Z/8 x GF(9) x GF(3)[x]/x^2");
    const Int order = spec.order;
    Int nonzero = 0;
    Int trace = 0;
    for (const auto& [v, m] : spectrum_unitary(spec).entries) {
        nonzero += m;
        trace += v * m;
        if (v == 0) nonzero -= m;
    }
    Int prod_residue = 1;
    for (const auto& f : spec.factors) prod_residue *= f.residue;
    CHECK(nonzero == prod_residue);
    CHECK(trace == 0);
}

TEST_CASE("complement spectrum is the image of lambda -> -1-lambda") {
    for (const char* expr : {"Z/12", "GF(4) x GF(5)", "Z/8 x Z/9", "GF(2) x GF(2) x GF(7)"}) {
        auto spec = parse_ring_expr(expr);
        auto su = spectrum_unitary(spec);
        auto sc = spectrum_complement(spec);
        CHECK(sc.order == su.order);
        // top eigenvalue |R| - 1 - |R^x| is simple
        CHECK(sc.multiplicity_of(spec.order - 1 - spec.unit_count) >= 1);
        for (const auto& [v, m] : su.entries) {
            if (v == spec.unit_count) continue;  // maps to the shifted top value
            CHECK(sc.multiplicity_of(-1 - v) >= m);
        }
        CHECK(sc.trace() == 0);
    }
}

TEST_CASE("line spectrum shift and -2 block") {
    auto spec = parse_ring_expr("Z/4 x GF(3)");  // r = 4
    auto su = spectrum_unitary(spec);
    auto sl = spectrum_line(spec);
    const Int r = spec.unit_count;
    CHECK(sl.order == spec.order * r / 2);
    for (const auto& [v, m] : su.entries)
        if (v + r - 2 != -2) CHECK(sl.multiplicity_of(v + r - 2) == m);
    CHECK(sl.multiplicity_of(-2) == spec.order * (r - 2) / 2 + su.multiplicity_of(-r));

    // r = 1: edgeless line graph on |R|/2 vertices
    auto l2 = spectrum_line(parse_ring_expr("GF(2) x GF(2) x GF(2)"));
    CHECK(l2 == make({{0, 4}}, 4));
    // r = 2: no -2 block beyond the shifted image
    auto l6 = spectrum_line(parse_ring_expr("Z/6"));
    CHECK(l6.multiplicity_of(-2) == 1);
}

TEST_CASE("nonzero distinct eigenvalue count is 2^s at most") {
    for (const char* expr : {"GF(3)", "GF(3) x GF(5)", "GF(3) x GF(5) x GF(7)"}) {
        auto spec = parse_ring_expr(expr);
        auto su = spectrum_unitary(spec);
        long distinct = 0;
        for (const auto& [v, m] : su.entries)
            if (v != 0) ++distinct;
        CHECK(distinct <= (1L << spec.s()));
    }
}
