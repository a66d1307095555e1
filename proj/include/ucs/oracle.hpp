#pragma once

#include "ucs/ring_model.hpp"
#include "ucs/spectrum.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ucs {

struct OracleLimits {
    long max_ring_order = 4096;
    long max_line_edges = 200000;
};

// One realized local factor. Elements are indices 0..order-1; only the
// additive structure and the unit predicate matter for G_R.
struct LocalFactor {
    enum class Kind { Zmod, Field, Truncated } kind;
    long order;
    long p;        // characteristic
    long q;        // residue field size (= order for Kind::Field)
    int ext_deg;   // e with q = p^e
    // Monic irreducible of degree ext_deg over GF(p), constant term first;
    // empty when ext_deg == 1. Lexicographically smallest, for determinism.
    std::vector<int> irreducible;

    long sub(long a, long b) const;
    bool is_unit(long a) const;
    std::string describe() const;
};

struct ConcreteRing {
    std::vector<LocalFactor> factors;
    long order;

    // Mixed-radix coordinates of an element index.
    std::vector<long> coords(long index) const;
    long sub(long a, long b) const;
    bool is_unit(long a) const;
};

struct Graph {
    long n = 0;
    std::vector<std::uint8_t> adj;  // dense n*n, symmetric, zero diagonal
    std::vector<long> degree;

    bool edge(long u, long v) const { return adj[static_cast<std::size_t>(u) * n + v] != 0; }
    void set_edge(long u, long v);
    long edge_count() const;
};

// Smallest (lexicographically, constant term first) monic irreducible of
// degree e over GF(p).
std::vector<int> smallest_irreducible(long p, int e);

ConcreteRing realize_ring(const RingSpec& spec, const OracleLimits& limits = {});

Graph cayley_graph(const ConcreteRing& ring);

enum class Transform { Complement, Line };

Graph transform(const Graph& g, Transform kind, const OracleLimits& limits = {});

// Trace of the k-th adjacency power, exact.
Int exact_moment(const Graph& g, int k);

// Traces of A^0..A^kmax in one pass.
std::vector<Int> exact_moments(const Graph& g, int kmax);

// Rounds a floating eigendecomposition to integers and verifies it against
// exact moments; throws NotIntegral if the graph fails either check.
Spectrum integral_spectrum(const Graph& g);

// length 3: s_3/6; length 4: (s_4 - 2m - 4*sum C(d_j,2))/8.
Int count_cycles(const Graph& g, int length);

// "n m" header then one "u v" line per edge, 0-indexed.
void export_edge_list(const Graph& g, std::ostream& os);

// Tensor (categorical) product; used to cross-check the Cayley construction.
Graph tensor_product(const Graph& a, const Graph& b);

}  // namespace ucs
