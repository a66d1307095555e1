#include "ucs/oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace ucs {

namespace {

long to_long(const Int& v, const char* what) {
    if (v > std::numeric_limits<long>::max() / 2)
        throw SizeGuardExceeded(std::string(what) + " too large: " + v.str());
    return static_cast<long>(v);
}

}  // namespace

long LocalFactor::sub(long a, long b) const {
    if (kind == Kind::Zmod) return ((a - b) % order + order) % order;
    // Field and truncated-polynomial elements subtract digitwise base p.
    long result = 0;
    long scale = 1;
    while (a != 0 || b != 0) {
        long da = a % p, db = b % p;
        result += ((da - db + p) % p) * scale;
        scale *= p;
        a /= p;
        b /= p;
    }
    return result;
}

bool LocalFactor::is_unit(long a) const {
    switch (kind) {
        case Kind::Zmod: return a % p != 0;
        case Kind::Field: return a != 0;
        case Kind::Truncated: return a % q != 0;  // nonzero constant coefficient
    }
    return false;
}

std::string LocalFactor::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Zmod: os << "Z/" << order; break;
        case Kind::Field: os << "GF(" << order << ")"; break;
        case Kind::Truncated: {
            int t = 0;
            for (long o = order; o > 1; o /= q) ++t;
            os << "GF(" << q << ")[X]/(X^" << t << ")";
            break;
        }
    }
    return os.str();
}

std::vector<long> ConcreteRing::coords(long index) const {
    std::vector<long> c(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        c[i] = index % factors[i].order;
        index /= factors[i].order;
    }
    return c;
}

long ConcreteRing::sub(long a, long b) const {
    long result = 0;
    long scale = 1;
    for (const auto& f : factors) {
        result += f.sub(a % f.order, b % f.order) * scale;
        scale *= f.order;
        a /= f.order;
        b /= f.order;
    }
    return result;
}

bool ConcreteRing::is_unit(long a) const {
    for (const auto& f : factors) {
        if (!f.is_unit(a % f.order)) return false;
        a /= f.order;
    }
    return true;
}

void Graph::set_edge(long u, long v) {
    adj[static_cast<std::size_t>(u) * n + v] = 1;
    adj[static_cast<std::size_t>(v) * n + u] = 1;
}

long Graph::edge_count() const {
    long sum = 0;
    for (long d : degree) sum += d;
    return sum / 2;
}

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first.
std::vector<int> poly_mod(std::vector<int> num, const std::vector<int>& den, long p) {
    const int dd = static_cast<int>(den.size()) - 1;
    for (int i = static_cast<int>(num.size()) - 1; i >= dd; --i) {
        int c = num[i];
        if (c == 0) continue;
        // den is monic
        for (int j = 0; j <= dd; ++j) {
            num[i - dd + j] = static_cast<int>(((num[i - dd + j] - static_cast<long>(c) * den[j]) % p + p) % p);
        }
    }
    num.resize(dd);
    return num;
}

bool divides(const std::vector<int>& den, const std::vector<int>& num, long p) {
    auto rem = poly_mod(num, den, p);
    return std::all_of(rem.begin(), rem.end(), [](int c) { return c == 0; });
}

std::vector<int> decode_monic(long index, int deg, long p) {
    std::vector<int> c(deg + 1);
    for (int i = 0; i < deg; ++i) {
        c[i] = static_cast<int>(index % p);
        index /= p;
    }
    c[deg] = 1;
    return c;
}

}  // namespace

std::vector<int> smallest_irreducible(long p, int e) {
    if (e == 1) return {};
    long total = 1;
    for (int i = 0; i < e; ++i) total *= p;
    for (long m = 0; m < total; ++m) {
        auto cand = decode_monic(m, e, p);
        bool irreducible = true;
        // Monic degree-e poly is irreducible iff no monic factor of degree <= e/2.
        for (int d = 1; d <= e / 2 && irreducible; ++d) {
            long nd = 1;
            for (int i = 0; i < d; ++i) nd *= p;
            for (long g = 0; g < nd && irreducible; ++g)
                if (divides(decode_monic(g, d, p), cand, p)) irreducible = false;
        }
        if (irreducible) return cand;
    }
    throw InternalInconsistency("no irreducible polynomial found");  // unreachable
}

ConcreteRing realize_ring(const RingSpec& spec, const OracleLimits& limits) {
    if (spec.order > limits.max_ring_order)
        throw SizeGuardExceeded("ring order " + spec.order.str() + " exceeds the limit " +
                                std::to_string(limits.max_ring_order));
    ConcreteRing ring;
    ring.order = to_long(spec.order, "ring order");
    for (const auto& f : spec.factors) {
        if (f.length == 0)
            throw NotRealizable("descriptor local(" + f.order.str() + "," + f.ideal_order.str() +
                                ") is not realizable as a finite local ring");
        LocalFactor lf;
        lf.order = to_long(f.order, "factor order");
        lf.p = to_long(f.prime, "prime");
        lf.q = to_long(f.residue, "residue");
        auto qs = prime_power_split(f.residue);
        lf.ext_deg = qs->second;
        if (f.zmod && lf.q == lf.p) {
            lf.kind = LocalFactor::Kind::Zmod;
        } else if (f.length == 1) {
            lf.kind = LocalFactor::Kind::Field;
            lf.irreducible = smallest_irreducible(lf.p, lf.ext_deg);
        } else {
            lf.kind = LocalFactor::Kind::Truncated;
            lf.irreducible = smallest_irreducible(lf.p, lf.ext_deg);
        }
        ring.factors.push_back(std::move(lf));
    }
    return ring;
}

Graph cayley_graph(const ConcreteRing& ring) {
    const long n = ring.order;
    Graph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n) * n, 0);
    g.degree.assign(n, 0);

    // Per-factor difference-is-unit tables make the n^2 scan cheap.
    std::vector<std::vector<std::uint8_t>> unit_diff;
    for (const auto& f : ring.factors) {
        std::vector<std::uint8_t> tab(static_cast<std::size_t>(f.order) * f.order);
        for (long x = 0; x < f.order; ++x)
            for (long y = 0; y < f.order; ++y)
                tab[static_cast<std::size_t>(x) * f.order + y] = f.is_unit(f.sub(x, y)) ? 1 : 0;
        unit_diff.push_back(std::move(tab));
    }
    std::vector<std::vector<long>> coord(n);
    for (long v = 0; v < n; ++v) coord[v] = ring.coords(v);

    for (long a = 0; a < n; ++a) {
        for (long b = a + 1; b < n; ++b) {
            bool unit = true;
            for (std::size_t i = 0; i < ring.factors.size() && unit; ++i)
                unit = unit_diff[i][static_cast<std::size_t>(coord[a][i]) * ring.factors[i].order +
                                    coord[b][i]] != 0;
            if (unit) g.set_edge(a, b);
        }
    }
    for (long v = 0; v < n; ++v) {
        long d = 0;
        for (long u = 0; u < n; ++u) d += g.adj[static_cast<std::size_t>(v) * n + u];
        g.degree[v] = d;
    }
    return g;
}

Graph transform(const Graph& g, Transform kind, const OracleLimits& limits) {
    if (kind == Transform::Complement) {
        Graph c;
        c.n = g.n;
        c.adj.assign(g.adj.size(), 0);
        c.degree.assign(g.n, 0);
        for (long u = 0; u < g.n; ++u)
            for (long v = u + 1; v < g.n; ++v)
                if (!g.edge(u, v)) c.set_edge(u, v);
        for (long v = 0; v < c.n; ++v) c.degree[v] = g.n - 1 - g.degree[v];
        return c;
    }

    // Line graph: vertices are the edges of g in (u,v) u<v lexicographic order.
    std::vector<std::pair<long, long>> edges;
    for (long u = 0; u < g.n; ++u)
        for (long v = u + 1; v < g.n; ++v)
            if (g.edge(u, v)) edges.emplace_back(u, v);
    if (static_cast<long>(edges.size()) > limits.max_line_edges)
        throw SizeGuardExceeded("line graph on " + std::to_string(edges.size()) +
                                " edges exceeds the limit " + std::to_string(limits.max_line_edges));
    Graph l;
    l.n = static_cast<long>(edges.size());
    l.adj.assign(static_cast<std::size_t>(l.n) * l.n, 0);
    l.degree.assign(l.n, 0);

    std::vector<std::vector<long>> incident(g.n);
    for (long e = 0; e < l.n; ++e) {
        incident[edges[e].first].push_back(e);
        incident[edges[e].second].push_back(e);
    }
    for (long v = 0; v < g.n; ++v)
        for (std::size_t i = 0; i < incident[v].size(); ++i)
            for (std::size_t j = i + 1; j < incident[v].size(); ++j)
                l.set_edge(incident[v][i], incident[v][j]);
    for (long e = 0; e < l.n; ++e) {
        long d = 0;
        for (long f = 0; f < l.n; ++f) d += l.adj[static_cast<std::size_t>(e) * l.n + f];
        l.degree[e] = d;
    }
    return l;
}

namespace {

std::vector<std::vector<long>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<long>> out(g.n);
    for (long u = 0; u < g.n; ++u)
        for (long v = 0; v < g.n; ++v)
            if (g.edge(u, v)) out[u].push_back(v);
    return out;
}

// Traces of A^0..A^kmax with int64 accumulation; valid when entries stay
// below 2^62 (the caller checks the degree bound).
std::vector<Int> moments_int64(const Graph& g, int kmax) {
    const long n = g.n;
    auto nbrs = adjacency_lists(g);
    std::vector<std::int64_t> cur(static_cast<std::size_t>(n) * n, 0), next(cur.size());
    for (long v = 0; v < n; ++v) cur[static_cast<std::size_t>(v) * n + v] = 1;

    std::vector<Int> traces;
    traces.push_back(n);
    for (int k = 1; k <= kmax; ++k) {
        std::fill(next.begin(), next.end(), 0);
        for (long u = 0; u < n; ++u) {
            auto* dst = &next[static_cast<std::size_t>(u) * n];
            for (long w : nbrs[u]) {
                const auto* src = &cur[static_cast<std::size_t>(w) * n];
                for (long v = 0; v < n; ++v) dst[v] += src[v];
            }
        }
        std::swap(cur, next);
        std::int64_t tr = 0;
        for (long v = 0; v < n; ++v) tr += cur[static_cast<std::size_t>(v) * n + v];
        traces.push_back(tr);
    }
    return traces;
}

std::vector<Int> moments_bigint(const Graph& g, int kmax) {
    const long n = g.n;
    auto nbrs = adjacency_lists(g);
    std::vector<Int> cur(static_cast<std::size_t>(n) * n, 0), next(cur.size());
    for (long v = 0; v < n; ++v) cur[static_cast<std::size_t>(v) * n + v] = 1;

    std::vector<Int> traces;
    traces.push_back(n);
    for (int k = 1; k <= kmax; ++k) {
        std::fill(next.begin(), next.end(), Int(0));
        for (long u = 0; u < n; ++u) {
            auto* dst = &next[static_cast<std::size_t>(u) * n];
            for (long w : nbrs[u]) {
                const auto* src = &cur[static_cast<std::size_t>(w) * n];
                for (long v = 0; v < n; ++v) dst[v] += src[v];
            }
        }
        std::swap(cur, next);
        Int tr = 0;
        for (long v = 0; v < n; ++v) tr += cur[static_cast<std::size_t>(v) * n + v];
        traces.push_back(tr);
    }
    return traces;
}

}  // namespace

std::vector<Int> exact_moments(const Graph& g, int kmax) {
    if (kmax < 0) throw Error("moment index must be >= 0");
    if (g.n == 0) return std::vector<Int>(kmax + 1, 0);
    long maxdeg = *std::max_element(g.degree.begin(), g.degree.end());
    if (maxdeg == 0) {
        std::vector<Int> traces(kmax + 1, 0);
        traces[0] = g.n;
        return traces;
    }
    // Entry bound: walk counts never exceed maxdeg^k.
    Int bound = int_pow(Int(maxdeg), static_cast<unsigned long>(kmax));
    if (bound < (Int(1) << 62)) return moments_int64(g, kmax);
    return moments_bigint(g, kmax);
}

Int exact_moment(const Graph& g, int k) { return exact_moments(g, k).back(); }

Spectrum integral_spectrum(const Graph& g) {
    const long n = g.n;
    if (n == 0) return Spectrum{{}, 0};
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (long i = 0; i < n; ++i) {
        if (g.edge(i, i)) throw Error("graph has a self-loop");
        for (long j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = g.edge(i, j) ? 1.0 : 0.0;
    }

    std::vector<double> eigenvalues(n);
    lapack_int info = LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'N', 'U', static_cast<lapack_int>(n),
                                    a.data(), static_cast<lapack_int>(n), eigenvalues.data());
    if (info != 0)
        throw InternalInconsistency("eigendecomposition failed (dsyev info " +
                                    std::to_string(info) + ")");

    long maxdeg = n == 0 ? 0 : *std::max_element(g.degree.begin(), g.degree.end());
    const double tol = 1e-6 * std::max(1.0, static_cast<double>(maxdeg));

    std::map<Int, Int> acc;
    for (long i = 0; i < n; ++i) {
        double x = eigenvalues[i];
        double rounded = std::round(x);
        if (std::abs(x - rounded) >= tol)
            throw NotIntegral("eigenvalue " + std::to_string(x) + " is not close to an integer");
        acc[Int(static_cast<long long>(rounded))] += 1;
    }
    Spectrum spectrum = Spectrum::from_map(acc, n);

    // Rounded spectrum must reproduce the exact traces; this makes the
    // floating step merely a guess that is then verified exactly.
    int kmax = static_cast<int>(spectrum.entries.size()) + 1;
    auto traces = exact_moments(g, kmax);
    for (int k = 0; k <= kmax; ++k)
        if (spectrum.power_sum(k) != traces[k])
            throw NotIntegral("rounded spectrum fails the exact moment check at k = " +
                              std::to_string(k));
    return spectrum;
}

Int count_cycles(const Graph& g, int length) {
    if (length == 3) return exact_div(exact_moment(g, 3), 6, "triangle count");
    if (length != 4) throw Error("cycle length must be 3 or 4");
    Int s4 = exact_moment(g, 4);
    Int m = g.edge_count();
    Int pairs = 0;
    for (long d : g.degree) pairs += Int(d) * (d - 1) / 2;
    return exact_div(s4 - 2 * m - 4 * pairs, 8, "quadrangle count");
}

void export_edge_list(const Graph& g, std::ostream& os) {
    os << g.n << " " << g.edge_count() << "\n";
    for (long u = 0; u < g.n; ++u)
        for (long v = u + 1; v < g.n; ++v)
            if (g.edge(u, v)) os << u << " " << v << "\n";
}

Graph tensor_product(const Graph& a, const Graph& b) {
    Graph t;
    t.n = a.n * b.n;
    t.adj.assign(static_cast<std::size_t>(t.n) * t.n, 0);
    t.degree.assign(t.n, 0);
    // Vertex (x, y) is index x + a.n * y, matching the ring's mixed radix.
    for (long x1 = 0; x1 < a.n; ++x1)
        for (long y1 = 0; y1 < b.n; ++y1)
            for (long x2 = 0; x2 < a.n; ++x2)
                for (long y2 = 0; y2 < b.n; ++y2) {
                    long u = x1 + a.n * y1, v = x2 + a.n * y2;
                    if (u < v && a.edge(x1, x2) && b.edge(y1, y2)) t.set_edge(u, v);
                }
    for (long v = 0; v < t.n; ++v) {
        long d = 0;
        for (long u = 0; u < t.n; ++u) d += t.adj[static_cast<std::size_t>(v) * t.n + u];
        t.degree[v] = d;
    }
    return t;
}

}  // namespace ucs
