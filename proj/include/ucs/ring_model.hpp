#pragma once

#include "ucs/common.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ucs {

// Descriptor of one finite local ring factor. All results downstream depend
// only on (order, ideal_order); the remaining fields are derived.
struct LocalRingSpec {
    Int order;        // |R_i|
    Int ideal_order;  // m_i = |M_i|
    Int residue;      // |R_i| / m_i, the residue field size
    Int prime;        // the prime p with order = p^a
    int length = 0;   // t with order = residue^t; 0 when not realizable (lax)
    bool zmod = false;  // realize as Z/p^k rather than GF(q)[X]/(X^t)

    bool is_field() const { return ideal_order == 1; }
    Int unit_count() const { return order - ideal_order; }

    friend bool operator==(const LocalRingSpec& a, const LocalRingSpec& b) {
        return a.order == b.order && a.ideal_order == b.ideal_order;
    }
};

// Canonical sort key: residue ascending, ties by order ascending.
bool canonical_less(const LocalRingSpec& a, const LocalRingSpec& b);

// A finite commutative ring as a canonically ordered product of local rings.
struct RingSpec {
    std::vector<LocalRingSpec> factors;
    Int order;       // |R|
    Int unit_count;  // |R^x|

    int s() const { return static_cast<int>(factors.size()); }

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.factors == b.factors;
    }
};

// Validates a (order, ideal_order) descriptor. Strict mode additionally
// requires order to be a power of the residue, which every finite local ring
// satisfies.
LocalRingSpec validate_local(const Int& order, const Int& ideal_order, bool strict = true);

RingSpec canonicalize(std::vector<LocalRingSpec> factors);

// Z/nZ as a product of Z/p^a factors; unit_count is Euler's totient.
RingSpec from_modulus(const Int& n);

// Grammar:
//   expr := term (("*" | "x" | U+00D7) term)*
//   term := "Z/" nat | "GF(" nat ")" | "GF(" nat ")[x]/x^" nat | "local(" nat "," nat ")"
RingSpec parse_ring_expr(std::string_view text, bool strict = true);

std::string render(const LocalRingSpec& f);
std::string render(const RingSpec& spec);

// Every canonical strict RingSpec with order <= max_order, each exactly once,
// ordered by total order then lexicographically on factor lists.
std::vector<RingSpec> enumerate_specs(const Int& max_order);

// All strict local descriptors (q^t, q^{t-1}) with q^t <= max_order.
std::vector<LocalRingSpec> enumerate_local_specs(const Int& max_order);

// Smallest prime factor by trial division; n >= 2.
Int smallest_prime_factor(const Int& n);

bool is_prime(const Int& n);

// If n = p^a for a prime p, returns (p, a).
std::optional<std::pair<Int, int>> prime_power_split(const Int& n);

}  // namespace ucs
