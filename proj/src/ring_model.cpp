#include "ucs/ring_model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ucs {

Int smallest_prime_factor(const Int& n) {
    if (n < 2) throw Error("smallest_prime_factor: n must be >= 2");
    if (n % 2 == 0) return 2;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return d;
    return n;
}

bool is_prime(const Int& n) {
    return n >= 2 && smallest_prime_factor(n) == n;
}

std::optional<std::pair<Int, int>> prime_power_split(const Int& n) {
    if (n < 2) return std::nullopt;
    Int p = smallest_prime_factor(n);
    Int rest = n;
    int a = 0;
    while (rest % p == 0) {
        rest /= p;
        ++a;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, a);
}

bool canonical_less(const LocalRingSpec& a, const LocalRingSpec& b) {
    if (a.residue != b.residue) return a.residue < b.residue;
    return a.order < b.order;
}

LocalRingSpec validate_local(const Int& order, const Int& ideal_order, bool strict) {
    if (order < 2) throw Error("local ring order must be >= 2");
    if (ideal_order < 1) throw Error("maximal ideal order must be >= 1");
    if (order % ideal_order != 0)
        throw Error("ideal order " + ideal_order.str() + " does not divide ring order " + order.str());
    Int residue = order / ideal_order;
    if (residue < 2) throw Error("residue size must be >= 2 (got " + residue.str() + ")");

    auto op = prime_power_split(order);
    if (!op)
        throw NotPrimePower("local ring order " + order.str() + " is not a prime power");
    Int p = op->first;
    // order a p-power forces ideal_order and residue to be p-powers too, since
    // both divide it; nothing further to check on that front.

    LocalRingSpec f;
    f.order = order;
    f.ideal_order = ideal_order;
    f.residue = residue;
    f.prime = p;

    // order = residue^t exactly when the p-exponent of residue divides that of order
    // with matching quotient on ideal_order.
    Int pow = residue;
    int t = 1;
    while (pow < order) {
        pow *= residue;
        ++t;
    }
    if (pow == order) {
        f.length = t;
    } else if (strict) {
        throw NotRealizable("no finite local ring has order " + order.str() +
                            " with maximal ideal of order " + ideal_order.str() +
                            " (order is not a power of the residue size " + residue.str() + ")");
    }
    return f;
}

RingSpec canonicalize(std::vector<LocalRingSpec> factors) {
    if (factors.empty()) throw EmptyProduct("ring must have at least one local factor");
    std::stable_sort(factors.begin(), factors.end(), canonical_less);
    RingSpec spec;
    spec.order = 1;
    spec.unit_count = 1;
    for (const auto& f : factors) {
        spec.order *= f.order;
        spec.unit_count *= f.unit_count();
    }
    spec.factors = std::move(factors);
    return spec;
}

RingSpec from_modulus(const Int& n) {
    if (n < 2) throw Error("modulus must be >= 2");
    std::vector<LocalRingSpec> factors;
    Int rest = n;
    while (rest > 1) {
        Int p = smallest_prime_factor(rest);
        Int pk = 1;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
        }
        auto f = validate_local(pk, pk / p, /*strict=*/true);
        f.zmod = true;
        factors.push_back(f);
    }
    return canonicalize(std::move(factors));
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(std::string_view lit) {
        skip_ws();
        if (text.substr(pos, lit.size()) == lit) {
            pos += lit.size();
            return true;
        }
        return false;
    }

    Int nat() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", start);
        return Int(std::string(text.substr(start, pos - start)));
    }

    using LocalFactorList = std::vector<LocalRingSpec>;

    LocalFactorList term(bool strict);
    LocalFactorList expr(bool strict);
};

Parser::LocalFactorList Parser::term(bool strict) {
    skip_ws();
    std::size_t start = pos;
    if (eat("Z/")) {
        Int n = nat();
        if (n < 2) throw ParseError("modulus must be >= 2", start);
        return from_modulus(n).factors;
    }
    if (eat("GF(")) {
        Int q = nat();
        if (!eat(")")) throw ParseError("expected ')'", pos);
        if (!prime_power_split(q))
            throw NotPrimePower("GF(" + q.str() + "): field size must be a prime power");
        std::size_t save = pos;
        if (eat("[x]/x^")) {
            Int t = nat();
            if (t < 1) throw ParseError("truncation exponent must be >= 1", save);
            Int order = 1, ideal = 1;
            for (Int i = 0; i < t; ++i) order *= q;
            for (Int i = 1; i < t; ++i) ideal *= q;
            return {validate_local(order, ideal, strict)};
        }
        return {validate_local(q, 1, strict)};
    }
    if (eat("local(")) {
        Int o = nat();
        if (!eat(",")) throw ParseError("expected ','", pos);
        Int m = nat();
        if (!eat(")")) throw ParseError("expected ')'", pos);
        return {validate_local(o, m, strict)};
    }
    throw ParseError("expected 'Z/n', 'GF(q)', 'GF(q)[x]/x^t' or 'local(o,m)'", start);
}

Parser::LocalFactorList Parser::expr(bool strict) {
    std::vector<LocalRingSpec> factors;
    auto first = term(strict);
    factors.insert(factors.end(), first.begin(), first.end());
    for (;;) {
        skip_ws();
        if (pos >= text.size()) break;
        if (eat("*") || eat("x") || eat("\xc3\x97")) {
            auto next = term(strict);
            factors.insert(factors.end(), next.begin(), next.end());
        } else {
            throw ParseError("expected '*' between factors", pos);
        }
    }
    return factors;
}

}  // namespace

RingSpec parse_ring_expr(std::string_view text, bool strict) {
    Parser p{text};
    return canonicalize(p.expr(strict));
}

std::string render(const LocalRingSpec& f) {
    if (f.ideal_order == 1) return "GF(" + f.order.str() + ")";
    if (f.length > 0) {
        if (is_prime(f.residue)) {
            // Z/p^k and GF(p)[x]/x^k share a descriptor; the Z/ form reads better.
            return "Z/" + f.order.str();
        }
        return "GF(" + f.residue.str() + ")[x]/x^" + std::to_string(f.length);
    }
    return "local(" + f.order.str() + "," + f.ideal_order.str() + ")";
}

std::string render(const RingSpec& spec) {
    std::string out;
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (i) out += " \xc3\x97 ";
        out += render(spec.factors[i]);
    }
    return out;
}

std::vector<LocalRingSpec> enumerate_local_specs(const Int& max_order) {
    std::vector<LocalRingSpec> out;
    for (Int q = 2; q <= max_order; ++q) {
        if (!prime_power_split(q)) continue;
        Int order = q;
        Int ideal = 1;
        while (order <= max_order) {
            out.push_back(validate_local(order, ideal, /*strict=*/true));
            ideal = order;
            order *= q;
        }
    }
    std::sort(out.begin(), out.end(), [](const LocalRingSpec& a, const LocalRingSpec& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.ideal_order < b.ideal_order;
    });
    return out;
}

namespace {

// Lexicographic on (residue, order) factor tuples, matching canonical_less.
bool factor_list_less(const std::vector<LocalRingSpec>& a, const std::vector<LocalRingSpec>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i].residue != b[i].residue) return a[i].residue < b[i].residue;
        if (a[i].order != b[i].order) return a[i].order < b[i].order;
    }
    return a.size() < b.size();
}

void extend(const std::vector<LocalRingSpec>& locals, std::size_t min_idx, const Int& budget,
            std::vector<LocalRingSpec>& current, std::vector<RingSpec>& out) {
    if (!current.empty()) out.push_back(canonicalize(current));
    // Multisets: factors chosen with non-decreasing index, so each multiset
    // appears exactly once.
    for (std::size_t i = min_idx; i < locals.size(); ++i) {
        if (locals[i].order > budget) continue;
        current.push_back(locals[i]);
        extend(locals, i, budget / locals[i].order, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<RingSpec> enumerate_specs(const Int& max_order) {
    if (max_order < 2) throw Error("enumerate_specs: max_order must be >= 2");
    auto locals = enumerate_local_specs(max_order);
    std::vector<RingSpec> out;
    std::vector<LocalRingSpec> current;
    extend(locals, 0, max_order, current, out);
    std::sort(out.begin(), out.end(), [](const RingSpec& a, const RingSpec& b) {
        if (a.order != b.order) return a.order < b.order;
        return factor_list_less(a.factors, b.factors);
    });
    return out;
}

}  // namespace ucs
