#include "ucs/ramanujan.hpp"

#include <algorithm>
#include <sstream>

namespace ucs {

std::string Verdict::to_json() const {
    std::ostringstream os;
    os << "{\"ramanujan\": " << (ramanujan ? "true" : "false")
       << ", \"method\": \"" << (method == Method::Direct ? "direct" : "theorem") << "\""
       << ", \"case\": " << (case_label ? "\"" + *case_label + "\"" : "null")
       << ", \"witness\": " << (witness ? witness->str() : "null")
       << ", \"degree\": " << degree
       << ", \"vacuous\": " << (vacuous ? "true" : "false") << "}";
    return os.str();
}

Verdict ramanujan_check(const Spectrum& spectrum, const Int& degree) {
    // degree 0 (edgeless graph) is allowed and always vacuous.
    if (degree < 0) throw Error("ramanujan_check: degree must be >= 0");
    if (spectrum.multiplicity_of(degree) == 0)
        throw DegreeAbsent("degree " + degree.str() + " is not an eigenvalue of the spectrum");

    Verdict v;
    v.method = Verdict::Method::Direct;
    v.degree = degree;

    auto rest = spectrum.without(degree);
    if (rest.empty()) {
        v.ramanujan = true;
        v.vacuous = true;
        return v;
    }
    const Int bound = 4 * (degree - 1);  // lambda <= 2*sqrt(degree-1), squared
    for (const auto& [value, mult] : rest) {
        (void)mult;
        if (value * value > bound) {
            v.ramanujan = false;
            v.witness = value;
            return v;
        }
    }
    v.ramanujan = true;
    return v;
}

namespace {

bool is_descriptor(const LocalRingSpec& f, long order, long ideal) {
    return f.order == order && f.ideal_order == ideal;
}

// Counts leading factors with residue field of size 2 (canonical order puts
// them first).
int residue2_count(const RingSpec& spec) {
    int t = 0;
    for (const auto& f : spec.factors)
        if (f.residue == 2) ++t;
    return t;
}

Int ideal_product(const RingSpec& spec) {
    Int p = 1;
    for (const auto& f : spec.factors) p *= f.ideal_order;
    return p;
}

Verdict theorem_verdict(const Int& degree, bool ramanujan,
                        std::optional<std::string> label = std::nullopt) {
    Verdict v;
    v.method = Verdict::Method::Theorem;
    v.degree = degree;
    v.ramanujan = ramanujan;
    if (ramanujan) v.case_label = std::move(label);
    return v;
}

// a <= b + sqrt(b*(b-2)*...) style comparisons are pre-rearranged into exact
// polynomial tests below; each rearrangement is unit-tested against floating
// evaluation.

// q1 <= q2 <= q1 + sqrt((q1-2)*q1), given q1 <= q2.
bool ineq_f(const Int& q1, const Int& q2) {
    return (q2 - q1) * (q2 - q1) <= (q1 - 2) * q1;
}

// q2 <= 2*(q1 + sqrt((q1-2)*q1)) - 1.
bool ineq_g(const Int& q1, const Int& q2) {
    Int d = q2 + 1 - 2 * q1;
    return d <= 0 || d * d <= 4 * (q1 - 2) * q1;
}

// prod(m_i) <= 2*(q - 1 + sqrt((q-2)*q)).
bool ineq_h(const Int& prod_m, const Int& q) {
    Int d = prod_m - 2 * (q - 1);
    return d <= 0 || d * d <= 4 * (q - 2) * q;
}

}  // namespace

Verdict classify_unitary(const RingSpec& spec) {
    const Int r = spec.unit_count;
    const int s = spec.s();

    if (s == 1) {
        const auto& f = spec.factors[0];
        if (f.residue == 2) return theorem_verdict(r, true, "Thm3.1(a)");
        // |R| >= (m/2+1)^2  <=>  4|R| >= (m+2)^2
        if (f.ideal_order != 2 && 4 * f.order >= (f.ideal_order + 2) * (f.ideal_order + 2))
            return theorem_verdict(r, true, "Thm3.1(b)");
        return theorem_verdict(r, false);
    }

    const auto& fs = spec.factors;
    const int t = residue2_count(spec);

    // (a): every residue field is F_2
    if (t == s) return theorem_verdict(r, true, "Thm3.2(a)");

    auto prefix_is_F2 = [&](int upto) {
        for (int i = 0; i < upto; ++i)
            if (!is_descriptor(fs[i], 2, 1)) return false;
        return true;
    };

    // (b): F_2 x ... x F_2 x F_3 x F_3 x F_3
    if (s >= 3 && prefix_is_F2(s - 3) && is_descriptor(fs[s - 3], 3, 1) &&
        is_descriptor(fs[s - 2], 3, 1) && is_descriptor(fs[s - 1], 3, 1))
        return theorem_verdict(r, true, "Thm3.2(b)");

    // (c): F_2 x ... x F_2 x F_3 x F_3 x F_4
    if (s >= 3 && prefix_is_F2(s - 3) && is_descriptor(fs[s - 3], 3, 1) &&
        is_descriptor(fs[s - 2], 3, 1) && is_descriptor(fs[s - 1], 4, 1))
        return theorem_verdict(r, true, "Thm3.2(c)");

    // (d): F_2 x ... x F_2 x F_4 x F_4 x F_4
    if (s >= 3 && prefix_is_F2(s - 3) && is_descriptor(fs[s - 3], 4, 1) &&
        is_descriptor(fs[s - 2], 4, 1) && is_descriptor(fs[s - 1], 4, 1))
        return theorem_verdict(r, true, "Thm3.2(d)");

    // (e): F_2 x ... x F_2 x F_3 x (9,3); the (9,3) descriptor covers both
    // local rings of order 9 with a three-element maximal ideal.
    if (prefix_is_F2(s - 2) && is_descriptor(fs[s - 2], 3, 1) && is_descriptor(fs[s - 1], 9, 3))
        return theorem_verdict(r, true, "Thm3.2(e)");

    // (f): (4,2) x F_2 x ... x F_2 x F_q1 x F_q2 with eq:f
    if (s >= 3 && prefix_is_F2(s - 3) && is_descriptor(fs[s - 3], 4, 2) &&
        fs[s - 2].is_field() && fs[s - 1].is_field() && fs[s - 2].residue >= 3) {
        if (ineq_f(fs[s - 2].residue, fs[s - 1].residue))
            return theorem_verdict(r, true, "Thm3.2(f)");
        return theorem_verdict(r, false);
    }

    // (g): F_2 x ... x F_2 x F_q1 x F_q2 with eq:g
    if (prefix_is_F2(s - 2) && fs[s - 2].is_field() && fs[s - 1].is_field() &&
        fs[s - 2].residue >= 3) {
        if (ineq_g(fs[s - 2].residue, fs[s - 1].residue))
            return theorem_verdict(r, true, "Thm3.2(g)");
        return theorem_verdict(r, false);
    }

    // (h): residues 2 except the last factor, with eq:h on prod(m_i)
    if (t == s - 1) {
        if (ineq_h(ideal_product(spec), fs[s - 1].residue))
            return theorem_verdict(r, true, "Thm3.2(h)");
        return theorem_verdict(r, false);
    }

    return theorem_verdict(r, false);
}

Verdict classify_complement(const RingSpec& spec) {
    const Int degree = spec.order - 1 - spec.unit_count;
    const int s = spec.s();

    if (s == 1) return theorem_verdict(degree, true, "Thm4.1");

    const int t = residue2_count(spec);
    const Int r = spec.unit_count;

    if (t == s) {
        // (a): prod(m)+1 <= 2*sqrt((2^s-1)*prod(m) - 2)
        Int pm = ideal_product(spec);
        Int pow2s = int_pow(2, static_cast<unsigned long>(s));
        bool ok = (pm + 1) * (pm + 1) <= 4 * ((pow2s - 1) * pm - 2);
        return theorem_verdict(degree, ok, "Thm4.2(a)");
    }
    if (t >= 2) {
        // (b): |R^x| <= 2*sqrt(|R|) - 3
        bool ok = (r + 3) * (r + 3) <= 4 * spec.order;
        return theorem_verdict(degree, ok, "Thm4.2(b)");
    }
    if (t == 1) {
        // (c): |R^x| <= 2*sqrt(|R|-2) - 1
        bool ok = (r + 1) * (r + 1) <= 4 * (spec.order - 2);
        return theorem_verdict(degree, ok, "Thm4.2(c)");
    }
    // (d): all residues >= 3
    Int d = spec.factors[0].residue;
    Int u = exact_div(r, d - 1, "Thm4.2(d) ratio");
    Int lhs = u + 2 * d - 3;
    bool ok = lhs * lhs <= (2 * d - 3) * (2 * d - 3) + 4 * spec.order - 9;
    return theorem_verdict(degree, ok, "Thm4.2(d)");
}

namespace {

struct PrimePower {
    Int p;
    int alpha;
};

std::vector<PrimePower> factorize(Int n) {
    std::vector<PrimePower> out;
    while (n > 1) {
        Int p = smallest_prime_factor(n);
        int a = 0;
        while (n % p == 0) {
            n /= p;
            ++a;
        }
        out.push_back({p, a});
    }
    return out;
}

}  // namespace

Verdict classify_zn(const Int& n, GraphKind which) {
    if (n < 2) throw Error("classify_zn: n must be >= 2");
    auto pp = factorize(n);
    const int s = static_cast<int>(pp.size());

    Int phi = 1;
    for (const auto& [p, a] : pp) phi *= int_pow(p, static_cast<unsigned long>(a - 1)) * (p - 1);

    if (which == GraphKind::Complement) {
        const Int degree = n - 1 - phi;
        if (s == 1) return theorem_verdict(degree, true, "Cor4.3(a)");
        static const long members[] = {6, 10, 12, 15, 18, 21, 24, 30, 35};
        for (long m : members)
            if (n == m) return theorem_verdict(degree, true, "Cor4.3(b)");
        return theorem_verdict(degree, false);
    }

    const Int degree = phi;
    if (s == 1) {
        if (pp[0].p == 2) return theorem_verdict(degree, true, "Cor3.3(a)");
        if (pp[0].alpha <= 2) return theorem_verdict(degree, true, "Cor3.3(b)");
        return theorem_verdict(degree, false);
    }
    if (s == 3 && pp[0].p == 2 && pp[0].alpha == 2 && pp[1].alpha == 1 && pp[2].alpha == 1 &&
        pp[2].p <= 2 * pp[1].p - 3)
        return theorem_verdict(degree, true, "Cor3.3(c)");
    if (s == 2 && pp[0].p >= 3 && pp[0].alpha == 1 && pp[1].alpha == 1 &&
        pp[1].p <= 4 * pp[0].p - 5)
        return theorem_verdict(degree, true, "Cor3.3(d)");
    if (s == 3 && pp[0].p == 2 && pp[0].alpha == 1 && pp[1].alpha == 1 && pp[2].alpha == 1 &&
        pp[2].p <= 4 * pp[1].p - 5)
        return theorem_verdict(degree, true, "Cor3.3(d)");
    if (s == 2 && pp[0].p == 2) {
        const int a1 = pp[0].alpha;
        const int a2 = pp[1].alpha;
        if ((a1 == 1 || a1 == 2) && a2 == 2)  // n = 2*p^2 or 4*p^2
            return theorem_verdict(degree, true, "Cor3.3(e)");
        // p_2 > 2^(a1-3) + 1  <=>  8*(p_2 - 1) > 2^a1
        if (a2 == 1 && 8 * (pp[1].p - 1) > int_pow(2, static_cast<unsigned long>(a1)))
            return theorem_verdict(degree, true, "Cor3.3(e)");
    }
    return theorem_verdict(degree, false);
}

}  // namespace ucs
