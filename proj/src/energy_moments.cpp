#include "ucs/energy_moments.hpp"

#include <sstream>

namespace ucs {

std::string EnergyReport::to_json() const {
    std::ostringstream os;
    os << "{\"energy\": " << energy
       << ", \"branch\": \"" << branch << "\""
       << ", \"line_order\": " << line_order
       << ", \"hyper_direct\": " << (hyperenergetic_direct ? "true" : "false")
       << ", \"hyper_corollary\": " << (hyperenergetic_corollary ? "true" : "false")
       << ", \"corollary_case\": " << (corollary_case ? "\"" + *corollary_case + "\"" : "null")
       << "}";
    return os.str();
}

Int energy_of(const Spectrum& spectrum) { return spectrum.abs_sum(); }

namespace {

int residue2_count(const RingSpec& spec) {
    int t = 0;
    for (const auto& f : spec.factors)
        if (f.residue == 2) ++t;
    return t;
}

// F_2 x ... x F_2 x F_3, including the s = 1 case F_3.
bool is_f2_chain_times_f3(const RingSpec& spec) {
    const int s = spec.s();
    for (int i = 0; i < s - 1; ++i)
        if (spec.factors[i].order != 2) return false;
    return spec.factors[s - 1].order == 3 && spec.factors[s - 1].is_field();
}

}  // namespace

EnergyReport line_energy(const RingSpec& spec) {
    const Int r = spec.unit_count;
    const int s = spec.s();
    const int t = residue2_count(spec);

    EnergyReport rep;
    rep.line_order = exact_div(spec.order * r, 2, "line graph order");

    if (t == s || is_f2_chain_times_f3(spec)) {
        rep.branch = "all-residue-2-or-F2..F2xF3";
        rep.energy = int_pow(2, static_cast<unsigned long>(s + 1)) * (r - 1) * (r - 1);
    } else if (t >= 1) {
        rep.branch = "mixed-t";
        rep.energy = int_pow(2, static_cast<unsigned long>(t + 1)) + 2 * spec.order * (r - 2);
    } else {
        rep.branch = "all-residue-ge-3";
        rep.energy = 2 * spec.order * (r - 2);
    }
    if (rep.energy < 0) throw InternalInconsistency("negative line-graph energy");

    rep.hyperenergetic_direct = rep.energy > 2 * (rep.line_order - 1);

    if (r >= 4) {
        rep.hyperenergetic_corollary = true;
        rep.corollary_case = "a";
    } else if (s == 1 && spec.factors[0].residue == 2 && spec.order >= 8) {
        rep.hyperenergetic_corollary = true;
        rep.corollary_case = "b";
    } else if (s >= 2 && t == s && r >= 2) {
        rep.hyperenergetic_corollary = true;
        rep.corollary_case = "c";
    }
    return rep;
}

Int moment_unitary(const RingSpec& spec, int k) {
    if (k < 0) throw Error("moment index must be >= 0");
    if (k == 0) return spec.order;
    Int result = spec.unit_count;
    for (const auto& f : spec.factors) {
        Int u = f.unit_count();
        Int up = int_pow(u, static_cast<unsigned long>(k - 1));
        Int mp = int_pow(f.ideal_order, static_cast<unsigned long>(k - 1));
        if ((k - 1) % 2 == 1) mp = -mp;  // (-m)^(k-1)
        result *= up - mp;
    }
    return result;
}

Int generic_line_moment(const Int& n, const Int& r, const std::vector<Int>& base_moments, int k) {
    if (k < 0) throw Error("moment index must be >= 0");
    if (base_moments.size() < static_cast<std::size_t>(k) + 1)
        throw LengthMismatch("need base moments s_0..s_" + std::to_string(k) + ", got " +
                             std::to_string(base_moments.size()));
    if (k == 0) {
        // The (-2)^(k-1) correction degenerates to n*(r-2)/2; the total is the
        // line-graph order n*r/2.
        return base_moments[0] + exact_div(n * (r - 2), 2, "line moment k=0");
    }
    Int sum = 0;
    for (int j = 0; j <= k; ++j) {
        sum += binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) *
               int_pow(r - 2, static_cast<unsigned long>(k - j)) * base_moments[j];
    }
    Int corr = int_pow(2, static_cast<unsigned long>(k - 1)) * n * (r - 2);
    if ((k - 1) % 2 == 1) corr = -corr;
    return sum - corr;
}

Int moment_line(const RingSpec& spec, int k) {
    if (k < 0) throw Error("moment index must be >= 0");
    const Int r = spec.unit_count;
    if (r == 1) {
        // Edgeless line graph on |R|/2 vertices.
        return k == 0 ? exact_div(spec.order, 2, "line moment") : Int(0);
    }
    std::vector<Int> base;
    base.reserve(k + 1);
    for (int j = 0; j <= k; ++j) base.push_back(moment_unitary(spec, j));
    return generic_line_moment(spec.order, r, base, k);
}

Int cycle_count(const RingSpec& spec, CycleTarget target, int length) {
    if (length != 3 && length != 4) throw Error("cycle length must be 3 or 4");
    const Int r = spec.unit_count;
    const Int n = spec.order;
    Int p1 = 1;  // prod(|R_i^x| - m_i)
    Int p2 = 1;  // prod(|R_i^x|^2 - |R_i^x|*m_i + m_i^2)
    for (const auto& f : spec.factors) {
        Int u = f.unit_count();
        Int m = f.ideal_order;
        p1 *= u - m;
        p2 *= u * u - u * m + m * m;
    }
    if (target == CycleTarget::Unitary) {
        if (length == 3) return exact_div(r * n * p1, 6, "n_3(G_R)");
        return exact_div(r * n * (1 - 2 * r + p2), 8, "n_4(G_R)");
    }
    if (length == 3) return exact_div(r * n * (p1 + (r - 1) * (r - 2)), 6, "n_3(L)");
    return exact_div(r * n * (r * (r - 3) * (r - 3) - 5 + 4 * (r - 2) * p1 + p2), 8, "n_4(L)");
}

}  // namespace ucs
