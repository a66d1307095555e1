#include "ucs/verify.hpp"

#include "ucs/closed_spectra.hpp"
#include "ucs/energy_moments.hpp"
#include "ucs/oracle.hpp"
#include "ucs/ramanujan.hpp"
#include "ucs/ring_model.hpp"

#include <ostream>
#include <sstream>

namespace ucs {

namespace {

std::string spectrum_str(const Spectrum& s) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i) os << ", ";
        os << s.entries[i].first << ":" << s.entries[i].second;
    }
    os << "}";
    return os.str();
}

}  // namespace

SuiteResult verify_spectra(long max_order) {
    SuiteResult res{"spectra"};
    for (const auto& spec : enumerate_specs(max_order)) {
        auto ring = realize_ring(spec);
        auto g = cayley_graph(ring);

        struct Pair {
            const char* what;
            Spectrum closed;
            Spectrum oracle;
        };
        std::vector<Pair> pairs;
        pairs.push_back({"unitary", spectrum_unitary(spec), integral_spectrum(g)});
        pairs.push_back(
            {"complement", spectrum_complement(spec), integral_spectrum(transform(g, Transform::Complement))});
        pairs.push_back({"line", spectrum_line(spec), integral_spectrum(transform(g, Transform::Line))});

        for (const auto& p : pairs) {
            ++res.checked;
            if (!(p.closed == p.oracle))
                res.failures.push_back(render(spec) + " " + p.what + ": closed " +
                                       spectrum_str(p.closed) + " != oracle " +
                                       spectrum_str(p.oracle));
        }
    }
    return res;
}

SuiteResult verify_moments(long max_order, int kmax) {
    SuiteResult res{"moments"};
    for (const auto& spec : enumerate_specs(max_order)) {
        auto ring = realize_ring(spec);
        auto g = cayley_graph(ring);
        auto gm = exact_moments(g, kmax);
        auto lm = exact_moments(transform(g, Transform::Line), kmax);
        for (int k = 0; k <= kmax; ++k) {
            ++res.checked;
            Int cu = moment_unitary(spec, k);
            if (cu != gm[k])
                res.failures.push_back(render(spec) + " s_" + std::to_string(k) + "(G): closed " +
                                       cu.str() + " != oracle " + gm[k].str());
            ++res.checked;
            Int cl = moment_line(spec, k);
            if (cl != lm[k])
                res.failures.push_back(render(spec) + " s_" + std::to_string(k) + "(L): closed " +
                                       cl.str() + " != oracle " + lm[k].str());
        }
    }
    return res;
}

namespace {

void check_agreement(SuiteResult& res, const std::string& ring, const char* what,
                     const Verdict& theorem, const Verdict& direct) {
    ++res.checked;
    if (theorem.ramanujan != direct.ramanujan) {
        std::ostringstream os;
        os << ring << " " << what << ": theorem says " << (theorem.ramanujan ? "yes" : "no")
           << " (case " << theorem.case_label.value_or("-") << "), direct says "
           << (direct.ramanujan ? "yes" : "no");
        if (direct.witness) os << " (witness " << *direct.witness << ")";
        res.failures.push_back(os.str());
    }
}

}  // namespace

SuiteResult verify_ramanujan(long max_order, long oracle_max) {
    SuiteResult res{"ramanujan"};
    for (const auto& spec : enumerate_specs(max_order)) {
        const std::string name = render(spec);
        const Int comp_degree = spec.order - 1 - spec.unit_count;

        auto unitary_closed = ramanujan_check(spectrum_unitary(spec), spec.unit_count);
        check_agreement(res, name, "unitary", classify_unitary(spec), unitary_closed);
        auto comp_closed = ramanujan_check(spectrum_complement(spec), comp_degree);
        check_agreement(res, name, "complement", classify_complement(spec), comp_closed);

        if (spec.order <= oracle_max) {
            auto g = cayley_graph(realize_ring(spec));
            auto unitary_oracle =
                ramanujan_check(integral_spectrum(g), spec.unit_count);
            check_agreement(res, name, "unitary(oracle)", classify_unitary(spec), unitary_oracle);
            auto comp_oracle = ramanujan_check(
                integral_spectrum(transform(g, Transform::Complement)), comp_degree);
            check_agreement(res, name, "complement(oracle)", classify_complement(spec), comp_oracle);
        }
    }
    return res;
}

SuiteResult verify_zn(long max_n, long set_max) {
    SuiteResult res{"zn"};
    for (long n = 2; n <= max_n; ++n) {
        auto spec = from_modulus(n);
        check_agreement(res, "Z/" + std::to_string(n), "unitary", classify_zn(n, GraphKind::Unitary),
                        classify_unitary(spec));
        check_agreement(res, "Z/" + std::to_string(n), "complement",
                        classify_zn(n, GraphKind::Complement), classify_complement(spec));
    }
    // Explicit complement-Ramanujan set: prime powers plus nine sporadic n.
    static const long sporadic[] = {6, 10, 12, 15, 18, 21, 24, 30, 35};
    for (long n = 2; n <= set_max; ++n) {
        ++res.checked;
        bool expected = prime_power_split(n).has_value();
        for (long m : sporadic) expected = expected || n == m;
        bool got = classify_complement(from_modulus(n)).ramanujan;
        if (got != expected)
            res.failures.push_back("Z/" + std::to_string(n) + " complement: got " +
                                   (got ? "Ramanujan" : "not Ramanujan") + ", expected " +
                                   (expected ? "Ramanujan" : "not Ramanujan"));
    }
    return res;
}

SuiteResult verify_energy(long max_order, long oracle_max) {
    SuiteResult res{"energy"};
    for (const auto& spec : enumerate_specs(max_order)) {
        auto rep = line_energy(spec);
        ++res.checked;
        Int from_spectrum = energy_of(spectrum_line(spec));
        if (rep.energy != from_spectrum)
            res.failures.push_back(render(spec) + ": theorem energy " + rep.energy.str() +
                                   " != spectral sum " + from_spectrum.str());
        if (spec.order <= oracle_max) {
            ++res.checked;
            auto line = transform(cayley_graph(realize_ring(spec)), Transform::Line);
            Int from_oracle = energy_of(integral_spectrum(line));
            if (rep.energy != from_oracle)
                res.failures.push_back(render(spec) + ": theorem energy " + rep.energy.str() +
                                       " != oracle energy " + from_oracle.str());
        }
    }
    return res;
}

SuiteResult verify_cycles(long max_order) {
    SuiteResult res{"cycles"};
    for (const auto& spec : enumerate_specs(max_order)) {
        auto g = cayley_graph(realize_ring(spec));
        auto line = transform(g, Transform::Line);
        struct Case {
            CycleTarget target;
            const Graph* graph;
            const char* what;
            int length;
        };
        const Case cases[] = {
            {CycleTarget::Unitary, &g, "n_3(G)", 3},
            {CycleTarget::Unitary, &g, "n_4(G)", 4},
            {CycleTarget::Line, &line, "n_3(L)", 3},
            {CycleTarget::Line, &line, "n_4(L)", 4},
        };
        for (const auto& c : cases) {
            ++res.checked;
            Int closed = cycle_count(spec, c.target, c.length);
            Int oracle = count_cycles(*c.graph, c.length);
            if (closed != oracle)
                res.failures.push_back(render(spec) + " " + c.what + ": closed " + closed.str() +
                                       " != oracle " + oracle.str());
        }
    }
    return res;
}

SuiteResult verify_hyper(long max_order, long oracle_max, bool strict_paper) {
    SuiteResult res{"hyper"};
    for (const auto& spec : enumerate_specs(max_order)) {
        auto rep = line_energy(spec);
        ++res.checked;
        if (spec.order <= oracle_max) {
            auto line = transform(cayley_graph(realize_ring(spec)), Transform::Line);
            Int from_oracle = energy_of(integral_spectrum(line));
            if (rep.energy != from_oracle) {
                res.failures.push_back(render(spec) + ": energy " + rep.energy.str() +
                                       " not confirmed by oracle (" + from_oracle.str() + ")");
                continue;
            }
        }
        if (rep.hyperenergetic_direct != rep.hyperenergetic_corollary) {
            std::ostringstream os;
            os << render(spec) << ": direct says " << (rep.hyperenergetic_direct ? "hyper" : "not hyper")
               << " (E = " << rep.energy << ", 2(n-1) = " << 2 * (rep.line_order - 1)
               << "), corollary case " << rep.corollary_case.value_or("-") << " says "
               << (rep.hyperenergetic_corollary ? "hyper" : "not hyper");
            (strict_paper ? res.failures : res.findings).push_back(os.str());
        }
    }
    return res;
}

SuiteResult verify_degenerate() {
    SuiteResult res{"degenerate"};
    for (const char* expr : {"GF(2)", "GF(2) * GF(2)"}) {
        ++res.checked;
        try {
            auto spec = parse_ring_expr(expr);
            auto su = spectrum_unitary(spec);
            auto sl = spectrum_line(spec);
            auto rep = line_energy(spec);
            auto vu = classify_unitary(spec);
            auto vc = classify_complement(spec);
            auto g = cayley_graph(realize_ring(spec));
            auto line = transform(g, Transform::Line);
            bool ok = su == integral_spectrum(g) && sl == integral_spectrum(line) &&
                      rep.energy == 0 && vu.ramanujan &&
                      ramanujan_check(su, spec.unit_count).vacuous && vc.ramanujan;
            if (!ok) res.failures.push_back(std::string(expr) + ": degenerate pipeline mismatch");
        } catch (const std::exception& e) {
            res.failures.push_back(std::string(expr) + ": threw " + e.what());
        }
    }
    return res;
}

void print_suite(const SuiteResult& result, std::ostream& os, std::size_t max_failures) {
    os << "suite " << result.name << ": checked " << result.checked << ", "
       << result.failures.size() << " failures";
    if (!result.findings.empty()) os << ", " << result.findings.size() << " findings";
    os << "\n";
    for (std::size_t i = 0; i < result.failures.size() && i < max_failures; ++i)
        os << "  FAIL " << result.failures[i] << "\n";
    if (result.failures.size() > max_failures)
        os << "  ... " << result.failures.size() - max_failures << " more\n";
    for (const auto& f : result.findings) os << "  finding: " << f << "\n";
}

}  // namespace ucs
