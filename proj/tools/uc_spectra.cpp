#include "ucs/closed_spectra.hpp"
#include "ucs/energy_moments.hpp"
#include "ucs/oracle.hpp"
#include "ucs/ramanujan.hpp"
#include "ucs/ring_model.hpp"
#include "ucs/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ucs;

// Exit codes: 0 ok, 1 input error, 2 mismatch/verification failure, 3 internal.
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitInternal = 3;

std::string spectrum_table(const Spectrum& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i) os << "  ";
        os << s.entries[i].first << ":" << s.entries[i].second;
    }
    return os.str();
}

std::string verdict_table(const Verdict& v) {
    std::ostringstream os;
    os << (v.ramanujan ? "Ramanujan" : "not Ramanujan");
    if (v.case_label) os << " [" << *v.case_label << "]";
    if (v.witness) os << " (witness " << *v.witness << ")";
    if (v.vacuous) os << " (vacuous)";
    return os.str();
}

struct OracleCheck {
    long checked = 0;
    std::vector<std::string> mismatches;
};

OracleCheck oracle_cross_check(const RingSpec& spec, int moments_k) {
    OracleCheck res;
    auto g = cayley_graph(realize_ring(spec));
    auto comp = transform(g, Transform::Complement);
    auto line = transform(g, Transform::Line);

    auto check_spec = [&](const char* what, const Spectrum& closed, const Graph& graph) {
        ++res.checked;
        auto oracle = integral_spectrum(graph);
        if (!(closed == oracle))
            res.mismatches.push_back(std::string(what) + " spectrum: closed " + closed.to_json() +
                                     " != oracle " + oracle.to_json());
    };
    check_spec("unitary", spectrum_unitary(spec), g);
    check_spec("complement", spectrum_complement(spec), comp);
    check_spec("line", spectrum_line(spec), line);

    auto gm = exact_moments(g, moments_k);
    auto lm = exact_moments(line, moments_k);
    for (int k = 0; k <= moments_k; ++k) {
        ++res.checked;
        if (moment_unitary(spec, k) != gm[k])
            res.mismatches.push_back("s_" + std::to_string(k) + "(G) mismatch");
        ++res.checked;
        if (moment_line(spec, k) != lm[k])
            res.mismatches.push_back("s_" + std::to_string(k) + "(L) mismatch");
    }
    for (int len : {3, 4}) {
        ++res.checked;
        if (cycle_count(spec, CycleTarget::Unitary, len) != count_cycles(g, len))
            res.mismatches.push_back("n_" + std::to_string(len) + "(G) mismatch");
        ++res.checked;
        if (cycle_count(spec, CycleTarget::Line, len) != count_cycles(line, len))
            res.mismatches.push_back("n_" + std::to_string(len) + "(L) mismatch");
    }
    ++res.checked;
    if (line_energy(spec).energy != energy_of(integral_spectrum(line)))
        res.mismatches.push_back("line energy mismatch");
    return res;
}

int cmd_report(const std::string& ring_expr, const std::string& format, bool lax, bool oracle,
               int moments_k) {
    auto spec = parse_ring_expr(ring_expr, /*strict=*/!lax);

    auto su = spectrum_unitary(spec);
    auto sc = spectrum_complement(spec);
    auto sl = spectrum_line(spec);
    const Int comp_degree = spec.order - 1 - spec.unit_count;

    auto vu_thm = classify_unitary(spec);
    auto vu_dir = ramanujan_check(su, spec.unit_count);
    auto vc_thm = classify_complement(spec);
    auto vc_dir = ramanujan_check(sc, comp_degree);
    auto energy = line_energy(spec);

    OracleCheck oc;
    if (oracle) oc = oracle_cross_check(spec, moments_k);

    if (format == "table") {
        std::cout << "ring        " << render(spec) << "\n"
                  << "order       " << spec.order << "\n"
                  << "units       " << spec.unit_count << "\n"
                  << "factors     " << spec.s() << "\n"
                  << "spec(G)     " << spectrum_table(su) << "\n"
                  << "spec(comp)  " << spectrum_table(sc) << "\n"
                  << "spec(L)     " << spectrum_table(sl) << "\n"
                  << "G           " << verdict_table(vu_thm) << " / direct: " << verdict_table(vu_dir) << "\n"
                  << "complement  " << verdict_table(vc_thm) << " / direct: " << verdict_table(vc_dir) << "\n"
                  << "E(L)        " << energy.energy << " (branch " << energy.branch << ", "
                  << (energy.hyperenergetic_direct ? "hyperenergetic" : "not hyperenergetic") << ")\n";
        std::cout << "moments     G:";
        for (int k = 1; k <= moments_k; ++k) std::cout << " " << moment_unitary(spec, k);
        std::cout << "  L:";
        for (int k = 1; k <= moments_k; ++k) std::cout << " " << moment_line(spec, k);
        std::cout << "\ncycles      n3(G)=" << cycle_count(spec, CycleTarget::Unitary, 3)
                  << " n4(G)=" << cycle_count(spec, CycleTarget::Unitary, 4)
                  << " n3(L)=" << cycle_count(spec, CycleTarget::Line, 3)
                  << " n4(L)=" << cycle_count(spec, CycleTarget::Line, 4) << "\n";
        if (oracle)
            std::cout << "oracle      " << oc.checked << " checks, " << oc.mismatches.size()
                      << " mismatches\n";
        for (const auto& m : oc.mismatches) std::cout << "  MISMATCH " << m << "\n";
    } else {
        std::ostringstream os;
        os << "{\"ring\": \"" << render(spec) << "\""
           << ", \"order\": " << spec.order
           << ", \"unit_count\": " << spec.unit_count
           << ", \"s\": " << spec.s()
           << ", \"spectra\": {\"unitary\": " << su.to_json()
           << ", \"complement\": " << sc.to_json()
           << ", \"line\": " << sl.to_json() << "}"
           << ", \"verdicts\": {\"unitary\": {\"theorem\": " << vu_thm.to_json()
           << ", \"direct\": " << vu_dir.to_json() << "}"
           << ", \"complement\": {\"theorem\": " << vc_thm.to_json()
           << ", \"direct\": " << vc_dir.to_json() << "}}"
           << ", \"energy\": " << energy.to_json();
        os << ", \"moments\": {\"unitary\": [";
        for (int k = 0; k <= moments_k; ++k) os << (k ? ", " : "") << moment_unitary(spec, k);
        os << "], \"line\": [";
        for (int k = 0; k <= moments_k; ++k) os << (k ? ", " : "") << moment_line(spec, k);
        os << "]}";
        os << ", \"cycles\": {\"unitary\": {\"triangles\": " << cycle_count(spec, CycleTarget::Unitary, 3)
           << ", \"quadrangles\": " << cycle_count(spec, CycleTarget::Unitary, 4)
           << "}, \"line\": {\"triangles\": " << cycle_count(spec, CycleTarget::Line, 3)
           << ", \"quadrangles\": " << cycle_count(spec, CycleTarget::Line, 4) << "}}";
        if (oracle) {
            os << ", \"oracle\": {\"checked\": " << oc.checked << ", \"mismatches\": [";
            for (std::size_t i = 0; i < oc.mismatches.size(); ++i)
                os << (i ? ", " : "") << "\"" << oc.mismatches[i] << "\"";
            os << "]}";
        }
        os << "}";
        std::cout << os.str() << "\n";
    }
    return oc.mismatches.empty() ? kExitOk : kExitMismatch;
}

int cmd_enumerate(long max_order, const std::string& filter, bool zn_only) {
    std::cout << "ring,order,unit_count,s,ramanujan,case,complement_ramanujan,complement_case,"
                 "line_energy,hyperenergetic\n";
    std::vector<RingSpec> specs;
    if (zn_only) {
        for (long n = 2; n <= max_order; ++n) specs.push_back(from_modulus(n));
    } else {
        specs = enumerate_specs(max_order);
    }
    for (const auto& spec : specs) {
        auto vu = classify_unitary(spec);
        auto vc = classify_complement(spec);
        auto en = line_energy(spec);
        if (filter == "ramanujan" && !vu.ramanujan) continue;
        if (filter == "complement-ramanujan" && !vc.ramanujan) continue;
        if (filter == "hyperenergetic" && !en.hyperenergetic_direct) continue;
        std::cout << render(spec) << "," << spec.order << "," << spec.unit_count << "," << spec.s()
                  << "," << (vu.ramanujan ? "yes" : "no") << "," << vu.case_label.value_or("") << ","
                  << (vc.ramanujan ? "yes" : "no") << "," << vc.case_label.value_or("") << ","
                  << en.energy << "," << (en.hyperenergetic_direct ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, long max_order, long max_n, long oracle_max,
               bool strict_paper) {
    std::vector<SuiteResult> results;
    auto want = [&](const char* name) { return suite == "all" || suite == name; };

    if (want("spectra")) results.push_back(verify_spectra(max_order > 0 ? max_order : 64));
    if (want("moments")) results.push_back(verify_moments(max_order > 0 ? max_order : 64));
    if (want("ramanujan"))
        results.push_back(verify_ramanujan(max_order > 0 ? max_order : 5000, oracle_max));
    if (want("zn")) results.push_back(verify_zn(max_n > 0 ? max_n : 2000, 1000));
    if (want("energy")) {
        results.push_back(verify_energy(max_order > 0 ? max_order : 200, oracle_max));
        results.push_back(verify_hyper(max_order > 0 ? max_order : 200, oracle_max, strict_paper));
    }
    if (want("cycles")) results.push_back(verify_cycles(max_order > 0 ? max_order : 40));
    if (results.empty()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitInput;
    }

    bool ok = true;
    for (const auto& r : results) {
        print_suite(r, std::cout);
        ok = ok && r.ok();
    }
    return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectra, Ramanujan classification, energies and moments of unitary Cayley graphs of finite commutative rings"};
    app.require_subcommand(1);
    bool seed_free = true;
    app.add_flag("--seed-free", seed_free, "assert deterministic operation (always on; no randomness anywhere)");

    auto* report = app.add_subcommand("report", "full report for one ring");
    std::string ring_expr, format = "json";
    bool lax = false, oracle = false;
    int moments_k = 4;
    report->add_option("ring", ring_expr, "ring expression, e.g. \"Z/12\" or \"GF(3)[x]/x^2 * GF(5)\"")->required();
    report->add_option("--format", format, "json, table")->check(CLI::IsMember({"json", "table"}));
    report->add_flag("--lax", lax, "admit abstract local(o,m) descriptors that no finite local ring realizes");
    report->add_flag("--oracle", oracle, "cross-check every closed form against the brute-force graph");
    report->add_option("--moments", moments_k, "largest moment index to report")->check(CLI::Range(0, 64));

    auto* enumerate = app.add_subcommand("enumerate", "CSV of all rings up to an order bound");
    long max_order = 0;
    std::string filter = "all";
    bool zn_only = false;
    enumerate->add_option("--max", max_order, "largest ring order")->required()->check(CLI::Range(2L, 1000000L));
    enumerate->add_option("--filter", filter, "all, ramanujan, complement-ramanujan, hyperenergetic")
        ->check(CLI::IsMember({"all", "ramanujan", "complement-ramanujan", "hyperenergetic"}));
    enumerate->add_flag("--zn-only", zn_only, "only rings Z/n");

    auto* verify = app.add_subcommand("verify", "closed forms versus oracle and corollaries");
    std::string suite = "all";
    long v_max_order = 0, v_max_n = 0, v_oracle_max = 0;
    bool strict_paper = false;
    verify->add_option("--suite", suite, "spectra, moments, ramanujan, energy, cycles, zn, all")
        ->check(CLI::IsMember({"spectra", "moments", "ramanujan", "energy", "cycles", "zn", "all"}));
    verify->add_option("--max-order", v_max_order, "override the suite's ring-order bound");
    verify->add_option("--max", v_max_n, "override the zn suite's modulus bound");
    verify->add_option("--oracle-max", v_oracle_max, "order bound for oracle cross-checks");
    verify->add_flag("--strict-paper", strict_paper,
                     "treat hyperenergetic-corollary disagreements as failures");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*report) return cmd_report(ring_expr, format, lax, oracle, moments_k);
        if (*enumerate) return cmd_enumerate(max_order, filter, zn_only);
        if (*verify)
            return cmd_verify(suite, v_max_order, v_max_n, v_oracle_max > 0 ? v_oracle_max : (suite == "ramanujan" || suite == "all" || suite == "spectra" || suite == "moments" ? 64 : 40), strict_paper);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const NotPrimePower& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const NotRealizable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const EmptyProduct& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const SizeGuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
