#pragma once

#include "ucs/common.hpp"

#include <string>
#include <vector>

namespace ucs {

struct SuiteResult {
    std::string name;
    long checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> findings;  // reported discrepancies that are not failures

    bool ok() const { return failures.empty(); }
};

// Closed-form spectra versus oracle integral spectra, every strict spec with
// |R| <= max_order, for G_R, its complement and its line graph.
SuiteResult verify_spectra(long max_order);

// Closed-form moments versus traces of adjacency powers, k = 0..kmax.
SuiteResult verify_moments(long max_order, int kmax = 8);

// Theorem classification versus the direct spectral check (closed spectra up
// to max_order, oracle spectra up to oracle_max).
SuiteResult verify_ramanujan(long max_order = 5000, long oracle_max = 64);

// classify_zn versus classify_unitary/classify_complement for all n <= max_n,
// plus the explicit complement-Ramanujan set up to set_max.
SuiteResult verify_zn(long max_n = 2000, long set_max = 1000);

// Theorem line-graph energies versus spectral sums (<= max_order) and oracle
// energies (<= oracle_max).
SuiteResult verify_energy(long max_order = 200, long oracle_max = 40);

// Closed-form triangle/quadrangle counts versus brute-force counts.
SuiteResult verify_cycles(long max_order = 40);

// Hyperenergetic audit: direct threshold versus the paper's corollary; any
// disagreement is recorded as a finding (or a failure when strict_paper).
SuiteResult verify_hyper(long max_order = 200, long oracle_max = 40, bool strict_paper = false);

// |R^x| = 1 rings end-to-end without error.
SuiteResult verify_degenerate();

void print_suite(const SuiteResult& result, std::ostream& os, std::size_t max_failures = 10);

}  // namespace ucs
