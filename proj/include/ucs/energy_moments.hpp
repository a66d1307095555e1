#pragma once

#include "ucs/ring_model.hpp"
#include "ucs/spectrum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ucs {

struct EnergyReport {
    Int energy;
    std::string branch;  // "all-residue-2-or-F2..F2xF3", "mixed-t", "all-residue-ge-3"
    Int line_order;      // |R| * |R^x| / 2
    bool hyperenergetic_direct = false;     // energy > 2*(line_order - 1)
    bool hyperenergetic_corollary = false;  // paper's case analysis, kept separate
    std::optional<std::string> corollary_case;

    std::string to_json() const;
};

Int energy_of(const Spectrum& spectrum);

// Piecewise closed form for the energy of the line graph of G_R, plus both
// hyperenergetic predicates. The direct threshold is authoritative; the
// corollary evaluation is reported alongside, never merged.
EnergyReport line_energy(const RingSpec& spec);

// k-th spectral moment of G_R; k = 0 returns |R|.
Int moment_unitary(const RingSpec& spec, int k);

// k-th spectral moment of the line graph of G_R.
Int moment_line(const RingSpec& spec, int k);

// Line-graph moment of any r-regular graph of order n from its base moments
// s_0..s_k (extra trailing entries are ignored; fewer than k+1 is an error).
Int generic_line_moment(const Int& n, const Int& r, const std::vector<Int>& base_moments, int k);

enum class CycleTarget { Unitary, Line };

// Closed-form triangle (length 3) and quadrangle (length 4) counts.
Int cycle_count(const RingSpec& spec, CycleTarget target, int length);

}  // namespace ucs
