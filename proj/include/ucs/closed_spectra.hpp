#pragma once

#include "ucs/ring_model.hpp"
#include "ucs/spectrum.hpp"

#include <cstddef>
#include <vector>

namespace ucs {

// Signed eigenvalue of G_R indexed by a subset of local factors (0-based
// indices): (-1)^|C| * |R^x| / prod_{j in C} (residue_j - 1). Always exact.
Int lambda_c(const RingSpec& spec, const std::vector<std::size_t>& subset);

// Exact spectrum of the unitary Cayley graph G_R.
Spectrum spectrum_unitary(const RingSpec& spec);

// Exact spectrum of the complement of G_R.
Spectrum spectrum_complement(const RingSpec& spec);

// Exact spectrum of the line graph of G_R. |R^x| = 1 gives the edgeless graph
// on |R|/2 vertices; |R^x| = 2 has an empty -2 block.
Spectrum spectrum_line(const RingSpec& spec);

}  // namespace ucs
