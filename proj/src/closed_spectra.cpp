#include "ucs/closed_spectra.hpp"

#include <map>

namespace ucs {

namespace {

// residue_j - 1 == |R_j^x| / m_j
Int unit_ratio(const LocalRingSpec& f) { return f.residue - 1; }

// Accumulates (lambda_C shifted by `shift`, with sign flip when `negate`)
// over every subset C described by `include_empty`/`nonempty_only`.
// mult(C) = prod_{j in C} (residue_j - 1).
template <typename Fn>
void for_each_subset(const RingSpec& spec, Fn&& fn) {
    const std::size_t s = spec.factors.size();
    // s <= log2(|R|), so 2^s <= |R|.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        Int denom = 1;
        Int mult = 1;
        int parity = 0;
        for (std::size_t j = 0; j < s; ++j) {
            if (mask & (std::uint64_t{1} << j)) {
                denom *= unit_ratio(spec.factors[j]);
                mult *= unit_ratio(spec.factors[j]);
                parity ^= 1;
            }
        }
        Int value = exact_div(spec.unit_count, denom, "lambda_C");
        if (parity) value = -value;
        fn(mask, value, mult);
    }
}

// |R| - prod residue_i, the multiplicity of the 0 eigenvalue of G_R.
Int zero_block(const RingSpec& spec) {
    Int prod = 1;
    for (const auto& f : spec.factors) prod *= f.residue;
    return spec.order - prod;
}

}  // namespace

Int lambda_c(const RingSpec& spec, const std::vector<std::size_t>& subset) {
    Int denom = 1;
    int parity = 0;
    std::vector<bool> seen(spec.factors.size(), false);
    for (std::size_t j : subset) {
        if (j >= spec.factors.size())
            throw IndexOutOfRange("factor index " + std::to_string(j) + " out of range for s = " +
                                  std::to_string(spec.factors.size()));
        if (seen[j]) continue;
        seen[j] = true;
        denom *= unit_ratio(spec.factors[j]);
        parity ^= 1;
    }
    Int value = exact_div(spec.unit_count, denom, "lambda_C");
    return parity ? -value : value;
}

Spectrum spectrum_unitary(const RingSpec& spec) {
    std::map<Int, Int> acc;
    for_each_subset(spec, [&](std::uint64_t, const Int& value, const Int& mult) {
        acc[value] += mult;
    });
    acc[0] += zero_block(spec);
    return Spectrum::from_map(acc, spec.order);
}

Spectrum spectrum_complement(const RingSpec& spec) {
    std::map<Int, Int> acc;
    acc[spec.order - 1 - spec.unit_count] += 1;
    for_each_subset(spec, [&](std::uint64_t mask, const Int& value, const Int& mult) {
        if (mask == 0) return;  // the empty set is replaced by |R|-1-|R^x|
        acc[-value - 1] += mult;
    });
    acc[-1] += zero_block(spec);
    return Spectrum::from_map(acc, spec.order);
}

Spectrum spectrum_line(const RingSpec& spec) {
    const Int r = spec.unit_count;
    if (r < 1) throw Error("line graph needs |R^x| >= 1");
    const Int line_order = exact_div(spec.order * r, 2, "line graph order");
    if (r == 1) {
        // G_R is a perfect matching; its line graph is |R|/2 isolated vertices.
        std::map<Int, Int> acc;
        acc[0] = line_order;
        return Spectrum::from_map(acc, line_order);
    }
    std::map<Int, Int> acc;
    for_each_subset(spec, [&](std::uint64_t, const Int& value, const Int& mult) {
        acc[value + r - 2] += mult;
    });
    acc[r - 2] += zero_block(spec);
    if (r > 2) acc[-2] += exact_div(spec.order * (r - 2), 2, "-2 block");
    return Spectrum::from_map(acc, line_order);
}

}  // namespace ucs
