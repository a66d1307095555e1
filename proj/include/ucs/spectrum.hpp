#pragma once

#include "ucs/common.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ucs {

// Exact integer spectrum: (eigenvalue, multiplicity) pairs, values strictly
// decreasing, multiplicities summing to the vertex count.
struct Spectrum {
    std::vector<std::pair<Int, Int>> entries;
    Int order;

    // Builds a merged spectrum from an accumulator map; drops zero
    // multiplicities and rejects negative ones.
    static Spectrum from_map(const std::map<Int, Int>& acc, const Int& order);

    Int multiplicity_of(const Int& value) const;
    Int trace() const;
    Int power_sum(int k) const;       // sum of value^k * mult
    Int abs_sum() const;              // sum of |value| * mult == graph energy
    // Largest |value| over entries with value not in {degree, -degree};
    // nullopt when nothing remains.
    std::vector<std::pair<Int, Int>> without(const Int& degree) const;

    std::string to_json() const;
    std::string to_csv() const;

    friend bool operator==(const Spectrum& a, const Spectrum& b) {
        return a.order == b.order && a.entries == b.entries;
    }
};

}  // namespace ucs
