#include "ucs/spectrum.hpp"

#include <sstream>

namespace ucs {

Spectrum Spectrum::from_map(const std::map<Int, Int>& acc, const Int& order) {
    Spectrum s;
    s.order = order;
    Int total = 0;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
        if (it->second < 0)
            throw InternalInconsistency("negative multiplicity for eigenvalue " + it->first.str());
        if (it->second == 0) continue;
        s.entries.emplace_back(it->first, it->second);
        total += it->second;
    }
    if (total != order)
        throw InternalInconsistency("spectrum multiplicities sum to " + total.str() +
                                    ", expected " + order.str());
    return s;
}

Int Spectrum::multiplicity_of(const Int& value) const {
    for (const auto& [v, m] : entries)
        if (v == value) return m;
    return 0;
}

Int Spectrum::trace() const { return power_sum(1); }

Int Spectrum::power_sum(int k) const {
    Int sum = 0;
    for (const auto& [v, m] : entries) sum += int_pow(v, static_cast<unsigned long>(k)) * m;
    return sum;
}

Int Spectrum::abs_sum() const {
    Int sum = 0;
    for (const auto& [v, m] : entries) sum += abs(v) * m;
    return sum;
}

std::vector<std::pair<Int, Int>> Spectrum::without(const Int& degree) const {
    std::vector<std::pair<Int, Int>> rest;
    for (const auto& e : entries)
        if (e.first != degree && e.first != -degree) rest.push_back(e);
    return rest;
}

std::string Spectrum::to_json() const {
    std::ostringstream os;
    os << "{\"order\": " << order << ", \"entries\": [";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ", ";
        os << "[" << entries[i].first << ", " << entries[i].second << "]";
    }
    os << "]}";
    return os.str();
}

std::string Spectrum::to_csv() const {
    std::ostringstream os;
    os << "value,mult\n";
    for (const auto& [v, m] : entries) os << v << "," << m << "\n";
    return os.str();
}

}  // namespace ucs
