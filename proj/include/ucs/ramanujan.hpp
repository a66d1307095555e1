#pragma once

#include "ucs/ring_model.hpp"
#include "ucs/spectrum.hpp"

#include <optional>
#include <string>

namespace ucs {

enum class GraphKind { Unitary, Complement };

struct Verdict {
    bool ramanujan = false;
    enum class Method { Direct, Theorem } method = Method::Direct;
    std::optional<std::string> case_label;  // theorem case when classified Ramanujan
    std::optional<Int> witness;             // violating eigenvalue (direct method, false)
    Int degree = 0;
    bool vacuous = false;  // no eigenvalue other than +-degree existed

    std::string to_json() const;
};

// Direct definition: every eigenvalue other than +-degree must satisfy
// lambda^2 <= 4(degree - 1). Exact integers throughout.
Verdict ramanujan_check(const Spectrum& spectrum, const Int& degree);

// Classification-theorem route for G_R; returns the first matching case.
Verdict classify_unitary(const RingSpec& spec);

// Classification-theorem route for the complement of G_R.
Verdict classify_complement(const RingSpec& spec);

// Number-theoretic corollary conditions on n, evaluated independently of
// classify_unitary/classify_complement.
Verdict classify_zn(const Int& n, GraphKind which);

}  // namespace ucs
