#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ucs {

// All ring/spectral quantities are exact; cpp_int keeps every product and
// power overflow-free.
using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPrimePower : Error {
    explicit NotPrimePower(const std::string& msg) : Error(msg) {}
};

struct NotRealizable : Error {
    explicit NotRealizable(const std::string& msg) : Error(msg) {}
};

struct EmptyProduct : Error {
    explicit EmptyProduct(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

struct DegreeAbsent : Error {
    explicit DegreeAbsent(const std::string& msg) : Error(msg) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};

struct NotIntegral : Error {
    explicit NotIntegral(const std::string& msg) : Error(msg) {}
};

struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& msg) : Error(msg) {}
};

struct SizeGuardExceeded : Error {
    explicit SizeGuardExceeded(const std::string& msg) : Error(msg) {}
};

inline Int int_pow(Int base, unsigned long exp) {
    Int result = 1;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

// Exact division; throws if the divisor does not divide the dividend.
inline Int exact_div(const Int& num, const Int& den, const char* what) {
    if (den == 0 || num % den != 0)
        throw InternalInconsistency(std::string("non-exact division in ") + what);
    return num / den;
}

}  // namespace ucs
