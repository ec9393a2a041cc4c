#ifndef UVB_NUMERIC_HPP
#define UVB_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace uvb {

// All coefficient arithmetic is exact. Intermediate products in the factor
// ansatz grow combinatorially, so fixed-width integers are never used for
// polynomial data.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int pow_int(const Int& base, unsigned e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace uvb

#endif
