#ifndef UVB_CHOW_HPP
#define UVB_CHOW_HPP

#include "uvb/geompoly.hpp"

namespace uvb {

// Reduction modulo the ideal <R^n(U,V), U^{n+1}> presenting the Chow ring of
// the flag variety F(1,2,n+1), where R^n(U,V) = sum_{k=0}^{n} U^k V^{n-k}.
// T never participates in the relations; reduction acts per T power.

// A GeomPoly in normal form: deg_V <= n-1 and deg_U <= n in every monomial.
struct ChowElement {
    unsigned n;
    GeomPoly value;
};

// Rewrites V^n -> -(U V^{n-1} + ... + U^n) to exhaustion, then deletes all
// monomials with deg_U >= n+1. Requires n >= 1.
ChowElement normal_form(const GeomPoly& p, unsigned n);

bool chow_equal(const GeomPoly& a, const GeomPoly& b, unsigned n);

// The monomial basis {U^i V^j : 0 <= i <= n, 0 <= j <= n-1} of the quotient,
// in canonical (i, j) order; n(n+1) elements.
std::vector<std::pair<unsigned, unsigned>> chow_basis(unsigned n);

// R^n(U,V) itself, handy for tests and gauge computations.
GeomPoly chow_relation(unsigned n);

}  // namespace uvb

#endif
