#ifndef UVB_GEOMPOLY_HPP
#define UVB_GEOMPOLY_HPP

#include <array>
#include <map>

#include "uvb/coefpoly.hpp"

namespace uvb {

// Exponents of T, U, V.
using Exps = std::array<unsigned, 3>;

// Polynomial in the geometric variables T, U, V whose coefficients are
// integer polynomials in the unknowns of a constraint system. This is the
// carrier for every Chern computation; all operations are pure.
class GeomPoly {
public:
    GeomPoly() = default;
    explicit GeomPoly(Int c);
    static GeomPoly T(unsigned e = 1);
    static GeomPoly U(unsigned e = 1);
    static GeomPoly V(unsigned e = 1);
    static GeomPoly term(unsigned t, unsigned u, unsigned v, CoefPoly c);

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const GeomPoly& o) const { return terms_ == o.terms_; }

    GeomPoly operator-() const;
    GeomPoly operator+(const GeomPoly& o) const;
    GeomPoly operator-(const GeomPoly& o) const;
    GeomPoly operator*(const GeomPoly& o) const;
    GeomPoly& operator+=(const GeomPoly& o);
    GeomPoly& operator-=(const GeomPoly& o);
    GeomPoly operator*(const CoefPoly& c) const;
    GeomPoly operator*(const Int& c) const;

    // substitution T <- T + c*U
    GeomPoly shift_T(const Int& c) const;

    GeomPoly eval_unknowns(const std::vector<std::optional<Int>>& assignment,
                           bool partial) const;

    const CoefPoly& coefficient_of(unsigned t, unsigned u, unsigned v) const;

    unsigned deg_T() const;
    unsigned deg_U() const;
    unsigned deg_V() const;
    bool is_V_free() const;
    // true when no coefficient involves an unknown
    bool is_numeric() const;

    const std::map<Exps, CoefPoly>& terms() const { return terms_; }
    void set(const Exps& e, CoefPoly c);
    void add_term(const Exps& e, const CoefPoly& c);

    // paper-style rendering: T powers descending, UV coefficients grouped,
    // e.g. "T^2+(U-V)T-UV"
    std::string to_string(const std::vector<Unknown>& names = {}) const;

private:
    std::map<Exps, CoefPoly> terms_;  // no zero entries stored
};

}  // namespace uvb

#endif
