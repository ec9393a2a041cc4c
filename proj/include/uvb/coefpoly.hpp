#ifndef UVB_COEFPOLY_HPP
#define UVB_COEFPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uvb/numeric.hpp"

namespace uvb {

// A named unknown of a constraint system. Ids are dense indices into the
// owning system's unknown list and stay stable for its lifetime.
struct Unknown {
    std::string name;
    int id = 0;
};

// Exponent vector over unknowns, sparse and sorted by variable id.
class Monomial {
public:
    using Entry = std::pair<uint32_t, uint32_t>;  // (var id, exponent > 0)

    Monomial() = default;
    static Monomial var(uint32_t v, uint32_t e = 1);

    bool empty() const { return entries_.empty(); }
    unsigned degree() const;
    unsigned degree_in(uint32_t v) const;
    bool contains(uint32_t v) const { return degree_in(v) > 0; }

    Monomial operator*(const Monomial& o) const;
    // graded order: total degree first, then entry-wise; any fixed total
    // order works, it only pins the canonical form
    bool operator<(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return entries_ == o.entries_; }

    const std::vector<Entry>& entries() const { return entries_; }
    Monomial without(uint32_t v) const;
    // true if o divides this
    bool divisible_by(const Monomial& o) const;
    Monomial divide_by(const Monomial& o) const;

private:
    std::vector<Entry> entries_;
};

struct MissingAssignment : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class CoefPoly;

// decomposition c*var + rest with constant c and var absent from rest
struct LinearView {
    uint32_t var;
    Int coef;
    std::vector<std::pair<Monomial, Int>> rest;
};

// Polynomial with exact integer coefficients in the unknowns of one system.
class CoefPoly {
public:
    CoefPoly() = default;
    explicit CoefPoly(Int c);
    static CoefPoly variable(uint32_t v);
    static CoefPoly monomial(Monomial m, Int c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Int& constant_term() const;
    size_t term_count() const { return terms_.size(); }

    CoefPoly operator-() const;
    CoefPoly operator+(const CoefPoly& o) const;
    CoefPoly operator-(const CoefPoly& o) const;
    CoefPoly operator*(const CoefPoly& o) const;
    CoefPoly& operator+=(const CoefPoly& o);
    CoefPoly& operator-=(const CoefPoly& o);
    CoefPoly operator*(const Int& c) const;
    bool operator==(const CoefPoly& o) const { return terms_ == o.terms_; }

    unsigned degree() const;
    unsigned degree_in(uint32_t v) const;
    bool contains(uint32_t v) const;
    std::vector<uint32_t> variables() const;

    // substitute variable v by a polynomial free of v
    CoefPoly substitute(uint32_t v, const CoefPoly& value) const;
    CoefPoly substitute(uint32_t v, const Int& value) const;

    // evaluate; with partial=false every variable present must be assigned
    // (MissingAssignment otherwise), with partial=true unassigned variables
    // survive symbolically
    CoefPoly evaluate(const std::vector<std::optional<Int>>& assignment,
                      bool partial) const;
    Int evaluate_total(const std::vector<Int>& assignment) const;

    // view as univariate in v: coefficient of v^d for d = 0..deg
    std::vector<CoefPoly> univariate_in(uint32_t v) const;
    // if this = c*v + rest with constant c and v absent from rest
    std::optional<LinearView> isolate_linear(uint32_t v) const;
    static CoefPoly from_terms(const std::vector<std::pair<Monomial, Int>>& ts);

    Int content() const;  // gcd of coefficients, 0 for the zero polynomial
    // exact division; throws std::domain_error when not divisible
    CoefPoly divide_exact(const CoefPoly& d) const;

    std::string to_string(const std::vector<Unknown>& names) const;

    const std::map<Monomial, Int>& terms() const { return terms_; }

private:
    void insert(const Monomial& m, Int c);
    std::map<Monomial, Int> terms_;  // no zero coefficients stored
};

}  // namespace uvb

#endif
