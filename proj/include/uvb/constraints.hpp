#ifndef UVB_CONSTRAINTS_HPP
#define UVB_CONSTRAINTS_HPP

#include <stdexcept>

#include "uvb/chow.hpp"
#include "uvb/splitting.hpp"

namespace uvb {

struct ReducibleType : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Symmetric degree-d basis {U^a V^b + U^b V^a (a > b), U^{d/2} V^{d/2}},
// with the kernel of the normal-form map deleted for d >= n (gauge fixing).
// Without the gauge the solution sets are infinite along R^n multiples.
struct SymmetricBasis {
    std::vector<GeomPoly> retained;
    std::vector<GeomPoly> deleted;  // echelon pivot directions, in order
    size_t full_size = 0;
};

SymmetricBasis symmetric_basis(unsigned d, unsigned n);

// Total Chern class data on P^n: c[i] is the coefficient of h^i.
struct ChernVector {
    unsigned n = 0;
    int rank = 0;
    std::vector<Int> c;  // c[0] = 1, length min(rank, n) + 1
    bool operator==(const ChernVector&) const = default;
};

struct UnknownSlot {
    Unknown unknown;
    int factor;       // 0-based factor index
    unsigned degree;  // coefficient degree d in U,V
    unsigned index;   // position within the retained degree-d basis
    GeomPoly basis;   // the symmetric basis element it multiplies
};

struct Equation {
    Exps source;  // basis monomial T^a U^b V^c (c >= 1) it came from
    CoefPoly poly;
};

// The gauge-fixed factor ansatz for a splitting type together with the
// integer equations expressing that the reduced factor product is V-free.
class ConstraintSystem {
public:
    const SplittingType& type() const { return st_; }
    unsigned dimension() const { return n_; }
    const std::vector<UnknownSlot>& unknowns() const { return slots_; }
    size_t unknown_count() const { return slots_.size(); }
    const std::vector<Equation>& equations() const { return equations_; }
    // symmetric factor S_i(T,U,V), monic of degree r_i, before the T shift
    const std::vector<GeomPoly>& factors() const { return factors_; }
    // normal form of prod_i S_i(T + u_i U, U, V)
    const GeomPoly& reduced_product() const { return reduced_; }

    std::vector<std::string> unknown_names() const;
    int unknown_id(int factor, unsigned degree, unsigned index) const;

    bool check_solution(const std::vector<Int>& tuple) const;
    // Chern classes read off the V-free reduced product; throws
    // InvalidSolution when the tuple is not a solution.
    ChernVector residual_chern(const std::vector<Int>& tuple) const;
    GeomPoly product_at(const std::vector<Int>& tuple) const;

    friend ConstraintSystem build_system(const SplittingType& st, unsigned n);

private:
    SplittingType st_;
    unsigned n_ = 4;
    std::vector<UnknownSlot> slots_;
    std::vector<GeomPoly> factors_;
    GeomPoly reduced_;
    std::vector<Equation> equations_;
};

// Throws ReducibleType when the type has a twist gap >= 2 (such a bundle is
// an extension of two smaller uniform bundles and is handled case-wise).
ConstraintSystem build_system(const SplittingType& st, unsigned n);

// Tuple for the dual type: factors reversed, degree-d coordinates scaled by
// (-1)^d. Maps solutions to solutions.
std::vector<Int> transform_solution(const ConstraintSystem& sys,
                                    const std::vector<Int>& tuple);

}  // namespace uvb

#endif
