#ifndef UVB_SOLVER_HPP
#define UVB_SOLVER_HPP

#include <cstdint>

#include "uvb/constraints.hpp"

namespace uvb {

struct SolverConfig {
    long long bound = 200;  // coordinate box [-bound, bound]
    enum class Strategy { dfs, elim, hybrid } strategy = Strategy::hybrid;
    size_t max_solutions = 10000;
};

enum class Completeness { box_bounded, elimination_complete };

struct SolverStats {
    uint64_t nodes = 0;
    double seconds = 0.0;
};

struct SolutionSet {
    std::vector<std::vector<Int>> tuples;  // lexicographically sorted, distinct
    Completeness completeness = Completeness::box_bounded;
    long long bound = 0;        // box radius when box_bounded
    bool cap_exceeded = false;  // diagnostic: tuples is a partial set
    SolverStats stats;
};

// Enumerates every integer solution of the system inside the box (hybrid and
// dfs strategies) or exactly (elim strategy, when the elimination tower stays
// under the degree/coefficient caps). Deterministic output.
SolutionSet solve(const ConstraintSystem& sys, const SolverConfig& cfg = {});

namespace detail {

// All integer roots of a nonzero univariate polynomial, coefficient of x^d
// at index d. A positive max_abs restricts the search to |root| <= max_abs;
// without it the full divisor range is scanned and EliminationBlowup is
// thrown when that range is too large to enumerate.
std::vector<Int> integer_roots(const std::vector<Int>& coeffs,
                               long long max_abs = 0);

// Res_x(f, g) via Bareiss elimination on the Sylvester matrix; f, g viewed
// as univariate in var with CoefPoly coefficients.
CoefPoly resultant(const CoefPoly& f, const CoefPoly& g, uint32_t var);

struct EliminationBlowup : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace detail

}  // namespace uvb

#endif
