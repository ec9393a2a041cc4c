#ifndef UVB_LINALG_HPP
#define UVB_LINALG_HPP

#include <vector>

#include "uvb/numeric.hpp"

namespace uvb {

using IntMatrix = std::vector<std::vector<Int>>;

// Exact rank via fraction-free Gaussian elimination.
unsigned exact_rank(IntMatrix m);

// Basis of the saturated kernel {x : x^T m = 0} of the row space map,
// i.e. integer relations among the rows. Vectors are echelonized by leading
// index and primitive (content 1).
IntMatrix row_relations(const IntMatrix& m);

}  // namespace uvb

#endif
