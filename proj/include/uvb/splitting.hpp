#ifndef UVB_SPLITTING_HPP
#define UVB_SPLITTING_HPP

#include <string>
#include <vector>

#include "uvb/numeric.hpp"

namespace uvb {

// Splitting type (k; r_1..r_k; u_1..u_k): on each line the bundle restricts
// to  O(u_1)^{r_1} + ... + O(u_k)^{r_k}  with u_1 > ... > u_k.
struct SplittingType {
    std::vector<int> ranks;
    std::vector<int> twists;

    int parts() const { return static_cast<int>(ranks.size()); }
    int total_rank() const;

    bool is_normalized() const;   // u_k == 0
    bool is_consecutive() const;  // u_i - u_{i+1} == 1 throughout
    bool has_gap() const;         // some u_i - u_{i+1} >= 2

    // subtract u_k everywhere; returns the twist that was removed
    int normalize();

    // the multiset of line degrees, descending
    std::vector<int> line_multiset() const;

    bool operator==(const SplittingType& o) const = default;

    std::string to_string() const;  // "k;r1,...,rk;u1,...,uk"
    static SplittingType parse(const std::string& text);
    // consecutive twists (k-1, ..., 0)
    static SplittingType consecutive(std::vector<int> ranks);
    // group a line-degree multiset into a type
    static SplittingType from_multiset(std::vector<int> degrees);
};

// Ranks reversed, twists u'_i = u_1 - u_{k+1-i}; an involution on
// normalized consecutive types.
SplittingType dualize_type(const SplittingType& st);

}  // namespace uvb

#endif
