#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matchframe/grid.hpp"
#include "matchframe/scds.hpp"

namespace mframe {
namespace oracle {

// Definitional brute-force references. Hard size guards keep accidental huge
// runs from happening; none of these are used by the solvers.

// Exhaustive maximum-perimeter matching frame; lexicographic (u,l,d,r)
// tie-break. Guarded to n*m <= 2048.
std::optional<Frame> brute_max_frame(const Matrix& m);

// All interesting pairs (i,j), 1-based: i < j and every k strictly between
// satisfies LCP(S_i,S_k) < LCP(S_i,S_j). Guarded to tuples of <= 200 strings.
std::set<std::pair<int, int>> brute_interesting_pairs(const std::vector<std::vector<Symbol>>& tuple);
std::set<std::pair<int, int>> brute_interesting_pairs(const std::vector<std::string>& tuple);

// Linear scan over stored pairs with the same compatibility predicate and
// tie-break as Scds::max_compatible.
std::optional<VerticalAlignedPair> brute_max_compatible(
    const std::vector<VerticalAlignedPair>& pairs, const HorizontalAlignedPair& h);

// Exhaustive search over frames strictly containing the inner rectangle.
std::optional<Frame> brute_surrounding(const Matrix& m, const InnerRectangle& inner);

}  // namespace oracle
}  // namespace mframe
