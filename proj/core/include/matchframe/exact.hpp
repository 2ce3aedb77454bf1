#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matchframe/grid.hpp"
#include "matchframe/matrix_index.hpp"

namespace mframe {

enum class FrameSource { kShort, kTall, kTransposedShort, kTransposedTall };

struct SearchResult {
    std::optional<Frame> frame;
    FrameSource source = FrameSource::kShort;
};

struct SolverOptions {
    int threads = 1;
};

// Disjoint, left-to-right, inclusion-maximal column ranges on which rows u
// and d agree (singletons included).
std::vector<std::pair<int, int>> maximal_equal_ranges(const Matrix& m, int u, int d);

// Maximum-perimeter matching frame of height at most x, or none. x >= n is
// clamped to n-1. Needs the column LSA family of `x`.
std::optional<Frame> short_frame_search(const Matrix& m, const MatrixIndex& x_idx, int x,
                                        const SolverOptions& opts = {});

// Maximum matching frame containing p with height in [ceil(H/2)..H] and
// width in [ceil(W/2)..W], or none. Needs all four LCP families.
std::optional<Frame> phw_frame_search(const Matrix& m, const MatrixIndex& x_idx, Position p,
                                      int big_h, int big_w);

// Maximum matching frame of height at least x among frames with height <=
// width, or none (frames with larger height than width may also surface;
// they are matching and at least as large as the best covered one).
std::optional<Frame> tall_frame_search(const Matrix& m, const MatrixIndex& x_idx, int x,
                                       const SolverOptions& opts = {});

// Maximum-perimeter matching frame over all frames. Runs short+tall with
// x = ceil(sqrt(max side)) or short-only with x = min side, on the matrix
// and its transpose, whichever the cost model ab*min{a, sqrt(b)} predicts
// cheaper.
SearchResult max_matching_frame(const Matrix& m, const SolverOptions& opts = {});

}  // namespace mframe
