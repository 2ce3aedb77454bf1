#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "matchframe/grid.hpp"
#include "matchframe/matrix_index.hpp"

namespace mframe {

// A sub-matrix of the parent: origin offsets (0-based; the window covers
// parent rows [origin_row+1 .. origin_row+height]) plus its inner rectangle
// in window-relative coordinates.
struct Window {
    int origin_row = 0;
    int origin_col = 0;
    int height = 0;
    int width = 0;
    InnerRectangle inner{0, 0, 0, 0};
};

// (u,d) is an interesting pair of the tuple of row suffixes starting at
// column l: every intermediate row has a strictly smaller LCP with row u.
struct InterestingTriplet {
    int u, d, l;
};

struct ApproxOptions {
    int threads = 1;
    // The window prefilter only skips windows that cannot contain a
    // surrounding matching frame; disabling it is useful for testing.
    bool window_filter = true;
};

// Windows of height ceil(a^{h+2}) and width ceil(a^{w+2}) (a = 1+eps/3,
// clamped to the matrix), origins on the (delta_h, delta_w) grid with the
// final origin in each dimension clamped to end at the border. Every frame
// with height in [ceil(a^h)..ceil(a^{h+1})-1] and width in the analogous w
// range is a surrounding frame of some window.
std::vector<Window> decompose(int n, int m, double eps, int h, int w);

// Copy of the window's sub-matrix with every inner cell replaced by a
// globally fresh code above alphabet_max. Empty inner rectangles skip
// masking.
Matrix mask_inner(const Window& win, const Matrix& m);

// Max over k in [i+1..j] of row_lcp(l, i, k), via the lex neighbors of row i
// inside the row box. Requires i < j.
int compute_L(const MatrixIndex& x_idx, int l, int i, int j);

// Min k in [i+1..j] attaining compute_L(l, i, j).
int compute_I(const MatrixIndex& x_idx, int l, int i, int j);

// Emits exactly the interesting triplets: for each l and each u, the chain
// j1 = I(u,n), j_k = I(u, j_{k-1}-1) down to u+1.
void interesting_triplets(const Matrix& m, const MatrixIndex& x_idx,
                          const std::function<void(const InterestingTriplet&)>& emit);
std::vector<InterestingTriplet> collect_interesting_triplets(const Matrix& m,
                                                             const MatrixIndex& x_idx);

// Column r making (t.u, t.d, t.l, r) a surrounding matching frame of the
// masked window, or none. x_masked must index the masked window.
std::optional<int> verify_surrounding(const MatrixIndex& x_masked, const InterestingTriplet& t,
                                      const InnerRectangle& inner);

// Masks the inner rectangle, indexes the masked window, walks interesting
// triplets and returns the first verified surrounding matching frame.
std::optional<Frame> decide_surrounding(const Matrix& window_matrix, const InnerRectangle& inner);

// (1-eps)-approximate maximum matching frame: exact search below the small-
// side floor, window decomposition + surrounding-frame decision above it.
// Returns none iff the matrix has no matching frame.
std::optional<Frame> approx_max_frame(const Matrix& m, double eps, const ApproxOptions& opts = {});

}  // namespace mframe
