#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "matchframe/range_index.hpp"

namespace mframe {

// Two vertical segments (a1,a2,b1) and (a1,a2,b2) sharing their row span.
// Distance is b2 - b1.
struct VerticalAlignedPair {
    int a1, a2;  // top/bottom rows, a1 < a2
    int b1, b2;  // left/right columns, b1 < b2

    VerticalAlignedPair(int a1_, int a2_, int b1_, int b2_) : a1(a1_), a2(a2_), b1(b1_), b2(b2_) {
        if (a1 >= a2 || b1 >= b2)
            throw std::invalid_argument("VerticalAlignedPair: requires a1 < a2 and b1 < b2");
    }

    int distance() const { return b2 - b1; }

    friend bool operator==(const VerticalAlignedPair& x, const VerticalAlignedPair& y) {
        return x.a1 == y.a1 && x.a2 == y.a2 && x.b1 == y.b1 && x.b2 == y.b2;
    }
};

// Two horizontal segments (i1,j1,j2) and (i2,j1,j2) sharing their column span.
struct HorizontalAlignedPair {
    int i1, i2;  // rows, i1 < i2
    int j1, j2;  // column span, j1 < j2

    HorizontalAlignedPair(int i1_, int i2_, int j1_, int j2_) : i1(i1_), i2(i2_), j1(j1_), j2(j2_) {
        if (i1 >= i2 || j1 >= j2)
            throw std::invalid_argument("HorizontalAlignedPair: requires i1 < i2 and j1 < j2");
    }
};

// Stores aligned vertical pairs as 4-dimensional points (a1,a2,b1,b2) valued
// by distance and answers maximum-distance compatible-pair queries. A stored
// pair is compatible with a horizontal pair iff a1 <= i1 <= i2 <= a2 and
// j1 <= b1 <= b2 <= j2.
class Scds {
  public:
    Scds() = default;
    explicit Scds(const std::vector<VerticalAlignedPair>& pairs);

    std::size_t size() const { return index_.size(); }

    std::optional<VerticalAlignedPair> max_compatible(const HorizontalAlignedPair& h) const;

  private:
    RangeIndex<4> index_;
};

}  // namespace mframe
