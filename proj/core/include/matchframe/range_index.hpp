#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mframe {

inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::lowest();
inline constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();

template <int Dim>
struct RangePoint {
    std::array<std::int64_t, Dim> coords{};
    std::int64_t value = 0;

    friend bool operator==(const RangePoint& a, const RangePoint& b) {
        return a.coords == b.coords && a.value == b.value;
    }
};

// Closed box; per-dimension bounds default to the whole axis. Infinite bounds
// are the extreme values of the integer domain.
template <int Dim>
struct RangeBox {
    std::array<std::int64_t, Dim> lo;
    std::array<std::int64_t, Dim> hi;

    RangeBox() {
        lo.fill(kNegInf);
        hi.fill(kPosInf);
    }

    RangeBox& bound(int axis, std::int64_t a, std::int64_t b) {
        lo[axis] = a;
        hi[axis] = b;
        return *this;
    }

    bool contains(const RangePoint<Dim>& p) const {
        for (int k = 0; k < Dim; ++k)
            if (p.coords[k] < lo[k] || p.coords[k] > hi[k]) return false;
        return true;
    }

    void validate() const {
        for (int k = 0; k < Dim; ++k)
            if (lo[k] > hi[k]) throw std::invalid_argument("RangeBox: lo > hi");
    }
};

// Static orthogonal range argmax/argmin over valued integer points.
//
// Realized as a bounding-box tree (kd-style splits) carrying per-subtree
// extreme points, queried with branch-and-bound. Ties are broken by the
// lexicographically smallest coordinate vector, so results are deterministic
// and independent of traversal order.
template <int Dim>
class RangeIndex {
  public:
    RangeIndex() = default;

    explicit RangeIndex(std::vector<RangePoint<Dim>> points) : pts_(std::move(points)) {
        if (!pts_.empty()) {
            nodes_.reserve(2 * pts_.size() / kLeafSize + 2);
            build(0, static_cast<std::int32_t>(pts_.size()), 0);
        }
    }

    std::size_t size() const { return pts_.size(); }

    std::optional<RangePoint<Dim>> query_max(const RangeBox<Dim>& box) const {
        return query<MaxBetter>(box);
    }
    std::optional<RangePoint<Dim>> query_min(const RangeBox<Dim>& box) const {
        return query<MinBetter>(box);
    }

  private:
    static constexpr std::int32_t kLeafSize = 16;

    struct Node {
        std::array<std::int64_t, Dim> lo, hi;  // bounding box of the subtree
        std::int32_t begin, end;               // point range [begin, end)
        std::int32_t left = -1, right = -1;
        std::int32_t best_max, best_min;       // indices into pts_
    };

    struct MaxBetter {
        static bool better(const RangePoint<Dim>& a, const RangePoint<Dim>& b) {
            if (a.value != b.value) return a.value > b.value;
            return a.coords < b.coords;
        }
        static std::int32_t best(const Node& n) { return n.best_max; }
    };
    struct MinBetter {
        static bool better(const RangePoint<Dim>& a, const RangePoint<Dim>& b) {
            if (a.value != b.value) return a.value < b.value;
            return a.coords < b.coords;
        }
        static std::int32_t best(const Node& n) { return n.best_min; }
    };

    std::int32_t build(std::int32_t begin, std::int32_t end, int depth) {
        const std::int32_t id = static_cast<std::int32_t>(nodes_.size());
        nodes_.emplace_back();
        {
            Node& n = nodes_[id];
            n.begin = begin;
            n.end = end;
            n.lo.fill(kPosInf);
            n.hi.fill(kNegInf);
        }
        for (std::int32_t i = begin; i < end; ++i)
            for (int k = 0; k < Dim; ++k) {
                nodes_[id].lo[k] = std::min(nodes_[id].lo[k], pts_[i].coords[k]);
                nodes_[id].hi[k] = std::max(nodes_[id].hi[k], pts_[i].coords[k]);
            }
        if (end - begin <= kLeafSize) {
            std::int32_t bmax = begin, bmin = begin;
            for (std::int32_t i = begin + 1; i < end; ++i) {
                if (MaxBetter::better(pts_[i], pts_[bmax])) bmax = i;
                if (MinBetter::better(pts_[i], pts_[bmin])) bmin = i;
            }
            nodes_[id].best_max = bmax;
            nodes_[id].best_min = bmin;
            return id;
        }
        const int axis = depth % Dim;
        const std::int32_t mid = begin + (end - begin) / 2;
        std::nth_element(pts_.begin() + begin, pts_.begin() + mid, pts_.begin() + end,
                         [axis](const RangePoint<Dim>& a, const RangePoint<Dim>& b) {
                             return a.coords[axis] < b.coords[axis];
                         });
        const std::int32_t l = build(begin, mid, depth + 1);
        const std::int32_t r = build(mid, end, depth + 1);
        Node& n = nodes_[id];
        n.left = l;
        n.right = r;
        n.best_max = MaxBetter::better(pts_[nodes_[l].best_max], pts_[nodes_[r].best_max])
                         ? nodes_[l].best_max
                         : nodes_[r].best_max;
        n.best_min = MinBetter::better(pts_[nodes_[l].best_min], pts_[nodes_[r].best_min])
                         ? nodes_[l].best_min
                         : nodes_[r].best_min;
        return id;
    }

    static bool intersects(const Node& n, const RangeBox<Dim>& box) {
        for (int k = 0; k < Dim; ++k)
            if (n.hi[k] < box.lo[k] || n.lo[k] > box.hi[k]) return false;
        return true;
    }
    static bool contained(const Node& n, const RangeBox<Dim>& box) {
        for (int k = 0; k < Dim; ++k)
            if (n.lo[k] < box.lo[k] || n.hi[k] > box.hi[k]) return false;
        return true;
    }

    template <typename Cmp>
    std::optional<RangePoint<Dim>> query(const RangeBox<Dim>& box) const {
        box.validate();
        if (pts_.empty()) return std::nullopt;
        std::int32_t best = -1;
        dfs<Cmp>(0, box, best);
        if (best < 0) return std::nullopt;
        return pts_[best];
    }

    template <typename Cmp>
    void dfs(std::int32_t id, const RangeBox<Dim>& box, std::int32_t& best) const {
        const Node& n = nodes_[id];
        if (!intersects(n, box)) return;
        const std::int32_t nb = Cmp::best(n);
        if (best >= 0 && !Cmp::better(pts_[nb], pts_[best])) return;
        if (contained(n, box)) {
            best = nb;
            return;
        }
        if (n.left < 0) {
            for (std::int32_t i = n.begin; i < n.end; ++i)
                if (box.contains(pts_[i]) && (best < 0 || Cmp::better(pts_[i], pts_[best])))
                    best = i;
            return;
        }
        dfs<Cmp>(n.left, box, best);
        dfs<Cmp>(n.right, box, best);
    }

    std::vector<RangePoint<Dim>> pts_;
    std::vector<Node> nodes_;
};

}  // namespace mframe
