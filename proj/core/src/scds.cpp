#include "matchframe/scds.hpp"

namespace mframe {

Scds::Scds(const std::vector<VerticalAlignedPair>& pairs) {
    std::vector<RangePoint<4>> pts;
    pts.reserve(pairs.size());
    for (const auto& p : pairs)
        pts.push_back({{p.a1, p.a2, p.b1, p.b2}, p.distance()});
    index_ = RangeIndex<4>(std::move(pts));
}

std::optional<VerticalAlignedPair> Scds::max_compatible(const HorizontalAlignedPair& h) const {
    RangeBox<4> box;
    box.bound(0, kNegInf, h.i1);
    box.bound(1, h.i2, kPosInf);
    box.bound(2, h.j1, h.j2);
    box.bound(3, h.j1, h.j2);
    auto hit = index_.query_max(box);
    if (!hit) return std::nullopt;
    return VerticalAlignedPair(static_cast<int>(hit->coords[0]), static_cast<int>(hit->coords[1]),
                               static_cast<int>(hit->coords[2]), static_cast<int>(hit->coords[3]));
}

}  // namespace mframe
