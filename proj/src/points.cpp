#include "drawkit/points.hpp"

#include <algorithm>
#include <string>

namespace drawkit {

int orientation(const Point& a, const Point& b, const Point& c) {
    const Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(det);
}

bool segments_cross(const Point& p, const Point& q, const Point& r, const Point& s) {
    const int o1 = orientation(p, q, r), o2 = orientation(p, q, s);
    const int o3 = orientation(r, s, p), o4 = orientation(r, s, q);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

void check_general_position(const PointSet& ps) {
    const std::size_t n = ps.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (ps[i].x == ps[j].x)
                throw Error(Errc::DegeneratePointSet,
                            "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " share an x-coordinate");
            for (std::size_t k = j + 1; k < n; ++k)
                if (orientation(ps[i], ps[j], ps[k]) == 0)
                    throw Error(Errc::DegeneratePointSet,
                                "collinear triple " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    "," + std::to_string(k + 1));
        }
}

namespace {

// Upper half-plane (including the positive x-axis) comes first in counter-clockwise order.
int half(const Rational& dx, const Rational& dy) { return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1; }

}  // namespace

std::vector<std::vector<Vertex>> clockwise_rotations(const PointSet& ps) {
    const int n = static_cast<int>(ps.size());
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const Point& o = ps[static_cast<std::size_t>(v)];
        std::vector<int> others;
        for (int u = 0; u < n; ++u)
            if (u != v) others.push_back(u);
        // counter-clockwise angular sort, then reverse
        std::sort(others.begin(), others.end(), [&](int i, int j) {
            const Point& p = ps[static_cast<std::size_t>(i)];
            const Point& q = ps[static_cast<std::size_t>(j)];
            const int hp = half(p.x - o.x, p.y - o.y), hq = half(q.x - o.x, q.y - o.y);
            if (hp != hq) return hp < hq;
            return orientation(o, p, q) > 0;
        });
        std::reverse(others.begin(), others.end());
        auto smallest = std::min_element(others.begin(), others.end());
        std::rotate(others.begin(), smallest, others.end());
        auto& out = rot[static_cast<std::size_t>(v)];
        for (int u : others) out.push_back(u + 1);
    }
    return rot;
}

CrossingSet segment_crossings(const PointSet& ps) {
    const int n = static_cast<int>(ps.size());
    CrossingSet cs(n);
    const auto edges = all_edges(n);
    auto pt = [&](Vertex v) -> const Point& { return ps[static_cast<std::size_t>(v - 1)]; };
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge e = edges[i], f = edges[j];
            if (e.shares_vertex(f)) continue;
            if (segments_cross(pt(e.a), pt(e.b), pt(f.a), pt(f.b))) cs.insert(e, f);
        }
    return cs;
}

}  // namespace drawkit
