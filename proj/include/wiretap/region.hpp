#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace wiretap {

/// One point of a two-user rate region, both coordinates in bits per use.
struct RatePoint {
    double r1 = 0.0;
    double r2 = 0.0;

    friend bool operator==(const RatePoint& a, const RatePoint& b) {
        return a.r1 == b.r1 && a.r2 == b.r2;
    }
};

/// The three-inequality description R1 <= a, R2 <= b, R1+R2 <= c.
/// c may be negative, signalling a region that collapses toward the origin.
struct RateBounds {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

/// A convex rate region: vertices in counterclockwise order, containing the
/// origin, all coordinates non-negative. Degenerate regions (segments, a
/// single point) are stored with 2 or 1 vertices.
struct RateRegion {
    std::vector<RatePoint> vertices;

    double max_r1() const {
        double m = 0.0;
        for (const auto& v : vertices) m = std::max(m, v.r1);
        return m;
    }
    double max_r2() const {
        double m = 0.0;
        for (const auto& v : vertices) m = std::max(m, v.r2);
        return m;
    }
};

namespace detail {

inline double cross(const RatePoint& o, const RatePoint& a, const RatePoint& b) {
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

/// Monotone-chain convex hull. Collinear points are pruned. Points must not
/// be empty; duplicates are allowed.
inline std::vector<RatePoint> hull_of(std::vector<RatePoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const RatePoint& p, const RatePoint& q) {
        return p.r1 < q.r1 || (p.r1 == q.r1 && p.r2 < q.r2);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<RatePoint> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);  // last point repeats the first
    return h;
}

inline double dist_point_segment(const RatePoint& p, const RatePoint& a, const RatePoint& b) {
    const double vx = b.r1 - a.r1, vy = b.r2 - a.r2;
    const double wx = p.r1 - a.r1, wy = p.r2 - a.r2;
    const double len2 = vx * vx + vy * vy;
    double t = len2 > 0.0 ? (wx * vx + wy * vy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const double dx = p.r1 - (a.r1 + t * vx), dy = p.r2 - (a.r2 + t * vy);
    return std::hypot(dx, dy);
}

}  // namespace detail

/// Convex hull of the input points together with their axis projections
/// (r1,0), (0,r2) and the origin (time sharing with silence is always
/// allowed). Vertices come out counterclockwise with collinear points pruned.
inline RateRegion convex_hull(const std::vector<RatePoint>& points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty input");
    std::vector<RatePoint> pts;
    pts.reserve(3 * points.size() + 1);
    for (const auto& p : points) {
        if (!(p.r1 >= 0.0 && p.r2 >= 0.0))
            throw std::domain_error("convex_hull: negative rate coordinate");
        pts.push_back(p);
        pts.push_back({p.r1, 0.0});
        pts.push_back({0.0, p.r2});
    }
    pts.push_back({0.0, 0.0});
    return RateRegion{detail::hull_of(std::move(pts))};
}

/// The polygon {0 <= r1 <= a, 0 <= r2 <= b, r1 + r2 <= max(c, 0)}.
/// Negative a or b (rounding dust from rate differences) clip to zero, as
/// does a negative sum bound.
inline RateRegion pentagon(const RateBounds& bounds) {
    const double a = std::max(bounds.a, 0.0);
    const double b = std::max(bounds.b, 0.0);
    const double c = std::min(std::max(bounds.c, 0.0), a + b);
    std::vector<RatePoint> cand;
    cand.push_back({0.0, 0.0});
    cand.push_back({std::min(a, c), 0.0});
    cand.push_back({0.0, std::min(b, c)});
    if (c >= a + b) {
        cand.push_back({a, b});
    } else {
        // Sum constraint active: knees where it meets the box edges.
        if (c >= a) cand.push_back({a, c - a});
        if (c >= b) cand.push_back({c - b, b});
    }
    return convex_hull(cand);
}

/// Convex hull of the union of the given regions. Valid for the achievable
/// regions here because every corollary applies a convex-hull closure over
/// the union of its building blocks.
inline RateRegion union_region(const std::vector<RateRegion>& regions) {
    if (regions.empty()) throw std::invalid_argument("union_region: empty input");
    std::vector<RatePoint> pts;
    for (const auto& r : regions) pts.insert(pts.end(), r.vertices.begin(), r.vertices.end());
    if (pts.empty()) throw std::invalid_argument("union_region: regions have no vertices");
    return convex_hull(pts);
}

/// True iff p lies within Euclidean distance tol of the region.
inline bool contains(const RateRegion& region, const RatePoint& p, double tol) {
    if (!(tol >= 0.0)) throw std::invalid_argument("contains: negative tolerance");
    const auto& v = region.vertices;
    if (v.empty()) return false;
    if (v.size() == 1) return std::hypot(p.r1 - v[0].r1, p.r2 - v[0].r2) <= tol;
    if (v.size() >= 3) {
        bool inside = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& a = v[i];
            const auto& b = v[(i + 1) % v.size()];
            if (detail::cross(a, b, p) < 0.0) {
                inside = false;
                break;
            }
        }
        if (inside) return true;
    }
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i)
        d = std::min(d, detail::dist_point_segment(p, v[i], v[(i + 1) % v.size()]));
    return d <= tol;
}

/// n points tracing the upper-right boundary from (max r1, 0) to
/// (0, max r2), spaced uniformly in arc length. A zero-length boundary
/// (point region) repeats the point.
inline std::vector<RatePoint> boundary_samples(const RateRegion& region, int n) {
    if (n < 2) throw std::invalid_argument("boundary_samples: need n >= 2");
    const auto& v = region.vertices;
    if (v.empty()) throw std::invalid_argument("boundary_samples: empty region");

    // Start at the vertex (max r1, 0); end at (0, max r2). Both exist because
    // regions are hulled with axis projections included.
    std::size_t start = 0, end = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i].r1 > v[start].r1 || (v[i].r1 == v[start].r1 && v[i].r2 < v[start].r2))
            start = i;
        if (v[i].r2 > v[end].r2 || (v[i].r2 == v[end].r2 && v[i].r1 < v[end].r1)) end = i;
    }

    std::vector<RatePoint> path;
    path.push_back(v[start]);
    for (std::size_t i = start; i != end;) {
        i = (i + 1) % v.size();
        path.push_back(v[i]);
    }

    double total = 0.0;
    std::vector<double> seg(path.size(), 0.0);
    for (std::size_t i = 1; i < path.size(); ++i) {
        seg[i] = std::hypot(path[i].r1 - path[i - 1].r1, path[i].r2 - path[i - 1].r2);
        total += seg[i];
    }
    std::vector<RatePoint> out;
    out.reserve(n);
    if (total == 0.0) {
        out.assign(n, path.front());
        return out;
    }
    double target = 0.0;
    std::size_t idx = 1;
    double walked = 0.0;
    for (int k = 0; k < n; ++k) {
        target = total * k / (n - 1);
        while (idx < path.size() && walked + seg[idx] < target) walked += seg[idx++];
        if (idx >= path.size()) {
            out.push_back(path.back());
            continue;
        }
        const double t = seg[idx] > 0.0 ? (target - walked) / seg[idx] : 0.0;
        out.push_back({path[idx - 1].r1 + t * (path[idx].r1 - path[idx - 1].r1),
                       path[idx - 1].r2 + t * (path[idx].r2 - path[idx - 1].r2)});
    }
    return out;
}

/// Streaming vertex collector for large parameter sweeps: buffers candidate
/// vertices and periodically compresses them to their hull so memory stays
/// bounded. finish() returns the hull of everything added.
class HullAccumulator {
public:
    explicit HullAccumulator(std::size_t compress_threshold = 1u << 20)
        : threshold_(compress_threshold) {
        buffer_.push_back({0.0, 0.0});
    }

    void add(const RatePoint& p) {
        buffer_.push_back(p);
        if (buffer_.size() >= threshold_) compress();
    }

    void add_bounds(const RateBounds& bounds) {
        const double a = std::max(bounds.a, 0.0);
        const double b = std::max(bounds.b, 0.0);
        const double c = std::min(std::max(bounds.c, 0.0), a + b);
        add({std::min(a, c), 0.0});
        add({0.0, std::min(b, c)});
        if (c >= a + b) {
            add({a, b});
        } else {
            if (c >= a) add({a, c - a});
            if (c >= b) add({c - b, b});
        }
    }

    RateRegion finish() {
        RateRegion r = convex_hull(buffer_);
        buffer_ = r.vertices;
        return r;
    }

private:
    void compress() {
        buffer_ = detail::hull_of(std::move(buffer_));
        // A pathological hull could stay large; grow the threshold so we
        // keep making progress instead of thrashing.
        if (buffer_.size() * 2 > threshold_) threshold_ *= 2;
    }

    std::vector<RatePoint> buffer_;
    std::size_t threshold_;
};

}  // namespace wiretap
