#pragma once

// Lattice polygons in Z^2: canonical-form construction (convex hull, CCW,
// lexicographic-minimal start by (y,x)), toric-diagram validation, Pick
// counts, Minkowski sums and the segment-sum criterion.
//
// Segments are a first-class degenerate variant (exactly two vertices) so
// Minkowski sums with segments need no special casing.

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reebscope/bigint.hpp"

namespace reebscope {

struct Point2 {
    long long x = 0, y = 0;
    friend bool operator==(const Point2&, const Point2&) = default;
    Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
    Point2 operator-() const { return {-x, -y}; }
};

// order by (y, x): "lowest" point first
inline bool yx_less(const Point2& a, const Point2& b) { return a.y != b.y ? a.y < b.y : a.x < b.x; }

inline __int128 cross(const Point2& o, const Point2& a, const Point2& b) {
    return static_cast<__int128>(a.x - o.x) * (b.y - o.y) - static_cast<__int128>(a.y - o.y) * (b.x - o.x);
}
inline __int128 cross(const Point2& a, const Point2& b) {
    return static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x;
}

inline long long gcd_ll(long long a, long long b) { return std::gcd(std::abs(a), std::abs(b)); }

struct OrientedEdgeList {
    std::vector<Point2> edges;  // traversal order, sum is zero
};

struct DiagramValidation {
    bool is_convex_simple = false;  // 2-dimensional convex polygon
    bool edges_primitive = false;
    std::vector<Point2> offending_edges;
    bool valid() const { return is_convex_simple && edges_primitive; }
    std::string reason() const {
        if (valid()) return "valid toric diagram";
        if (!is_convex_simple) return "not a 2-dimensional convex polygon";
        std::string r = "non-primitive edge(s):";
        for (const auto& e : offending_edges)
            r += " (" + std::to_string(e.x) + "," + std::to_string(e.y) + ")";
        return r;
    }
};

class LatticePolygon {
public:
    LatticePolygon() = default;

    // Convex hull of the input points, canonical CCW order starting at the
    // (y,x)-minimal vertex. Collinear non-extreme points are dropped as
    // vertices. Two extreme points make a LatticeSegment variant.
    static LatticePolygon from_vertices(std::vector<Point2> pts) {
        std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
            return a.x != b.x ? a.x < b.x : a.y < b.y;
        });
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() < 2) throw std::invalid_argument("from_vertices: need at least 2 distinct points");
        // monotone chain
        auto build = [&](bool upper) {
            std::vector<Point2> h;
            for (size_t k = 0; k < pts.size(); ++k) {
                const Point2& p = pts[upper ? pts.size() - 1 - k : k];
                while (h.size() >= 2 && cross(h[h.size() - 2], h[h.size() - 1], p) <= 0) h.pop_back();
                h.push_back(p);
            }
            return h;
        };
        std::vector<Point2> lower = build(false), upper = build(true);
        LatticePolygon poly;
        if (lower.size() == 2 && upper.size() == 2) {
            // all points collinear: keep the two extremes, ordered by (y,x)
            poly.v_ = {lower.front(), lower.back()};
            if (!yx_less(poly.v_[0], poly.v_[1])) std::swap(poly.v_[0], poly.v_[1]);
            return poly;
        }
        poly.v_ = std::move(lower);
        poly.v_.pop_back();
        for (size_t i = 0; i + 1 < upper.size(); ++i) poly.v_.push_back(upper[i]);
        poly.rotate_canonical();
        return poly;
    }

    static LatticePolygon segment(Point2 a, Point2 b) { return from_vertices({a, b}); }

    const std::vector<Point2>& vertices() const { return v_; }
    size_t size() const { return v_.size(); }
    bool is_segment() const { return v_.size() == 2; }

    bool operator==(const LatticePolygon& o) const { return v_ == o.v_; }
    bool operator<(const LatticePolygon& o) const {
        auto key = [](const Point2& p) { return std::pair<long long, long long>(p.y, p.x); };
        return std::lexicographical_compare(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                                            [&](const Point2& a, const Point2& b) { return key(a) < key(b); });
    }

    LatticePolygon translated(Point2 t) const {
        LatticePolygon p = *this;
        for (auto& v : p.v_) v = v + t;
        return p;
    }

    // translation-normalized copy: (y,x)-minimal vertex at the origin
    LatticePolygon normalized() const { return translated(-v_.front()); }

    OrientedEdgeList oriented_edges() const {
        OrientedEdgeList e;
        if (is_segment()) {
            e.edges = {v_[1] - v_[0], v_[0] - v_[1]};
            return e;
        }
        for (size_t i = 0; i < v_.size(); ++i) e.edges.push_back(v_[(i + 1) % v_.size()] - v_[i]);
        return e;
    }

    long long twice_area() const {
        if (is_segment()) return 0;
        __int128 s = 0;
        for (size_t i = 0; i < v_.size(); ++i) {
            const Point2& a = v_[i];
            const Point2& b = v_[(i + 1) % v_.size()];
            s += static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x;
        }
        return static_cast<long long>(s);
    }

    long long boundary_lattice_points() const {
        long long b = 0;
        if (is_segment()) return gcd_ll(v_[1].x - v_[0].x, v_[1].y - v_[0].y) + 1;
        for (const auto& e : oriented_edges().edges) b += gcd_ll(e.x, e.y);
        return b;
    }

    // Pick: i = A - b/2 + 1, computed exactly as (2A - b + 2)/2
    long long interior_lattice_point_count() const {
        if (is_segment()) return 0;
        return (twice_area() - boundary_lattice_points() + 2) / 2;
    }

    bool contains_strict(const Point2& p) const {
        if (is_segment()) return false;
        for (size_t i = 0; i < v_.size(); ++i)
            if (cross(v_[i], v_[(i + 1) % v_.size()], p) <= 0) return false;
        return true;
    }
    bool contains(const Point2& p) const {
        if (is_segment()) {
            if (cross(v_[0], v_[1], p) != 0) return false;
            return std::min(v_[0].x, v_[1].x) <= p.x && p.x <= std::max(v_[0].x, v_[1].x) &&
                   std::min(v_[0].y, v_[1].y) <= p.y && p.y <= std::max(v_[0].y, v_[1].y);
        }
        for (size_t i = 0; i < v_.size(); ++i)
            if (cross(v_[i], v_[(i + 1) % v_.size()], p) < 0) return false;
        return true;
    }

    std::vector<Point2> interior_lattice_points() const {
        std::vector<Point2> out;
        if (is_segment()) return out;
        long long xmin = v_[0].x, xmax = v_[0].x, ymin = v_[0].y, ymax = v_[0].y;
        for (const auto& p : v_) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
        for (long long y = ymin + 1; y < ymax; ++y)
            for (long long x = xmin + 1; x < xmax; ++x)
                if (contains_strict({x, y})) out.push_back({x, y});
        std::sort(out.begin(), out.end(), yx_less);
        return out;
    }

    // rational barycenter of the vertex set, as (num_x, num_y, den)
    std::array<long long, 3> vertex_barycenter() const {
        long long sx = 0, sy = 0;
        for (const auto& p : v_) {
            sx += p.x;
            sy += p.y;
        }
        return {sx, sy, static_cast<long long>(v_.size())};
    }

    std::string to_text() const {
        std::string s;
        for (const auto& p : v_) {
            if (!s.empty()) s += ";";
            s += "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
        }
        return s;
    }

private:
    void rotate_canonical() {
        size_t best = 0;
        for (size_t i = 1; i < v_.size(); ++i)
            if (yx_less(v_[i], v_[best])) best = i;
        std::rotate(v_.begin(), v_.begin() + best, v_.end());
    }

    std::vector<Point2> v_;
};

inline DiagramValidation validate_toric_diagram(const LatticePolygon& p) {
    DiagramValidation v;
    v.is_convex_simple = !p.is_segment() && p.size() >= 3;
    v.edges_primitive = true;
    if (v.is_convex_simple) {
        for (const auto& e : p.oriented_edges().edges) {
            if (gcd_ll(e.x, e.y) != 1) {
                v.edges_primitive = false;
                v.offending_edges.push_back(e);
            }
        }
    }
    return v;
}

// edge-angle order for the Minkowski merge, counter-clockwise from the
// positive x direction
inline bool edge_angle_less(const Point2& a, const Point2& b) {
    auto half = [](const Point2& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
    if (half(a) != half(b)) return half(a) < half(b);
    return cross(a, b) > 0;
}

inline LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q) {
    std::vector<Point2> edges;
    for (const auto& e : p.oriented_edges().edges) edges.push_back(e);
    for (const auto& e : q.oriented_edges().edges) edges.push_back(e);
    std::stable_sort(edges.begin(), edges.end(), edge_angle_less);
    Point2 start = p.vertices().front() + q.vertices().front();
    std::vector<Point2> walk{start};
    for (const auto& e : edges) walk.push_back(walk.back() + e);
    walk.pop_back();  // cycle closes
    return LatticePolygon::from_vertices(walk);
}

inline LatticePolygon minkowski_sum(const std::vector<LatticePolygon>& parts) {
    if (parts.empty()) throw std::invalid_argument("minkowski_sum: empty list");
    LatticePolygon acc = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) acc = minkowski_sum(acc, parts[i]);
    return acc;
}

struct SegmentSumCheck {
    bool ok = false;
    std::string reason;
};

// Q + L is a toric diagram iff L is primitive and parallel to no edge of Q.
inline SegmentSumCheck segment_sum_valid(const LatticePolygon& q, const LatticePolygon& l) {
    SegmentSumCheck r;
    if (!l.is_segment()) {
        r.reason = "summand is not a lattice segment";
        return r;
    }
    Point2 d = l.vertices()[1] - l.vertices()[0];
    if (gcd_ll(d.x, d.y) != 1) {
        r.reason = "segment has interior lattice points";
        return r;
    }
    for (const auto& e : q.oriented_edges().edges)
        if (cross(e, d) == 0) {
            r.reason = "segment parallel to an edge of the diagram";
            return r;
        }
    r.ok = true;
    r.reason = "segment is primitive and parallel to no edge";
    return r;
}

// ---- text / JSON-ish parsing of the two accepted polygon input forms ----

inline std::vector<Point2> parse_vertex_list(const std::string& text) {
    std::vector<Point2> pts;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == ';' ||
                                   text[i] == ','))
            ++i;
    };
    auto parse_long = [&]() -> long long {
        skip_ws();
        size_t j = i;
        if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
        size_t k = j;
        while (k < text.size() && isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (k == j) throw std::invalid_argument("polygon parse error near position " + std::to_string(i));
        long long v = std::stoll(text.substr(i, k - i));
        i = k;
        return v;
    };
    while (true) {
        skip_ws();
        if (i >= text.size() || text[i] == ']') break;
        if (text[i] == '(' || text[i] == '[') {
            ++i;
            long long x = parse_long();
            skip_ws();
            if (i < text.size() && text[i] == ',') ++i;
            long long y = parse_long();
            skip_ws();
            if (i >= text.size() || (text[i] != ')' && text[i] != ']'))
                throw std::invalid_argument("polygon parse error: unterminated pair");
            ++i;
            pts.push_back({x, y});
        } else {
            throw std::invalid_argument("polygon parse error near position " + std::to_string(i));
        }
    }
    if (pts.empty()) throw std::invalid_argument("polygon parse error: no vertices");
    return pts;
}

inline LatticePolygon polygon_from_text(const std::string& text) {
    std::string t = text;
    // strip one outer [ ... ] wrapper of the JSON array-of-pairs form
    auto first = t.find_first_not_of(" \t\n");
    auto last = t.find_last_not_of(" \t\n");
    if (first != std::string::npos && t[first] == '[' && t[last] == ']') {
        std::string inner = t.substr(first + 1, last - first - 1);
        if (inner.find('[') != std::string::npos || inner.find('(') != std::string::npos)
            t = inner;
    }
    return LatticePolygon::from_vertices(parse_vertex_list(t));
}

}  // namespace reebscope
