#pragma once

// The three named diagram families: GMSW quadrilaterals Y^{p,q}, the
// Cho-Futaki-Ono polygons P^{r,s}, and the quadrilateral-plus-segment
// hexagons Q^{p,q}. CFO and Q^{p,q} members are translated so that the
// lowest interior lattice point sits at the origin.

#include <stdexcept>
#include <string>

#include "reebscope/polygon.hpp"

namespace reebscope {

inline LatticePolygon family_gmsw(long p, long q) {
    if (!(p > q && q > 0)) throw std::invalid_argument("family_gmsw: need p > q > 0");
    return LatticePolygon::from_vertices({{0, 0}, {1, 0}, {p, p}, {p - q - 1, p - q}});
}

// translate so the (y,x)-lowest interior lattice point is at the origin
inline LatticePolygon origin_at_lowest_interior_point(const LatticePolygon& p) {
    auto interior = p.interior_lattice_points();
    if (interior.empty()) return p;
    return p.translated(-interior.front());
}

// P^{r,s} = L^1 + ... + L^r + Delta^s with L^j = Conv{(0,0),(1,j)} and
// Delta^s = Conv{(0,0),(0,1),(1,s+1)}; a (2r+3)-gon. Defined for s > r >= 1
// (for s <= r two summand edges are parallel and the sum has a non-primitive
// edge).
inline LatticePolygon family_cfo(long r, long s) {
    if (r < 1 || s < 1) throw std::invalid_argument("family_cfo: need r, s >= 1");
    if (s <= r)
        throw std::invalid_argument(
            "family_cfo: need s > r (otherwise a segment is parallel to a triangle edge and the sum is "
            "not a toric diagram)");
    std::vector<LatticePolygon> parts;
    for (long j = 1; j <= r; ++j) parts.push_back(LatticePolygon::segment({0, 0}, {1, j}));
    parts.push_back(LatticePolygon::from_vertices({{0, 0}, {0, 1}, {1, s + 1}}));
    return origin_at_lowest_interior_point(minkowski_sum(parts));
}

enum class QpqVariant { q1_segment, odd_segment };

inline QpqVariant qpq_variant_from_string(const std::string& s) {
    if (s == "q1-segment") return QpqVariant::q1_segment;
    if (s == "odd-segment") return QpqVariant::odd_segment;
    throw std::invalid_argument("unknown qpq variant: " + s + " (expected q1-segment or odd-segment)");
}

inline LatticePolygon qpq_segment(long p, long q, QpqVariant variant) {
    if (!(p > q && q > 0)) throw std::invalid_argument("family_qpq: need p > q > 0");
    if (variant == QpqVariant::q1_segment) {
        if (q != 1) throw std::invalid_argument("family_qpq: q1-segment variant needs q = 1");
        return LatticePolygon::segment({0, 0}, {1, 1});
    }
    if ((p - q) % 2 == 0)
        throw std::invalid_argument("family_qpq: odd-segment variant needs p - q odd");
    return LatticePolygon::segment({0, 0}, {-p + q + 2, -p + q});
}

inline LatticePolygon family_qpq(long p, long q, QpqVariant variant) {
    LatticePolygon y = family_gmsw(p, q);
    LatticePolygon l = qpq_segment(p, q, variant);
    auto check = segment_sum_valid(y, l);
    if (!check.ok) throw std::invalid_argument("family_qpq: " + check.reason);
    return origin_at_lowest_interior_point(minkowski_sum(y, l));
}

}  // namespace reebscope
