#pragma once

// Rank-3 pointed rational polyhedral cones with double-description data
// (primitive rays and primitive inward facet normals, both in CCW cyclic
// order). Provides the cone over a toric diagram, the dual (moment) cone,
// the goodness test, half-open simplicial decompositions with fundamental
// parallelepiped points, and the Hilbert basis of the lattice semigroup.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "reebscope/intmatrix.hpp"
#include "reebscope/polygon.hpp"

namespace reebscope {

using Vec3 = std::array<long long, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }

inline long long dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline long long det3_ll(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

inline Vec3 primitive(Vec3 v) {
    long long g = std::gcd(std::gcd(std::abs(v[0]), std::abs(v[1])), std::abs(v[2]));
    if (g > 1) {
        v[0] /= g;
        v[1] /= g;
        v[2] /= g;
    }
    return v;
}

inline bool vec3_less(const Vec3& a, const Vec3& b) {  // by (z, x, y)
    if (a[2] != b[2]) return a[2] < b[2];
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
}

struct GorensteinCertificate {
    std::optional<Vec3> gamma;
};

class PolyCone3 {
public:
    // rays must be the extreme rays in counter-clockwise cyclic order (either
    // orientation is accepted and normalized). Facet normals are derived.
    static PolyCone3 from_rays(std::vector<Vec3> rays) {
        if (rays.size() < 3) throw std::invalid_argument("PolyCone3: need at least 3 rays");
        for (auto& r : rays) r = primitive(r);
        // orientation: make consecutive triples positively oriented
        long long orient = det3_ll(rays[0], rays[1], rays[2]);
        if (orient == 0) throw std::invalid_argument("PolyCone3: consecutive rays are coplanar");
        if (orient < 0) std::reverse(rays.begin(), rays.end());
        // rotate so the (z,x,y)-least ray comes first
        size_t best = 0;
        for (size_t i = 1; i < rays.size(); ++i)
            if (vec3_less(rays[i], rays[best])) best = i;
        std::rotate(rays.begin(), rays.begin() + best, rays.end());
        PolyCone3 c;
        c.rays_ = std::move(rays);
        const size_t k = c.rays_.size();
        for (size_t i = 0; i < k; ++i)
            c.normals_.push_back(primitive(cross(c.rays_[i], c.rays_[(i + 1) % k])));
        // double-description consistency: every ray weakly inside every facet,
        // with equality exactly on the two adjacent facets
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) {
                long long s = dot(c.normals_[j], c.rays_[i]);
                bool adjacent = (j == i) || ((j + 1) % k == i);
                if (adjacent ? s != 0 : s <= 0)
                    throw std::invalid_argument("PolyCone3: rays are not the CCW cycle of a pointed cone");
            }
        return c;
    }

    const std::vector<Vec3>& rays() const { return rays_; }
    const std::vector<Vec3>& facet_normals() const { return normals_; }
    size_t ray_count() const { return rays_.size(); }

    bool operator==(const PolyCone3& o) const { return rays_ == o.rays_; }

    bool contains(const Vec3& x) const {
        for (const auto& n : normals_)
            if (dot(n, x) < 0) return false;
        return true;
    }
    bool contains_strict(const Vec3& x) const {
        for (const auto& n : normals_)
            if (dot(n, x) <= 0) return false;
        return true;
    }

    // an integral interior point (sum of the primitive rays)
    Vec3 interior_point() const {
        Vec3 s{0, 0, 0};
        for (const auto& r : rays_) s = s + r;
        return s;
    }

private:
    std::vector<Vec3> rays_;
    std::vector<Vec3> normals_;
};

// cone over an arbitrary convex polygon (no diagram validation)
inline PolyCone3 cone_over_polygon(const LatticePolygon& p) {
    if (p.is_segment()) throw std::invalid_argument("cone_over_polygon: polygon is degenerate");
    std::vector<Vec3> rays;
    for (const auto& v : p.vertices()) rays.push_back({v.x, v.y, 1});
    return PolyCone3::from_rays(std::move(rays));
}

struct DiagramCone {
    PolyCone3 cone;
    GorensteinCertificate certificate;
};

inline DiagramCone cone_over_diagram(const LatticePolygon& p) {
    auto v = validate_toric_diagram(p);
    if (!v.valid()) throw std::invalid_argument("cone_over_diagram: " + v.reason());
    DiagramCone d{cone_over_polygon(p), {}};
    d.certificate.gamma = Vec3{0, 0, 1};
    for (const auto& r : d.cone.rays())
        if (dot(*d.certificate.gamma, r) != 1) throw std::logic_error("cone_over_diagram: gamma pairing failed");
    return d;
}

// Gorenstein covector for a general pointed cone, when one exists.
inline GorensteinCertificate gorenstein_certificate(const PolyCone3& c) {
    // solve <g, r_i> = 1 for the first three (independent) rays over Q
    const auto& r = c.rays();
    long long d = det3_ll(r[0], r[1], r[2]);
    // Cramer: g = (adj^T scaled); g_j integral required
    Vec3 cols[3] = {cross(r[1], r[2]), cross(r[2], r[0]), cross(r[0], r[1])};
    // g = (1/d) * (cols[0] + cols[1] + cols[2]) componentwise combination:
    // <g, r_i> = 1 means g = (R^{-1}) * (1,1,1) with R rows r_i.
    Vec3 num{cols[0][0] + cols[1][0] + cols[2][0], cols[0][1] + cols[1][1] + cols[2][1],
             cols[0][2] + cols[1][2] + cols[2][2]};
    GorensteinCertificate cert;
    if (num[0] % d || num[1] % d || num[2] % d) return cert;
    Vec3 g{num[0] / d, num[1] / d, num[2] / d};
    for (const auto& ray : c.rays())
        if (dot(g, ray) != 1) return cert;
    if (primitive(g) != g) return cert;  // gamma must be primitive
    cert.gamma = g;
    return cert;
}

inline PolyCone3 dual_cone(const PolyCone3& c) { return PolyCone3::from_rays(c.facet_normals()); }

struct GoodnessResult {
    bool good = false;
    std::optional<std::pair<Vec3, Vec3>> failing_face;  // generator pair of a bad 2-face of the dual
};

// Good cone test for a moment cone C*: every 2-face of the dual cone C must
// have its two primitive generators extend to a Z^3 basis, i.e. the gcd of
// the 2x2 minors of the generator matrix is 1 (unit elementary divisors).
inline GoodnessResult is_good(const PolyCone3& c_star) {
    GoodnessResult res;
    const auto dual_rays = c_star.facet_normals();  // rays of the dual cone C
    const size_t k = dual_rays.size();
    for (size_t i = 0; i < k; ++i) {
        const Vec3& a = dual_rays[i];
        const Vec3& b = dual_rays[(i + 1) % k];
        IntMatrix m(2, 3);
        for (int j = 0; j < 3; ++j) {
            m.at(0, j) = static_cast<long>(a[j]);
            m.at(1, j) = static_cast<long>(b[j]);
        }
        if (maximal_minor_gcd(m) != 1) {
            res.failing_face = {a, b};
            return res;
        }
    }
    res.good = true;
    return res;
}

struct SimplicialPiece {
    std::array<Vec3, 3> generators;
    std::vector<int> half_open_facets;     // facet i is opposite generators[i]
    long long index = 0;                   // |det|
    std::vector<Vec3> parallelepiped_points;  // lattice points of the half-open box
};

namespace detail {

// sign of <n, w + eps*e1 + eps^2*e2 + eps^3*e3> for the symbolic perturbation
inline int perturbed_sign(const Vec3& n, const Vec3& w) {
    long long s = dot(n, w);
    if (s != 0) return s > 0 ? 1 : -1;
    for (int i = 0; i < 3; ++i)
        if (n[i] != 0) return n[i] > 0 ? 1 : -1;
    throw std::logic_error("perturbed_sign: zero normal");
}

inline void fill_parallelepiped(SimplicialPiece& piece) {
    const Vec3& g0 = piece.generators[0];
    const Vec3& g1 = piece.generators[1];
    const Vec3& g2 = piece.generators[2];
    long long d = det3_ll(g0, g1, g2);
    // adjugate rows: lambda_i * det = <adj_i, q>
    Vec3 adj[3] = {cross(g1, g2), cross(g2, g0), cross(g0, g1)};
    if (d < 0) {
        d = -d;
        for (auto& a : adj) a = -a;
    }
    piece.index = d;
    bool open[3] = {false, false, false};
    for (int i : piece.half_open_facets) open[i] = true;
    long long bx = std::abs(g0[0]) + std::abs(g1[0]) + std::abs(g2[0]);
    long long by = std::abs(g0[1]) + std::abs(g1[1]) + std::abs(g2[1]);
    long long bz = std::abs(g0[2]) + std::abs(g1[2]) + std::abs(g2[2]);
    for (long long x = -bx; x <= bx; ++x)
        for (long long y = -by; y <= by; ++y)
            for (long long z = -bz; z <= bz; ++z) {
                Vec3 q{x, y, z};
                bool ok = true;
                for (int i = 0; i < 3 && ok; ++i) {
                    long long v = dot(adj[i], q);  // = lambda_i * d
                    ok = open[i] ? (v > 0 && v <= d) : (v >= 0 && v < d);
                }
                if (ok) piece.parallelepiped_points.push_back(q);
            }
    if (static_cast<long long>(piece.parallelepiped_points.size()) != d)
        throw std::logic_error("fill_parallelepiped: point count != index");
    std::sort(piece.parallelepiped_points.begin(), piece.parallelepiped_points.end(), vec3_less);
}

}  // namespace detail

// Fan triangulation from the canonical first ray, converted to a disjoint
// half-open tiling by the visible-facet rule against a perturbed interior
// point.
inline std::vector<SimplicialPiece> simplicial_decomposition(const PolyCone3& c) {
    const auto& rays = c.rays();
    if (rays.size() < 3) throw std::invalid_argument("simplicial_decomposition: fewer than 3 rays");
    Vec3 w = c.interior_point();
    std::vector<SimplicialPiece> pieces;
    for (size_t i = 1; i + 1 < rays.size(); ++i) {
        SimplicialPiece piece;
        piece.generators = {rays[0], rays[i], rays[i + 1]};
        for (int f = 0; f < 3; ++f) {
            const Vec3& a = piece.generators[(f + 1) % 3];
            const Vec3& b = piece.generators[(f + 2) % 3];
            Vec3 n = cross(a, b);
            if (dot(n, piece.generators[f]) < 0) n = -n;  // inner normal of the piece
            if (detail::perturbed_sign(n, w) < 0) piece.half_open_facets.push_back(f);
        }
        detail::fill_parallelepiped(piece);
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

// membership of a lattice point in a half-open piece
inline bool piece_contains(const SimplicialPiece& piece, const Vec3& q) {
    const Vec3& g0 = piece.generators[0];
    const Vec3& g1 = piece.generators[1];
    const Vec3& g2 = piece.generators[2];
    long long d = det3_ll(g0, g1, g2);
    Vec3 adj[3] = {cross(g1, g2), cross(g2, g0), cross(g0, g1)};
    if (d < 0) {
        d = -d;
        for (auto& a : adj) a = -a;
    }
    bool open[3] = {false, false, false};
    for (int i : piece.half_open_facets) open[i] = true;
    for (int i = 0; i < 3; ++i) {
        long long v = dot(adj[i], q);
        if (open[i] ? v <= 0 : v < 0) return false;
    }
    return true;
}

struct HilbertBasis {
    std::vector<Vec3> elements;  // sorted by (height, x, y) = (z, x, y)
    IntMatrix as_matrix() const {
        IntMatrix w(3, static_cast<int>(elements.size()));
        for (size_t j = 0; j < elements.size(); ++j)
            for (int i = 0; i < 3; ++i) w.at(i, static_cast<int>(j)) = static_cast<long>(elements[j][i]);
        return w;
    }
};

// Minimal generating set of C* ∩ Z^3: candidates are the rays plus all
// fundamental-parallelepiped points of a half-open simplicial decomposition;
// reducible candidates (h = h' + s with h' a kept generator, s a nonzero
// semigroup element) are removed in increasing order of a positive grading.
inline HilbertBasis hilbert_basis(const PolyCone3& c_star) {
    std::vector<Vec3> cands;
    for (const auto& r : c_star.rays()) cands.push_back(r);
    for (const auto& piece : simplicial_decomposition(c_star))
        for (const auto& q : piece.parallelepiped_points)
            if (q != Vec3{0, 0, 0}) cands.push_back(q);
    std::sort(cands.begin(), cands.end(), vec3_less);
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    Vec3 ell{0, 0, 0};  // strictly positive grading on C* \ {0}
    for (const auto& n : c_star.facet_normals()) ell = ell + n;
    std::stable_sort(cands.begin(), cands.end(),
                     [&](const Vec3& a, const Vec3& b) { return dot(ell, a) < dot(ell, b); });

    std::vector<Vec3> basis;
    for (const auto& h : cands) {
        bool reducible = false;
        for (const auto& b : basis) {
            Vec3 rest = h - b;
            if (rest != Vec3{0, 0, 0} && c_star.contains(rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(h);
    }
    std::sort(basis.begin(), basis.end(), vec3_less);
    return HilbertBasis{std::move(basis)};
}

// The Reeb cone as the strict inequality system <alpha_j, xi> > 0, one per
// Hilbert basis element.
inline std::vector<Vec3> reeb_cone(const HilbertBasis& basis) { return basis.elements; }

inline bool reeb_feasible(const std::vector<Vec3>& ineqs, const std::array<BigRat, 3>& xi) {
    for (const auto& a : ineqs) {
        BigRat v = BigRat(static_cast<long>(a[0])) * xi[0] + BigRat(static_cast<long>(a[1])) * xi[1] +
                   BigRat(static_cast<long>(a[2])) * xi[2];
        if (!(v > 0)) return false;
    }
    return true;
}

}  // namespace reebscope
