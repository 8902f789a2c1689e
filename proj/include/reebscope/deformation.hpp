#pragma once

// Altmann deformation combinatorics for toric diagrams: the Minkowski summand
// cone C(P), maximal and lattice-maximal decompositions, the Minkowski-scheme
// generators g_k, the GMSW fat-point verification, versal base dimensions,
// and tautological cones of lattice maximal decompositions.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "reebscope/families.hpp"
#include "reebscope/poly.hpp"
#include "reebscope/polygon.hpp"

namespace reebscope {

// ---- exact linear algebra over Q (small dense systems) --------------------

namespace deformation_detail {

using Mat = std::vector<std::vector<BigRat>>;

inline int row_reduce(Mat& m) {  // returns rank; reduced row echelon form
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        BigRat inv = BigRat(1) / m[rank][c];
        for (int j = 0; j < cols; ++j) m[rank][j] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            BigRat f = m[r][c];
            for (int j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace deformation_detail

// ---- summand space and summand cone ---------------------------------------

struct SummandSpace {
    int edge_count = 0;
    std::vector<std::vector<BigRat>> basis;  // spanning V(P), dim = N - 2
};

inline SummandSpace summand_space(const LatticePolygon& p) {
    auto edges = p.oriented_edges().edges;
    const int n = static_cast<int>(edges.size());
    // kernel of the 2 x N matrix with columns d_i
    deformation_detail::Mat m(2, std::vector<BigRat>(n));
    for (int i = 0; i < n; ++i) {
        m[0][i] = BigRat(static_cast<long>(edges[i].x));
        m[1][i] = BigRat(static_cast<long>(edges[i].y));
    }
    int rank = deformation_detail::row_reduce(m);
    std::vector<int> pivots, frees;
    {
        int r = 0;
        for (int c = 0; c < n; ++c) {
            if (r < rank && m[r][c] == 1 &&
                [&] {  // pivot column test
                    for (int rr = 0; rr < rank; ++rr)
                        if (rr != r && m[rr][c] != 0) return false;
                    return true;
                }()) {
                pivots.push_back(c);
                ++r;
            } else {
                frees.push_back(c);
            }
        }
    }
    SummandSpace s;
    s.edge_count = n;
    for (int f : frees) {
        std::vector<BigRat> v(n, BigRat(0));
        v[f] = 1;
        for (int r = 0; r < rank; ++r) v[pivots[r]] = -m[r][f];
        s.basis.push_back(std::move(v));
    }
    return s;
}

struct SummandGenerator {
    std::vector<BigInt> t;     // integer-primitive coefficients on the edges
    LatticePolygon summand;    // walked polygon, translation-normalized
};

struct SummandCone {
    std::vector<Point2> edges;
    std::vector<SummandGenerator> generators;
};

// walk the scaled edges t_i d_i in traversal order; the result is the summand
// polygon (t integer, nonnegative)
inline LatticePolygon walk_summand(const std::vector<Point2>& edges, const std::vector<BigInt>& t) {
    std::vector<Point2> pts{{0, 0}};
    Point2 cur{0, 0};
    for (size_t i = 0; i < edges.size(); ++i) {
        if (t[i] == 0) continue;
        long long k = to_long(t[i]);
        cur = cur + Point2{k * edges[i].x, k * edges[i].y};
        pts.push_back(cur);
    }
    return LatticePolygon::from_vertices(pts).normalized();
}

// Minimal generators of C(P) = V(P) ∩ R^N_{>=0}: supports S where the edge
// matrix restricted to S has a one-dimensional kernel with a strictly
// positive generator.
inline SummandCone summand_cone(const LatticePolygon& p) {
    if (p.is_segment()) {
        SummandCone sc;
        sc.edges = p.oriented_edges().edges;
        sc.generators.push_back({{BigInt(1), BigInt(1)}, p.normalized()});
        return sc;
    }
    auto edges = p.oriented_edges().edges;
    const int n = static_cast<int>(edges.size());
    SummandCone sc;
    sc.edges = edges;
    std::set<std::vector<BigInt>> seen;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        if (idx.size() < 2) continue;
        // kernel of the 2 x |S| system must be one-dimensional with a
        // strictly positive generator
        deformation_detail::Mat m(2, std::vector<BigRat>(idx.size()));
        for (size_t j = 0; j < idx.size(); ++j) {
            m[0][j] = BigRat(static_cast<long>(edges[idx[j]].x));
            m[1][j] = BigRat(static_cast<long>(edges[idx[j]].y));
        }
        auto mr = m;
        int rank = deformation_detail::row_reduce(mr);
        if (static_cast<int>(idx.size()) - rank != 1) continue;
        // kernel generator: free column is the last non-pivot one
        std::vector<BigRat> v(idx.size(), BigRat(0));
        {
            std::vector<int> pivots;
            std::vector<int> frees;
            int r = 0;
            for (int c = 0; c < static_cast<int>(idx.size()); ++c) {
                bool is_pivot = false;
                if (r < rank && mr[r][c] == 1) {
                    is_pivot = true;
                    for (int rr = 0; rr < rank; ++rr)
                        if (rr != r && mr[rr][c] != 0) is_pivot = false;
                }
                if (is_pivot) {
                    pivots.push_back(c);
                    ++r;
                } else {
                    frees.push_back(c);
                }
            }
            if (frees.size() != 1) continue;
            v[frees[0]] = 1;
            for (int rr = 0; rr < rank; ++rr) v[pivots[rr]] = -mr[rr][frees[0]];
        }
        bool positive = true;
        for (const auto& x : v)
            if (!(x > 0)) positive = false;
        if (!positive) continue;
        // clear denominators, divide by content
        BigInt den_lcm = 1;
        for (const auto& x : v) den_lcm = lcm(den_lcm, x.get_den());
        std::vector<BigInt> t(n, BigInt(0));
        BigInt g = 0;
        for (size_t j = 0; j < idx.size(); ++j) {
            BigInt val = v[j].get_num() * exact_div(den_lcm, v[j].get_den());
            t[idx[j]] = val;
            g = gcd(g, val);
        }
        if (g > 1)
            for (auto& x : t) x = exact_div(x, g);
        if (seen.insert(t).second) sc.generators.push_back({t, walk_summand(edges, t)});
    }
    std::sort(sc.generators.begin(), sc.generators.end(),
              [](const SummandGenerator& a, const SummandGenerator& b) { return a.t < b.t; });
    return sc;
}

// ---- lattice maximal decompositions ----------------------------------------

struct EdgePartitionDecomposition {
    std::vector<std::vector<int>> blocks;   // partition of edge indices, blocks sorted
    std::vector<LatticePolygon> summands;   // translation-normalized, one per block
};

namespace deformation_detail {

inline std::optional<LatticePolygon> block_summand(const std::vector<Point2>& edges,
                                                   const std::vector<int>& block) {
    Point2 sum{0, 0};
    for (int i : block) sum = sum + edges[i];
    if (sum != Point2{0, 0}) return std::nullopt;
    if (block.size() == 2) {
        // antiparallel pair walks to a segment
        return LatticePolygon::segment({0, 0}, edges[block[0]]).normalized();
    }
    if (block.size() == 3) {
        // pairwise non-parallel edges walk (angle-sorted) to a triangle
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = i + 1; j < 3; ++j)
                if (cross(edges[block[i]], edges[block[j]]) == 0) return std::nullopt;
        std::vector<Point2> dirs{edges[block[0]], edges[block[1]], edges[block[2]]};
        std::sort(dirs.begin(), dirs.end(), edge_angle_less);
        std::vector<Point2> pts{{0, 0}, dirs[0], dirs[0] + dirs[1]};
        return LatticePolygon::from_vertices(pts).normalized();
    }
    return std::nullopt;
}

inline void partition_rec(const std::vector<Point2>& edges, std::vector<int>& remaining,
                          std::vector<std::vector<int>>& blocks,
                          std::vector<EdgePartitionDecomposition>& out) {
    if (remaining.empty()) {
        if (blocks.size() < 2) return;  // the trivial one-summand partition
        EdgePartitionDecomposition d;
        d.blocks = blocks;
        std::sort(d.blocks.begin(), d.blocks.end());
        for (const auto& blk : d.blocks) {
            auto s = block_summand(edges, blk);
            d.summands.push_back(*s);
        }
        out.push_back(std::move(d));
        return;
    }
    int first = remaining.front();
    // pair blocks
    for (size_t j = 1; j < remaining.size(); ++j) {
        std::vector<int> blk{first, remaining[j]};
        if (!block_summand(edges, blk)) continue;
        std::vector<int> rest;
        for (size_t k = 1; k < remaining.size(); ++k)
            if (k != j) rest.push_back(remaining[k]);
        blocks.push_back(blk);
        partition_rec(edges, rest, blocks, out);
        blocks.pop_back();
    }
    // triple blocks
    for (size_t j = 1; j < remaining.size(); ++j)
        for (size_t k = j + 1; k < remaining.size(); ++k) {
            std::vector<int> blk{first, remaining[j], remaining[k]};
            if (!block_summand(edges, blk)) continue;
            std::vector<int> rest;
            for (size_t z = 1; z < remaining.size(); ++z)
                if (z != j && z != k) rest.push_back(remaining[z]);
            blocks.push_back(blk);
            partition_rec(edges, rest, blocks, out);
            blocks.pop_back();
        }
}

}  // namespace deformation_detail

// All partitions of the oriented edge set into zero-sum blocks of size 2 or 3
// whose walks yield segments/triangles; empty when none exist. The partition
// into a single block (the polygon itself) is never included.
inline std::vector<EdgePartitionDecomposition> lattice_maximal_decompositions(const LatticePolygon& p) {
    auto validation = validate_toric_diagram(p);
    if (!validation.valid())
        throw std::invalid_argument("lattice_maximal_decompositions: " + validation.reason());
    auto edges = p.oriented_edges().edges;
    std::vector<int> remaining(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) remaining[i] = static_cast<int>(i);
    std::vector<EdgePartitionDecomposition> out;
    std::vector<std::vector<int>> blocks;
    deformation_detail::partition_rec(edges, remaining, blocks, out);
    // dedupe by block structure (the recursion produces each partition once, but
    // keep this canonical regardless)
    std::sort(out.begin(), out.end(),
              [](const EdgePartitionDecomposition& a, const EdgePartitionDecomposition& b) {
                  return a.blocks < b.blocks;
              });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const EdgePartitionDecomposition& a, const EdgePartitionDecomposition& b) {
                              return a.blocks == b.blocks;
                          }),
              out.end());
    return out;
}

// ---- maximal (rational) decompositions --------------------------------------

// Coefficient vectors c >= 0 over the summand-cone generators with
// sum_i c_i * t_i = (1,...,1); the vertices of that solution polytope are the
// maximal decompositions (Macaulay2 MP-matrix semantics). Vertices are basic
// feasible solutions: enumerate independent column subsets of full rank,
// pruning dependent prefixes.
inline std::vector<std::vector<BigRat>> maximal_decompositions(const LatticePolygon& p) {
    auto sc = summand_cone(p);
    const int n = static_cast<int>(sc.edges.size());
    const int k = static_cast<int>(sc.generators.size());
    // overall column rank of the generator matrix
    int full_rank;
    {
        deformation_detail::Mat m(n, std::vector<BigRat>(k));
        for (int r = 0; r < n; ++r)
            for (int j = 0; j < k; ++j) m[r][j] = BigRat(sc.generators[j].t[r]);
        full_rank = deformation_detail::row_reduce(m);
    }
    std::vector<std::vector<BigRat>> out;
    std::set<std::vector<std::pair<int, std::string>>> dedupe;
    // echelon rows of the chosen columns, kept alongside the chosen indices
    deformation_detail::Mat echelon;  // each row: length-n reduced column residual
    std::vector<int> chosen;
    auto residual = [&](int col) {
        std::vector<BigRat> v(n);
        for (int r = 0; r < n; ++r) v[r] = BigRat(sc.generators[col].t[r]);
        for (const auto& row : echelon) {
            int piv = -1;
            for (int r = 0; r < n; ++r)
                if (row[r] != 0) {
                    piv = r;
                    break;
                }
            if (piv >= 0 && v[piv] != 0) {
                BigRat f = v[piv] / row[piv];
                for (int r = 0; r < n; ++r) v[r] -= f * row[r];
            }
        }
        return v;
    };
    auto solve_leaf = [&]() {
        deformation_detail::Mat m(n, std::vector<BigRat>(chosen.size() + 1));
        for (int r = 0; r < n; ++r) {
            for (size_t j = 0; j < chosen.size(); ++j) m[r][j] = BigRat(sc.generators[chosen[j]].t[r]);
            m[r][chosen.size()] = 1;
        }
        deformation_detail::row_reduce(m);
        std::vector<BigRat> c(k, BigRat(0));
        for (size_t r = 0; r < chosen.size(); ++r) {
            int pc = -1;
            for (size_t j = 0; j < chosen.size(); ++j)
                if (m[r][j] != 0) {
                    pc = static_cast<int>(j);
                    break;
                }
            if (pc < 0) return;  // inconsistent (cannot happen: full-rank basis spans 1)
            if (m[r][chosen.size()] < 0) return;
            c[chosen[pc]] = m[r][chosen.size()];
        }
        std::vector<std::pair<int, std::string>> key;
        for (int i = 0; i < k; ++i)
            if (c[i] != 0) key.emplace_back(i, to_string(c[i]));
        if (dedupe.insert(key).second) out.push_back(std::move(c));
    };
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(chosen.size()) == full_rank) {
            solve_leaf();
            return;
        }
        for (int col = start; col < k; ++col) {
            auto v = residual(col);
            bool zero = true;
            for (const auto& x : v)
                if (x != 0) zero = false;
            if (zero) continue;  // dependent on the chosen prefix
            echelon.push_back(std::move(v));
            chosen.push_back(col);
            rec(col + 1);
            chosen.pop_back();
            echelon.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    });
    return out;
}

// ---- Minkowski scheme ideal --------------------------------------------------

struct SchemeIdeal {
    int k0 = 1;
    // generators[k-1] = the pair of coordinate components of g_k(t) = sum t_i^k d_i
    std::vector<std::array<MultiPoly, 2>> generators;
};

inline long long lattice_width_bound(const LatticePolygon& p) {
    std::vector<Point2> dirs{{1, 0}, {0, 1}};
    for (const auto& e : p.oriented_edges().edges) {
        long long g = gcd_ll(e.x, e.y);
        dirs.push_back({-e.y / g, e.x / g});
    }
    long long best = -1;
    for (const auto& u : dirs) {
        long long lo = 0, hi = 0;
        bool first = true;
        for (const auto& v : p.vertices()) {
            long long s = u.x * v.x + u.y * v.y;
            if (first) {
                lo = hi = s;
                first = false;
            } else {
                lo = std::min(lo, s);
                hi = std::max(hi, s);
            }
        }
        long long w = hi - lo;
        if (best < 0 || w < best) best = w;
    }
    return std::max(best, 1LL);
}

inline SchemeIdeal scheme_ideal(const LatticePolygon& p) {
    auto edges = p.oriented_edges().edges;
    const int n = static_cast<int>(edges.size());
    SchemeIdeal ideal;
    ideal.k0 = static_cast<int>(lattice_width_bound(p));
    for (int k = 1; k <= ideal.k0; ++k) {
        MultiPoly gx(n), gy(n);
        for (int i = 0; i < n; ++i) {
            Exponents e(n, 0);
            e[i] = k;
            gx.add_term(e, BigRat(static_cast<long>(edges[i].x)));
            gy.add_term(e, BigRat(static_cast<long>(edges[i].y)));
        }
        ideal.generators.push_back({std::move(gx), std::move(gy)});
    }
    return ideal;
}

// ---- GMSW fat point -----------------------------------------------------------

// Substitutes the corrected two-parameter solution of V(Y^{p,q}),
//   t1 = t,  t2 = t - (p/(p+q)) s,  t3 = t - (q/(p+q)) s,  t4 = t - s,
// into the scheme generators and verifies exactly that every g_k (k >= 2) is
// divisible by s^2 while the degree-2 generator produces a nonzero constant
// times s^2; the t-direction is the rho(P)-line quotiented out by l, so the
// Minkowski scheme is the fat point Spec C[s]/(s^2).
namespace deformation_detail {

inline bool fat_point_check(const std::vector<Point2>& edges, long p, long q) {
    // parametrized t_i as polynomials in (t, s)
    const BigRat pq{p + q};
    std::vector<MultiPoly> ts(4, MultiPoly(2));
    MultiPoly t = MultiPoly::variable(2, 0), s = MultiPoly::variable(2, 1);
    ts[0] = t;
    ts[1] = t - s * (BigRat(p) / pq);
    ts[2] = t - s * (BigRat(q) / pq);
    ts[3] = t - s;
    // g_1 must vanish identically (the parametrization spans V)
    for (int comp = 0; comp < 2; ++comp) {
        MultiPoly g1(2);
        for (int i = 0; i < 4; ++i)
            g1 += ts[i] * BigRat(static_cast<long>(comp == 0 ? edges[i].x : edges[i].y));
        if (!g1.is_zero()) return false;
    }
    MultiPoly s2 = s * s;
    bool nonzero_quadric = false;
    long long k0 = 2 * p + 2;  // generous width bound for Y^{p,q}
    for (long long k = 2; k <= k0; ++k) {
        for (int comp = 0; comp < 2; ++comp) {
            MultiPoly gk(2);
            for (int i = 0; i < 4; ++i)
                gk += ts[i].pow(static_cast<unsigned>(k)) *
                      BigRat(static_cast<long>(comp == 0 ? edges[i].x : edges[i].y));
            if (gk.is_zero()) continue;
            if (!gk.divisible_by(s2)) return false;
            if (k == 2) {
                auto quot = gk.divide_exact(s2);
                if (quot && quot->is_constant() && quot->constant_value() != 0) nonzero_quadric = true;
            }
        }
    }
    return nonzero_quadric;
}

}  // namespace deformation_detail

inline bool gmsw_scheme_is_fat_point(long p, long q) {
    if (!(p > q && q >= 1)) throw std::invalid_argument("gmsw_scheme_is_fat_point: need p > q >= 1");
    LatticePolygon y = family_gmsw(p, q);
    // the proof's labeling d1=(1,0), d2=(p-1,p), d3=(-q-1,-q), d4=(-p+q+1,-p+q)
    // coincides with the canonical traversal from (0,0)
    auto edges = y.oriented_edges().edges;
    return deformation_detail::fat_point_check(edges, p, q);
}

// ---- versal base and tautological cone ----------------------------------------

// one entry m per lattice maximal decomposition into (m+1) summands
inline std::vector<int> versal_base(const LatticePolygon& p) {
    std::vector<int> dims;
    for (const auto& d : lattice_maximal_decompositions(p))
        dims.push_back(static_cast<int>(d.blocks.size()) - 1);
    std::sort(dims.begin(), dims.end());
    return dims;
}

struct TautologicalCone {
    int ambient_rank = 0;
    std::vector<std::vector<long long>> generators;
};

// Cone( union_k P_k x {e_k} ): generators (v, e_k) for each vertex v of the
// k-th summand, in the caller-supplied summand order; vertices listed in
// (x, y) lexicographic order within each summand.
inline TautologicalCone tautological_total_cone(const LatticePolygon& p,
                                                const std::vector<LatticePolygon>& summands) {
    if (summands.size() < 2)
        throw std::invalid_argument("tautological_total_cone: need at least two summands");
    LatticePolygon sum = summands[0];
    for (size_t i = 1; i < summands.size(); ++i) sum = minkowski_sum(sum, summands[i]);
    if (!(sum.normalized() == p.normalized()))
        throw std::invalid_argument("tautological_total_cone: decomposition does not sum to the diagram");
    TautologicalCone tc;
    const int m1 = static_cast<int>(summands.size());
    tc.ambient_rank = 2 + m1;
    for (int k = 0; k < m1; ++k) {
        auto vs = summands[k].vertices();
        std::sort(vs.begin(), vs.end(), yx_less);
        for (const auto& v : vs) {
            std::vector<long long> gen(2 + m1, 0);
            gen[0] = v.x;
            gen[1] = v.y;
            gen[2 + k] = 1;
            tc.generators.push_back(std::move(gen));
        }
    }
    return tc;
}

// ---- Theorem B criterion --------------------------------------------------------

struct AdmissibleSegment {
    LatticePolygon segment;
    LatticePolygon diagram;  // Y^{p,q} + segment
    std::vector<EdgePartitionDecomposition> decompositions;
};

// exactly the segments L making Y^{p,q} + L a toric diagram with a lattice
// maximal decomposition: Conv{(0,0),(1,1)} when q = 1, and
// Conv{(0,0),(-p+q+2,-p+q)} when p - q is odd
inline std::vector<AdmissibleSegment> theorem_b_criterion(long p, long q) {
    if (!(p > q && q >= 1)) throw std::invalid_argument("theorem_b_criterion: need p > q >= 1");
    LatticePolygon y = family_gmsw(p, q);
    std::vector<LatticePolygon> candidates;
    if (q == 1) candidates.push_back(LatticePolygon::segment({0, 0}, {1, 1}));
    if ((p - q) % 2 == 1) candidates.push_back(LatticePolygon::segment({0, 0}, {-p + q + 2, -p + q}));
    std::vector<AdmissibleSegment> out;
    for (const auto& l : candidates) {
        if (!segment_sum_valid(y, l).ok) continue;
        LatticePolygon sum = minkowski_sum(y, l);
        auto decs = lattice_maximal_decompositions(sum);
        if (decs.empty()) continue;
        out.push_back({l, sum, std::move(decs)});
    }
    return out;
}

}  // namespace reebscope
