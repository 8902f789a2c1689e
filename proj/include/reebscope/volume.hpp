#pragma once

// The exact volume function via the vertex localization formula, damped
// Newton minimization of a0 on the slice c = 3 with a Miranda-certified
// enclosure of the minimizer, and the quasi-regular/irregular certificate
// via resultant elimination, spurious-factor removal, root isolation and
// the rational-root theorem.

#include <optional>
#include <string>
#include <vector>

#include "reebscope/cone.hpp"
#include "reebscope/families.hpp"
#include "reebscope/polygon.hpp"
#include "reebscope/ratfunc.hpp"
#include "reebscope/upoly.hpp"

namespace reebscope {

struct CertificateFailure : std::runtime_error {
    explicit CertificateFailure(const std::string& what) : std::runtime_error(what) {}
};

// ---- exact rational interval arithmetic ----------------------------------

struct QInterval {
    BigRat lo, hi;
    QInterval() : lo(0), hi(0) {}
    QInterval(BigRat l, BigRat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::logic_error("QInterval: inverted bounds");
    }
    static QInterval point(const BigRat& x) { return {x, x}; }
    BigRat mid() const { return (lo + hi) / 2; }
    BigRat width() const { return hi - lo; }
    bool contains(const BigRat& x) const { return lo <= x && x <= hi; }
    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    QInterval operator*(const QInterval& o) const {
        BigRat c[4] = {lo * o.lo, lo * o.hi, hi * o.lo, hi * o.hi};
        return {std::min({c[0], c[1], c[2], c[3]}), std::max({c[0], c[1], c[2], c[3]})};
    }
    QInterval operator/(const QInterval& o) const {
        if (sgn(o.lo) <= 0 && sgn(o.hi) >= 0)
            throw std::domain_error("QInterval: division by interval containing 0");
        return *this * QInterval{BigRat(1) / o.hi, BigRat(1) / o.lo};
    }
};

inline QInterval interval_eval_plain(const MultiPoly& p, const std::array<QInterval, 3>& box) {
    QInterval acc;
    for (const auto& [e, c] : p.terms()) {
        QInterval t = QInterval::point(c);
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < e[v]; ++k) t = t * box[v];
        acc = acc + t;
    }
    return acc;
}

// first-order centered form: p(m) + sum_i [dp/dx_i over box] * (box_i - m_i).
// Kills the dependency blowup of the expanded numerators (whose term
// magnitudes dwarf the evaluated value near the minimizer).
inline QInterval interval_eval(const MultiPoly& p, const std::array<QInterval, 3>& box) {
    std::array<BigRat, 3> m{box[0].mid(), box[1].mid(), box[2].mid()};
    QInterval acc = QInterval::point(p.eval({m[0], m[1], m[2]}));
    for (int v = 0; v < 3; ++v) {
        if (box[v].width() == 0 || p.degree_in(v) == 0) continue;
        QInterval dv = interval_eval_plain(p.derivative(v), box);
        acc = acc + dv * QInterval{box[v].lo - m[v], box[v].hi - m[v]};
    }
    return acc;
}

inline QInterval interval_eval(const RationalFunction3& f, const std::array<QInterval, 3>& box) {
    QInterval n = interval_eval(f.num(), box);
    QInterval d = QInterval::point(BigRat(1));
    for (const auto& [fac, e] : f.den_factors())
        for (int k = 0; k < e; ++k) d = d * interval_eval(fac, box);
    return n / d;
}

// ---- volume function (localization over the dual polytope) ---------------

namespace volume_detail {

inline MultiPoly lin_of(const Vec3& v) {
    MultiPoly p(3);
    p.add_term({1, 0, 0}, BigRat(static_cast<long>(v[0])));
    p.add_term({0, 1, 0}, BigRat(static_cast<long>(v[1])));
    p.add_term({0, 0, 1}, BigRat(static_cast<long>(v[2])));
    return p;
}

}  // namespace volume_detail

// a0(xi) = sum over the fan triangulation of the cone with respect to the
// central ray w (the height-one axis when the origin lies in the diagram) of
//   det(v_A, w, v_{A+1})^2 / (<U,xi> <A,xi> <B,xi>),
// with U, A, B the pairwise cross products. The squared primal determinant
// equals |det(U, A, B)|, which folds the orbifold index together with the
// covector scales.
inline RationalFunction3 volume_function(const LatticePolygon& p) {
    auto validation = validate_toric_diagram(p);
    if (!validation.valid()) throw std::invalid_argument("volume_function: " + validation.reason());
    Vec3 w{0, 0, 1};
    if (!p.contains({0, 0})) {
        auto [bx, by, bd] = p.vertex_barycenter();
        w = Vec3{bx, by, bd};  // integral interior ray when the origin lies outside
    }
    const auto& vs = p.vertices();
    RationalFunction3 a0;
    for (size_t i = 0; i < vs.size(); ++i) {
        Vec3 u{vs[i].x, vs[i].y, 1};
        Vec3 v{vs[(i + 1) % vs.size()].x, vs[(i + 1) % vs.size()].y, 1};
        long long d = det3_ll(u, w, v);
        if (d == 0) continue;  // degenerate triangle at the anchor
        Vec3 cu = cross(u, v), ca = cross(u, w), cb = cross(w, v);
        a0 += RationalFunction3(
            MultiPoly::constant(3, BigRat(static_cast<long>(d * d))),
            {{volume_detail::lin_of(cu), 1}, {volume_detail::lin_of(ca), 1}, {volume_detail::lin_of(cb), 1}});
    }
    return a0;
}

// ---- Reeb minimization ----------------------------------------------------

struct CoordinateCertificate {
    bool rational = false;
    std::optional<BigRat> rational_value;
    MultiPoly eliminant;  // square-free univariate eliminant, spurious factors removed
    std::vector<MultiPoly> spurious_factors_removed;
    QInterval isolating_interval;
    std::vector<BigRat> rational_candidates_tested;
};

struct ReebResult {
    Point2 origin_shift{0, 0};  // the diagram was translated by -shift before minimizing
    QInterval a, b;             // certified enclosures of the minimizer at c = 3
    QInterval value;            // enclosure of a0 at the minimizer
    std::optional<BigRat> exact_a, exact_b, exact_value;  // set when rational
    int iterations = 0;
    unsigned precision_bits = 0;
    bool classified = false;
    bool quasi_regular = false;
    CoordinateCertificate cert_a, cert_b;
};

namespace volume_detail {

struct SliceData {
    RationalFunction3 f;  // a0 at c = 3 (c still present as a dead variable)
    RationalFunction3 ga, gb;
    RationalFunction3 haa, hab, hbb;
    std::vector<MultiPoly> feasibility_forms;  // oriented positive on the Reeb chamber
};

inline SliceData make_slice(const RationalFunction3& a0, const BigRat& start_a, const BigRat& start_b) {
    SliceData s;
    s.f = a0.substitute_const(2, BigRat(3));
    s.ga = s.f.derivative(0);
    s.gb = s.f.derivative(1);
    s.haa = s.ga.derivative(0);
    s.hab = s.ga.derivative(1);
    s.hbb = s.gb.derivative(1);
    std::vector<BigRat> x0{start_a, start_b, BigRat(3)};
    for (const auto& [fac, e] : s.f.den_factors()) {
        BigRat v = fac.eval(x0);
        if (v == 0) throw CertificateFailure("minimize_volume: start point on a denominator locus");
        s.feasibility_forms.push_back(sgn(v) > 0 ? fac : -fac);
    }
    return s;
}

inline bool strictly_feasible(const SliceData& s, const BigRat& a, const BigRat& b) {
    std::vector<BigRat> x{a, b, BigRat(3)};
    for (const auto& form : s.feasibility_forms)
        if (!(form.eval(x) > 0)) return false;
    return true;
}

}  // namespace volume_detail

// Damped Newton on (a,b) at c = 3 from 3*(vertex barycenter), with exact
// rational evaluation, dyadic rounding to `bits` fractional bits, and a
// preconditioned Miranda box certificate around the final iterate. The
// diagram is first translated so its lowest interior lattice point (when one
// exists) is the origin; the shift is reported in the result. a0_in must be
// volume_function(p) (or equal to it as a rational function).
inline ReebResult minimize_volume(const RationalFunction3& a0_in, const LatticePolygon& p,
                                  unsigned bits = 256) {
    ReebResult res;
    res.precision_bits = bits;
    auto interior = p.interior_lattice_points();
    RationalFunction3 a0 = a0_in;
    LatticePolygon gauge = p;
    if (!interior.empty() && interior.front() != Point2{0, 0}) {
        Point2 t = interior.front();
        res.origin_shift = t;
        gauge = p.translated({-t.x, -t.y});
        // a0_{P-t}(a,b,c) = a0_P(a + t_x c, b + t_y c, c)
        MultiPoly sub_a = MultiPoly::variable(3, 0) + MultiPoly::variable(3, 2) * BigRat(static_cast<long>(t.x));
        MultiPoly sub_b = MultiPoly::variable(3, 1) + MultiPoly::variable(3, 2) * BigRat(static_cast<long>(t.y));
        a0 = a0_in.substitute(0, sub_a).substitute(1, sub_b);
    }
    auto [bx, by, bd] = gauge.vertex_barycenter();
    BigRat xa = make_rat(3 * bx, bd), xb = make_rat(3 * by, bd);
    auto slice = volume_detail::make_slice(a0, xa, xb);
    auto eval3 = [&](const RationalFunction3& rf, const BigRat& u, const BigRat& v) {
        return rf.eval({u, v, BigRat(3)});
    };

    const BigRat tol = make_rat(BigInt(1), pow(BigInt(10), 40));  // on |grad|^2
    for (int iter = 0;; ++iter) {
        if (iter >= 200) throw CertificateFailure("minimize_volume: no convergence after 200 damped steps");
        res.iterations = iter;
        BigRat ga = eval3(slice.ga, xa, xb);
        BigRat gb = eval3(slice.gb, xa, xb);
        if (ga * ga + gb * gb <= tol) break;
        BigRat haa = eval3(slice.haa, xa, xb);
        BigRat hab = eval3(slice.hab, xa, xb);
        BigRat hbb = eval3(slice.hbb, xa, xb);
        BigRat det = haa * hbb - hab * hab;
        if (!(det > 0 && haa > 0))
            throw CertificateFailure("minimize_volume: Hessian not positive definite at iterate");
        BigRat sa = -(hbb * ga - hab * gb) / det;
        BigRat sb = -(haa * gb - hab * ga) / det;
        BigRat fx = eval3(slice.f, xa, xb);
        BigRat lambda(1);
        bool stepped = false;
        for (int h = 0; h < 90 && !stepped; ++h) {
            BigRat na = xa + lambda * sa, nb = xb + lambda * sb;
            if (volume_detail::strictly_feasible(slice, na, nb) && eval3(slice.f, na, nb) < fx) {
                BigRat ra = round_dyadic(na, bits), rb = round_dyadic(nb, bits);
                if (volume_detail::strictly_feasible(slice, ra, rb)) {
                    xa = ra;
                    xb = rb;
                } else {
                    xa = na;
                    xb = nb;
                }
                stepped = true;
            }
            lambda /= 2;
        }
        if (!stepped) break;  // stationary up to rounding; certification decides
    }

    // Miranda certification of the box [x +- delta]^2, preconditioned by the
    // inverse Hessian: G = H^{-1} grad changes sign componentwise across the
    // box, so the unique critical point lies inside.
    for (int attempt = 0;; ++attempt) {
        BigRat delta = make_rat(BigInt(1), BigInt(1) << 44);
        BigRat haa = eval3(slice.haa, xa, xb);
        BigRat hab = eval3(slice.hab, xa, xb);
        BigRat hbb = eval3(slice.hbb, xa, xb);
        BigRat det = haa * hbb - hab * hab;
        BigRat m00 = hbb / det, m01 = -hab / det, m11 = haa / det;
        // form the preconditioned gradient symbolically so that the interval
        // evaluation sees the cancellation (M H ~ identity) directly
        RationalFunction3 g1 = slice.ga * RationalFunction3::constant(3, m00) +
                               slice.gb * RationalFunction3::constant(3, m01);
        RationalFunction3 g2 = slice.ga * RationalFunction3::constant(3, m01) +
                               slice.gb * RationalFunction3::constant(3, m11);
        auto over = [&](const RationalFunction3& g, const QInterval& ia, const QInterval& ib) {
            std::array<QInterval, 3> box{ia, ib, QInterval::point(BigRat(3))};
            return interval_eval(g, box);
        };
        QInterval ia{xa - delta, xa + delta}, ib{xb - delta, xb + delta};
        bool ok = true;
        try {
            ok = ok && sgn(over(g1, QInterval::point(ia.lo), ib).hi) < 0;   // left edge
            ok = ok && sgn(over(g1, QInterval::point(ia.hi), ib).lo) > 0;   // right edge
            ok = ok && sgn(over(g2, ia, QInterval::point(ib.lo)).hi) < 0;   // bottom edge
            ok = ok && sgn(over(g2, ia, QInterval::point(ib.hi)).lo) > 0;   // top edge
        } catch (const std::domain_error&) {
            ok = false;  // a denominator interval touched zero
        }
        if (ok) {
            res.a = ia;
            res.b = ib;
            std::array<QInterval, 3> box{ia, ib, QInterval::point(BigRat(3))};
            res.value = interval_eval(slice.f, box);
            return res;
        }
        if (attempt >= 3) throw CertificateFailure("minimize_volume: Miranda certification failed");
        // tighten the iterate at doubled precision before retrying
        bits = std::max(2 * bits, 512u);
        res.precision_bits = bits;
        for (int extra = 0; extra < 60; ++extra) {
            BigRat ga = eval3(slice.ga, xa, xb);
            BigRat gb = eval3(slice.gb, xa, xb);
            BigRat h_aa = eval3(slice.haa, xa, xb);
            BigRat h_ab = eval3(slice.hab, xa, xb);
            BigRat h_bb = eval3(slice.hbb, xa, xb);
            BigRat dt = h_aa * h_bb - h_ab * h_ab;
            BigRat na = round_dyadic(xa - (h_bb * ga - h_ab * gb) / dt, bits);
            BigRat nb = round_dyadic(xb - (h_aa * gb - h_ab * ga) / dt, bits);
            if (!volume_detail::strictly_feasible(slice, na, nb)) break;
            if (na == xa && nb == xb) break;
            xa = na;
            xb = nb;
        }
    }
}

// ---- elimination machinery ------------------------------------------------

namespace volume_detail {

// Fraction-free Bareiss determinant over Z[x] with univariate integer
// polynomial entries (the fast path for Sylvester elimination).
inline upoly::Poly upoly_determinant(std::vector<std::vector<upoly::Poly>> m) {
    using upoly::Poly;
    const int n = static_cast<int>(m.size());
    int sign = 1;
    Poly prev{BigInt(1)};
    for (int k = 0; k + 1 < n; ++k) {
        if (upoly::is_zero(m[k][k])) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!upoly::is_zero(m[i][k])) {
                    piv = i;
                    break;
                }
            if (piv < 0) return {};
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly t = upoly::mul(m[k][k], m[i][j]);
                Poly u = upoly::mul(m[i][k], m[k][j]);
                if (u.size() > t.size()) t.resize(u.size(), BigInt(0));
                for (size_t z = 0; z < u.size(); ++z) t[z] -= u[z];
                upoly::normalize(t);
                m[i][j] = upoly::is_zero(t) ? t : upoly::div_exact(t, prev);
            }
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    if (sign < 0)
        for (auto& c : det) c = -c;
    return det;
}

// integer coefficient vectors in powers of `elim_var` for a 2-variable
// integer polynomial; remaining variable is `keep_var`
inline std::vector<upoly::Poly> coefficients_in(const MultiPoly& p, int elim_var, int keep_var) {
    int d = p.degree_in(elim_var);
    std::vector<upoly::Poly> out(static_cast<size_t>(d + 1));
    auto cs = p.coeffs_in(elim_var);
    for (int k = 0; k <= d; ++k) {
        upoly::Poly u(static_cast<size_t>(std::max(0, cs[k].degree_in(keep_var)) + 1), BigInt(0));
        for (const auto& [e, c] : cs[k].terms()) {
            if (c.get_den() != 1) throw std::logic_error("coefficients_in: non-integer coefficient");
            u[e[keep_var]] += c.get_num();
        }
        upoly::normalize(u);
        out[k] = std::move(u);
    }
    return out;
}

// resultant of two integer (a,b)-polynomials eliminating elim_var, as a
// univariate integer polynomial in keep_var
inline upoly::Poly eliminate(const MultiPoly& na, const MultiPoly& nb, int elim_var, int keep_var) {
    auto pc = coefficients_in(na, elim_var, keep_var);
    auto qc = coefficients_in(nb, elim_var, keep_var);
    if (pc.size() <= 1 && qc.size() <= 1)
        throw CertificateFailure("eliminate: gradient numerators free of the eliminated variable");
    if (pc.size() <= 1) {  // Res(p, q) = p^{deg q}
        upoly::Poly r{BigInt(1)};
        for (size_t i = 0; i + 1 < qc.size(); ++i) r = upoly::mul(r, pc.empty() ? upoly::Poly{} : pc[0]);
        return r;
    }
    if (qc.size() <= 1) {
        upoly::Poly r{BigInt(1)};
        for (size_t i = 0; i + 1 < pc.size(); ++i) r = upoly::mul(r, qc.empty() ? upoly::Poly{} : qc[0]);
        return r;
    }
    const int dp = static_cast<int>(pc.size()) - 1;
    const int dq = static_cast<int>(qc.size()) - 1;
    const int n = dp + dq;
    std::vector<std::vector<upoly::Poly>> syl(n, std::vector<upoly::Poly>(n));
    for (int r = 0; r < dq; ++r)
        for (int i = 0; i <= dp; ++i) syl[r][r + i] = pc[dp - i];
    for (int r = 0; r < dp; ++r)
        for (int i = 0; i <= dq; ++i) syl[dq + r][r + i] = qc[dq - i];
    return upoly_determinant(std::move(syl));
}

// gcd in `var` of two integer 2-variable polynomials via a primitive-free
// pseudo-remainder sequence; only used to retry when the resultant vanishes
// identically. Returns a polynomial dividing both (up to content in the
// other variable).
inline MultiPoly prs_gcd(const MultiPoly& a_in, const MultiPoly& b_in, int var) {
    MultiPoly a = a_in, b = b_in;
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (!b.is_zero() && b.degree_in(var) >= 0) {
        if (b.degree_in(var) == 0) return b.is_zero() ? a : b;
        // pseudo remainder of a by b in var
        auto bc = b.coeffs_in(var);
        MultiPoly lead_b = bc.back();
        MultiPoly r = a;
        int guard = 0;
        while (!r.is_zero() && r.degree_in(var) >= b.degree_in(var)) {
            if (++guard > 400) throw CertificateFailure("prs_gcd: no convergence");
            auto rc = r.coeffs_in(var);
            MultiPoly lead_r = rc.back();
            int shift = r.degree_in(var) - b.degree_in(var);
            MultiPoly mono = MultiPoly::variable(r.nvars(), var, shift);
            r = r * lead_b - b * (lead_r * mono);
        }
        a = b;
        b = r.primitive_part().second;
    }
    return a.primitive_part().second;
}

struct EliminationOutcome {
    upoly::Poly eliminant;  // square-free, spurious factors removed
    std::vector<upoly::Poly> removed;
};

// Square-free eliminant of the gradient system in keep_var with factors that
// vanish on denominator loci divided out (unless their root could be the
// minimizer coordinate itself, i.e. lies inside the guard interval).
inline EliminationOutcome reduced_eliminant(const MultiPoly& na, const MultiPoly& nb,
                                            const std::vector<MultiPoly>& den_forms, int elim_var,
                                            int keep_var, const std::optional<QInterval>& guard) {
    upoly::Poly raw = eliminate(na, nb, elim_var, keep_var);
    if (upoly::is_zero(raw)) {
        // common factor of the gradient numerators: remove and retry once
        MultiPoly g = prs_gcd(na, nb, elim_var);
        auto qa = na.divide_exact(g);
        auto qb = nb.divide_exact(g);
        if (!qa || !qb)
            throw CertificateFailure("reduced_eliminant: identically-zero resultant persists");
        raw = eliminate(*qa, *qb, elim_var, keep_var);
        if (upoly::is_zero(raw))
            throw CertificateFailure("reduced_eliminant: identically-zero resultant persists");
    }
    upoly::Poly e = upoly::squarefree_part(raw);
    // spurious candidates: resultants of denominator-form pairs, plus forms
    // free of the eliminated variable
    std::vector<upoly::Poly> candidates;
    auto push_candidate = [&](const upoly::Poly& c) {
        if (upoly::degree(c) < 1) return;
        upoly::Poly pc = upoly::primitive(c);
        for (const auto& seen : candidates)
            if (seen == pc) return;
        candidates.push_back(pc);
    };
    for (size_t i = 0; i < den_forms.size(); ++i) {
        auto ci = coefficients_in(den_forms[i], elim_var, keep_var);
        if (ci.size() <= 1) {
            push_candidate(ci.empty() ? upoly::Poly{} : ci[0]);
            continue;
        }
        for (size_t j = i + 1; j < den_forms.size(); ++j) {
            auto cj = coefficients_in(den_forms[j], elim_var, keep_var);
            if (cj.size() <= 1) continue;
            // resultant of two linears u1*x + u0, v1*x + v0 is u1*v0 - v1*u0
            upoly::Poly r = upoly::mul(ci[1], cj[0]);
            upoly::Poly t = upoly::mul(cj[1], ci[0]);
            if (t.size() > r.size()) r.resize(t.size(), BigInt(0));
            for (size_t z = 0; z < t.size(); ++z) r[z] -= t[z];
            upoly::normalize(r);
            push_candidate(r);
        }
    }
    EliminationOutcome out;
    for (const auto& c : candidates) {
        if (guard && upoly::degree(c) == 1) {
            // skip removal when the candidate's root may be the minimizer
            BigRat root = make_rat(-c[0], c[1]);
            if (guard->contains(root)) continue;
        }
        while (upoly::degree(e) > upoly::degree(c)) {
            bool divided = false;
            try {
                upoly::Poly q = upoly::div_exact(e, c);
                e = upoly::primitive(q);
                out.removed.push_back(c);
                divided = true;
            } catch (const std::logic_error&) {
            }
            if (!divided) break;
        }
    }
    out.eliminant = upoly::primitive(e);
    return out;
}

// integer coefficient view of a univariate polynomial (denominators cleared:
// roots are what the callers consume, so scaling is harmless)
inline upoly::Poly coefficients_to_upoly(const MultiPoly& p, int var) {
    BigInt den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        int other_deg = total_degree(e) - e[var];
        if (other_deg != 0) throw std::logic_error("coefficients_to_upoly: not univariate");
        den_lcm = lcm(den_lcm, c.get_den());
    }
    upoly::Poly u(static_cast<size_t>(std::max(0, p.degree_in(var)) + 1), BigInt(0));
    for (const auto& [e, c] : p.terms()) u[e[var]] += c.get_num() * exact_div(den_lcm, c.get_den());
    upoly::normalize(u);
    return u;
}

// decide rationality of one minimizer coordinate
inline CoordinateCertificate classify_coordinate(const MultiPoly& na, const MultiPoly& nb,
                                                 const std::vector<MultiPoly>& den_forms, int keep_var,
                                                 const QInterval& self_interval,
                                                 const QInterval& other_interval) {
    const int elim_var = 1 - keep_var;
    CoordinateCertificate cert;
    auto elim = reduced_eliminant(na, nb, den_forms, elim_var, keep_var, self_interval);
    cert.eliminant = upoly::to_multipoly(elim.eliminant);
    for (const auto& r : elim.removed) cert.spurious_factors_removed.push_back(upoly::to_multipoly(r));

    // isolate the eliminant root containing the certified coordinate
    BigRat margin = self_interval.width();
    if (margin == 0) margin = make_rat(BigInt(1), BigInt(1) << 44);
    std::optional<upoly::RootInterval> iso;
    for (int bits = 48; bits <= 160; bits += 28) {
        auto roots = upoly::isolate_real_roots(elim.eliminant, self_interval.lo - margin,
                                               self_interval.hi + margin, bits);
        std::vector<upoly::RootInterval> hits;
        for (const auto& r : roots)
            if (!(r.hi < self_interval.lo || r.lo > self_interval.hi)) hits.push_back(r);
        if (hits.size() == 1) {
            iso = hits[0];
            break;
        }
        if (hits.empty())
            throw CertificateFailure("classify: eliminant has no root at the certified minimizer");
    }
    if (!iso) throw CertificateFailure("classify: could not separate the minimizer root");
    cert.isolating_interval = {iso->lo, iso->hi};

    // the unique possible rational candidate in the isolating interval
    // (continued-fraction search after refining below the 1/lead^2 spacing
    // bound; complete without factoring the leading coefficient), decided by
    // exact substitution into both gradient numerators
    std::vector<BigRat> candidates;
    if (auto cand = upoly::unique_rational_candidate(elim.eliminant, {iso->lo, iso->hi}))
        candidates.push_back(*cand);
    for (const auto& q : candidates) {
        cert.rational_candidates_tested.push_back(q);
        MultiPoly na_q = na.substitute_const(keep_var, q);
        MultiPoly nb_q = nb.substitute_const(keep_var, q);
        upoly::Poly ua = coefficients_to_upoly(na_q, elim_var);
        upoly::Poly ub = coefficients_to_upoly(nb_q, elim_var);
        upoly::Poly g;
        if (upoly::is_zero(ua) && upoly::is_zero(ub))
            g = {};  // the whole line is critical; impossible for strictly convex f
        else if (upoly::is_zero(ua))
            g = ub;
        else if (upoly::is_zero(ub))
            g = ua;
        else
            g = upoly::gcd_poly(ua, ub);
        bool solves = false;
        if (!upoly::is_zero(g)) {
            if (upoly::degree(g) == 0) {
                solves = false;  // no common root over this fiber
            } else {
                BigRat m2 = other_interval.width();
                if (m2 == 0) m2 = make_rat(BigInt(1), BigInt(1) << 44);
                auto broots =
                    upoly::isolate_real_roots(g, other_interval.lo - m2, other_interval.hi + m2, 48);
                for (const auto& r : broots)
                    if (!(r.hi < other_interval.lo || r.lo > other_interval.hi)) solves = true;
            }
        }
        if (solves) {
            cert.rational = true;
            cert.rational_value = q;
            break;
        }
    }
    return cert;
}

}  // namespace volume_detail

// Rationality certificate for both coordinates of the minimizer enclosed by
// `res` (which must come from minimize_volume on the same a0 and diagram).
inline void classify_regularity(const RationalFunction3& a0_in, const LatticePolygon& p, ReebResult& res) {
    (void)p;  // the gauge translation is carried by res.origin_shift
    RationalFunction3 a0 = a0_in;
    if (res.origin_shift != Point2{0, 0}) {
        Point2 t = res.origin_shift;
        MultiPoly sub_a = MultiPoly::variable(3, 0) + MultiPoly::variable(3, 2) * BigRat(static_cast<long>(t.x));
        MultiPoly sub_b = MultiPoly::variable(3, 1) + MultiPoly::variable(3, 2) * BigRat(static_cast<long>(t.y));
        a0 = a0_in.substitute(0, sub_a).substitute(1, sub_b);
    }
    RationalFunction3 fc = a0.substitute_const(2, BigRat(3));
    MultiPoly na = fc.derivative(0).num().primitive_part().second;
    MultiPoly nb = fc.derivative(1).num().primitive_part().second;
    std::vector<MultiPoly> den_forms;
    for (const auto& [fac, e] : fc.den_factors()) den_forms.push_back(fac);

    res.cert_a = volume_detail::classify_coordinate(na, nb, den_forms, 0, res.a, res.b);
    res.cert_b = volume_detail::classify_coordinate(na, nb, den_forms, 1, res.b, res.a);
    res.classified = true;
    res.quasi_regular = res.cert_a.rational && res.cert_b.rational;
    if (res.quasi_regular) {
        BigRat qa = *res.cert_a.rational_value;
        BigRat qb = *res.cert_b.rational_value;
        std::vector<BigRat> x{qa, qb, BigRat(3)};
        if (na.eval(x) != 0 || nb.eval(x) != 0)
            throw CertificateFailure("classify: rational pair fails exact gradient check");
        res.exact_a = qa;
        res.exact_b = qb;
        res.exact_value = fc.eval(x);
    }
}

// The degree-8 irregularity factor P(a) of the eliminant in a for the CFO
// cone P^s: every spurious (denominator-locus) factor is divided out
// unconditionally here; the Reeb-cone feasibility constraints rule out a = 0
// and the boundary roots on their own. Returned primitive with positive
// leading coefficient, as a univariate polynomial.
inline MultiPoly cfo_irregularity_polynomial_from(const RationalFunction3& a0) {
    RationalFunction3 fc = a0.substitute_const(2, BigRat(3));
    MultiPoly na = fc.derivative(0).num().primitive_part().second;
    MultiPoly nb = fc.derivative(1).num().primitive_part().second;
    std::vector<MultiPoly> den_forms;
    for (const auto& [fac, e] : fc.den_factors()) den_forms.push_back(fac);
    auto elim = volume_detail::reduced_eliminant(na, nb, den_forms, /*elim_var=*/1, /*keep_var=*/0,
                                                 std::nullopt);
    return upoly::to_multipoly(elim.eliminant);
}

inline MultiPoly cfo_irregularity_polynomial(long s) {
    if (s < 2) throw std::invalid_argument("cfo_irregularity_polynomial: need s >= 2");
    return cfo_irregularity_polynomial_from(volume_function(family_cfo(1, s)));
}

// full pipeline used by the CLI and the acceptance suite
struct ReebAnalysis {
    RationalFunction3 a0;
    ReebResult reeb;
};

inline ReebAnalysis analyze_reeb(const LatticePolygon& p, unsigned bits = 256) {
    ReebAnalysis out;
    out.a0 = volume_function(p);
    out.reeb = minimize_volume(out.a0, p, bits);
    classify_regularity(out.a0, p, out.reeb);
    return out;
}

}  // namespace reebscope
