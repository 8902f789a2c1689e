#pragma once

// Univariate integer-polynomial toolkit: primitive-PRS gcd, square-free part,
// Descartes/bisection real-root isolation with exact rational endpoints, and
// complete rational-root enumeration via the rational-root theorem.
//
// Polynomials are ascending BigInt coefficient vectors with no trailing zero
// coefficient (normalize() enforces this).

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "reebscope/bigint.hpp"
#include "reebscope/poly.hpp"

namespace reebscope::upoly {

using Poly = std::vector<BigInt>;

inline void normalize(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }
inline bool is_zero(const Poly& p) { return p.empty(); }

// Clear denominators of a univariate MultiPoly and divide by integer content.
inline Poly from_multipoly(const MultiPoly& mp) {
    auto cs = mp.univariate_coeffs();
    BigInt den_lcm = 1;
    for (const auto& c : cs) den_lcm = lcm(den_lcm, c.get_den());
    Poly p;
    p.reserve(cs.size());
    BigInt g = 0;
    for (const auto& c : cs) {
        BigInt v = c.get_num() * exact_div(den_lcm, c.get_den());
        g = gcd(g, v);
        p.push_back(v);
    }
    normalize(p);
    if (g > 1)
        for (auto& v : p) v = exact_div(v, g);
    return p;
}

inline MultiPoly to_multipoly(const Poly& p) {
    std::vector<BigRat> cs;
    cs.reserve(p.size());
    for (const auto& c : p) cs.emplace_back(c);
    return MultiPoly::from_coeffs(cs);
}

inline BigRat eval(const Poly& p, const BigRat& x) {
    BigRat r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + BigRat(*it);
    return r;
}

inline int sign_at(const Poly& p, const BigRat& x) { return sgn(eval(p, x)); }

inline Poly derivative(const Poly& p) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * BigInt(static_cast<long>(i)));
    normalize(d);
    return d;
}

inline Poly primitive(Poly p) {
    normalize(p);
    if (p.empty()) return p;
    BigInt g = 0;
    for (const auto& c : p) g = gcd(g, c);
    if (sgn(p.back()) < 0) g = -g;
    for (auto& c : p) c = exact_div(c, g);
    return p;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    normalize(r);
    return r;
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b
inline Poly pseudo_rem(Poly a, const Poly& b) {
    if (is_zero(b)) throw std::invalid_argument("pseudo_rem: division by zero");
    int db = degree(b);
    const BigInt& lb = b.back();
    while (degree(a) >= db) {
        int k = degree(a) - db;
        BigInt la = a.back();
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[k + i] -= la * b[i];
        normalize(a);
        if (a.empty()) break;
    }
    return a;
}

inline Poly gcd_poly(Poly a, Poly b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!is_zero(b)) {
        Poly r = primitive(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// exact quotient of integer polynomials (throws if not divisible over Q)
inline Poly div_exact(const Poly& a, const Poly& b) {
    if (is_zero(b)) throw std::invalid_argument("div_exact: division by zero");
    std::vector<BigRat> rem(a.size());
    for (size_t i = 0; i < a.size(); ++i) rem[i] = BigRat(a[i]);
    int da = degree(a), db = degree(b);
    if (da < db) throw std::logic_error("div_exact: not divisible");
    std::vector<BigRat> q(da - db + 1, BigRat(0));
    BigRat lb{b.back()};
    for (int k = da - db; k >= 0; --k) {
        BigRat c = rem[k + db] / lb;
        q[k] = c;
        if (c != 0)
            for (int i = 0; i <= db; ++i) rem[k + i] -= c * BigRat(b[i]);
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("div_exact: not divisible");
    Poly out;
    out.reserve(q.size());
    BigInt den_lcm = 1;
    for (const auto& c : q) den_lcm = lcm(den_lcm, c.get_den());
    if (den_lcm != 1) throw std::logic_error("div_exact: quotient not integral");
    for (const auto& c : q) out.push_back(c.get_num());
    normalize(out);
    return out;
}

inline Poly squarefree_part(const Poly& p_in) {
    Poly p = primitive(p_in);
    if (degree(p) <= 1) return p;
    Poly g = gcd_poly(p, derivative(p));
    if (degree(g) <= 0) return p;
    return primitive(div_exact(p, g));
}

inline int sign_variations(const std::vector<BigInt>& cs) {
    int v = 0, last = 0;
    for (const auto& c : cs) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Taylor shift by one: q(x) = p(x + 1), exact, in place.
inline void shift_by_one(Poly& p) {
    int n = degree(p);
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) p[j] += p[j + 1];
}

// Descartes bound for the number of roots in the open interval (lo, hi):
// map (lo,hi) -> (0,1) -> (0,inf) and count sign variations. Zero-roots at
// the endpoints are stripped, so the bound genuinely concerns the open
// interval. Exact when the returned value is 0 or 1.
inline int descartes_bound(const Poly& p, const BigRat& lo, const BigRat& hi) {
    // q(x) = p(lo + (hi-lo) x) with cleared denominators
    BigRat w = hi - lo;
    int n = degree(p);
    std::vector<BigRat> q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[i] = BigRat(p[i]);
    // shift by lo (rational synthetic Horner)
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) q[j] += lo * q[j + 1];
    // scale x -> w*x
    BigRat wp(1);
    for (int i = 1; i <= n; ++i) {
        wp *= w;
        q[i] *= wp;
    }
    BigInt den = 1;
    for (const auto& c : q) den = lcm(den, c.get_den());
    Poly qi(q.size());
    for (size_t i = 0; i < q.size(); ++i) qi[i] = q[i].get_num() * exact_div(den, q[i].get_den());
    normalize(qi);
    // strip root at 0 (= lo endpoint)
    size_t k = 0;
    while (k < qi.size() && qi[k] == 0) ++k;
    qi.erase(qi.begin(), qi.begin() + k);
    if (qi.empty()) return 0;
    // reverse, shift by one: roots in (0,1) <-> positive roots
    std::reverse(qi.begin(), qi.end());
    normalize(qi);
    shift_by_one(qi);
    // strip root at 0 (= hi endpoint)
    k = 0;
    while (k < qi.size() && qi[k] == 0) ++k;
    qi.erase(qi.begin(), qi.begin() + k);
    return sign_variations(qi);
}

struct RootInterval {
    BigRat lo, hi;  // lo == hi encodes an exact rational root
    bool exact() const { return lo == hi; }
    BigRat mid() const { return (lo + hi) / 2; }
    BigRat width() const { return hi - lo; }
};

namespace detail {

inline void isolate_rec(const Poly& p, const BigRat& lo, const BigRat& hi, std::vector<RootInterval>& out,
                        int depth) {
    if (depth > 512) throw std::runtime_error("isolate_real_roots: recursion depth exceeded");
    int v = descartes_bound(p, lo, hi);
    if (v == 0) return;
    if (v == 1) {
        out.push_back({lo, hi});
        return;
    }
    BigRat m = (lo + hi) / 2;
    if (sign_at(p, m) == 0) out.push_back({m, m});
    isolate_rec(p, lo, m, out, depth + 1);
    isolate_rec(p, m, hi, out, depth + 1);
}

}  // namespace detail

// Shrink an isolating interval (containing exactly one root of square-free p)
// below the given width by Descartes-guided bisection.
inline RootInterval refine(const Poly& p, RootInterval iv, const BigRat& target_width) {
    while (!iv.exact() && iv.width() > target_width) {
        BigRat m = iv.mid();
        if (sign_at(p, m) == 0) return {m, m};
        if (descartes_bound(p, iv.lo, m) == 1)
            iv.hi = m;
        else
            iv.lo = m;
    }
    return iv;
}

// Isolating intervals for all real roots of p in the open interval (lo, hi),
// refined to width <= 2^-40 (tighter on request). p need not be square-free;
// the square-free part is taken internally.
inline std::vector<RootInterval> isolate_real_roots(const Poly& p_in, const BigRat& lo, const BigRat& hi,
                                                    int width_bits = 40) {
    if (is_zero(p_in)) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("isolate_real_roots: empty interval");
    Poly p = squarefree_part(p_in);
    std::vector<RootInterval> raw;
    if (degree(p) >= 1) detail::isolate_rec(p, lo, hi, raw, 0);
    BigRat w = make_rat(BigInt(1), BigInt(1) << width_bits);
    std::vector<RootInterval> out;
    out.reserve(raw.size());
    for (auto& iv : raw) out.push_back(refine(p, iv, w));
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

// ---- integer factorization (for rational-root candidate enumeration) ----

inline bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0; }

namespace detail {

inline BigInt pollard_rho(const BigInt& n) {
    // Brent cycle detection; n is an odd composite with no small prime factors
    for (unsigned long c = 1;; ++c) {
        BigInt x(2), y(2), d(1);
        unsigned long power = 1, lam = 0;
        while (d == 1) {
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (y * y + c) % n;
            ++lam;
            BigInt diff = x - y;
            if (diff == 0) break;  // cycle without factor; retry with new c
            d = gcd(abs(diff), n);
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_into(BigInt n, std::map<BigInt, int>& out) {
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % p == 0) {
            ++out[BigInt(p)];
            n /= p;
        }
    }
    long d = 17;
    while (n > 1 && BigInt(d) * d <= n && d < 100000) {
        while (n % d == 0) {
            ++out[BigInt(d)];
            n /= d;
        }
        d += 2;
    }
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    BigInt f = pollard_rho(n);
    factor_into(f, out);
    factor_into(exact_div(n, f), out);
}

}  // namespace detail

inline std::vector<BigInt> divisors(const BigInt& n_in) {
    BigInt n = abs(n_in);
    if (n == 0) throw std::invalid_argument("divisors of zero");
    std::map<BigInt, int> f;
    detail::factor_into(n, f);
    std::vector<BigInt> ds{BigInt(1)};
    for (const auto& [p, e] : f) {
        size_t base = ds.size();
        BigInt pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// All rational roots of p (integer coefficients), via the rational-root
// theorem with exact verification. Sorted ascending.
inline std::vector<BigRat> rational_roots(const Poly& p_in) {
    if (is_zero(p_in)) throw std::invalid_argument("rational_roots: zero polynomial");
    Poly p = primitive(p_in);
    std::vector<BigRat> roots;
    size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    if (k > 0) {
        roots.emplace_back(0);
        p.erase(p.begin(), p.begin() + k);
    }
    if (degree(p) >= 1) {
        auto us = divisors(p.front());
        auto vs = divisors(p.back());
        for (const auto& u : us)
            for (const auto& v : vs) {
                if (gcd(u, v) != 1) continue;
                BigRat cand = make_rat(u, v);
                if (eval(p, cand) == 0) roots.push_back(cand);
                if (eval(p, -cand) == 0) roots.push_back(-cand);
            }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Rational roots of p inside the open interval (lo, hi). Complete: any
// rational root u/v in lowest terms has v dividing the leading coefficient
// and u dividing the constant term; for each v the u-range implied by the
// interval is scanned directly when small, and intersected with the sorted
// constant-term divisors otherwise.
inline std::vector<BigRat> rational_roots_in_interval(const Poly& p_in, const BigRat& lo, const BigRat& hi) {
    if (is_zero(p_in)) throw std::invalid_argument("rational_roots_in_interval: zero polynomial");
    Poly p = primitive(p_in);
    size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    std::vector<BigRat> roots;
    if (k > 0) {
        if (lo < 0 && 0 < hi) roots.emplace_back(0);
        p.erase(p.begin(), p.begin() + k);
    }
    if (degree(p) >= 1) {
        std::vector<BigInt> const_divisors;  // materialized on first wide range
        auto try_candidate = [&](const BigInt& u, const BigInt& v) {
            if (gcd(abs(u), v) != 1) return;
            BigRat cand = make_rat(u, v);
            if (lo < cand && cand < hi && eval(p, cand) == 0) roots.push_back(cand);
        };
        for (const auto& v : divisors(p.back())) {
            BigInt u_lo = floor(lo * BigRat(v)) + 1;
            BigInt u_hi = ceil(hi * BigRat(v)) - 1;
            if (u_hi - u_lo <= 4096) {
                for (BigInt u = u_lo; u <= u_hi; ++u) try_candidate(u, v);
            } else {
                if (const_divisors.empty()) const_divisors = divisors(p.front());
                for (const auto& d : const_divisors) {
                    if (d >= u_lo && d <= u_hi) try_candidate(d, v);
                    if (-d >= u_lo && -d <= u_hi) try_candidate(-d, v);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// smallest-denominator rational in the closed interval [lo, hi] via the
// continued-fraction (Stern-Brocot) walk
inline BigRat simplest_rational_between(const BigRat& lo, const BigRat& hi) {
    if (!(lo <= hi)) throw std::invalid_argument("simplest_rational_between: empty interval");
    BigInt lo_ceil = ceil(lo);
    if (BigRat(lo_ceil) <= hi) return BigRat(lo_ceil);  // an integer lies inside
    BigInt f = floor(lo);
    BigRat inner = simplest_rational_between(BigRat(1) / (hi - BigRat(f)), BigRat(1) / (lo - BigRat(f)));
    return BigRat(f) + BigRat(1) / inner;
}

// The unique possible rational root of square-free p inside an isolating
// interval, without factoring: refine the interval by sign bisection below
// 1/lead(p)^2 (distinct rationals with denominator <= |lead| differ by at
// least that much), take the smallest-denominator rational inside, and
// verify by exact evaluation.
inline std::optional<BigRat> unique_rational_candidate(const Poly& p, RootInterval iv) {
    if (is_zero(p)) throw std::invalid_argument("unique_rational_candidate: zero polynomial");
    if (iv.exact()) return eval(p, iv.lo) == 0 ? std::optional<BigRat>(iv.lo) : std::nullopt;
    int slo = sign_at(p, iv.lo), shi = sign_at(p, iv.hi);
    if (slo == 0) return iv.lo;  // endpoint happens to be the root
    if (shi == 0) return iv.hi;
    if (slo == shi) throw std::invalid_argument("unique_rational_candidate: not an isolating interval");
    BigRat spacing = make_rat(BigInt(1), abs(p.back()) * abs(p.back()));
    while (iv.width() >= spacing) {
        BigRat m = iv.mid();
        int sm = sign_at(p, m);
        if (sm == 0) return m;
        (sm == slo ? iv.lo : iv.hi) = m;
    }
    BigRat cand = simplest_rational_between(iv.lo, iv.hi);
    if (eval(p, cand) == 0) return cand;
    return std::nullopt;
}

}  // namespace reebscope::upoly
