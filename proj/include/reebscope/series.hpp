#pragma once

// Multivariate Hilbert series of the moment-cone semigroup in Stanley
// sum-of-pieces form, the index character's Laurent coefficients a0/a1 as
// exact rational functions of the Reeb field, and degree-bounded toric-ideal
// binomials from weight-class enumeration.

#include <map>
#include <string>
#include <vector>

#include "reebscope/cone.hpp"
#include "reebscope/poly.hpp"
#include "reebscope/ratfunc.hpp"

namespace reebscope {

struct HilbertSeriesPiece {
    std::array<Vec3, 3> denominator_exponents;  // the piece's generators g_i
    std::vector<Vec3> offsets;                  // half-open parallelepiped points
};

struct HilbertSeriesSum {
    std::vector<HilbertSeriesPiece> pieces;

    // coefficient of z^alpha in the formal expansion
    long long coefficient(const Vec3& alpha) const {
        long long total = 0;
        for (const auto& piece : pieces) {
            const Vec3& g0 = piece.denominator_exponents[0];
            const Vec3& g1 = piece.denominator_exponents[1];
            const Vec3& g2 = piece.denominator_exponents[2];
            long long d = det3_ll(g0, g1, g2);
            Vec3 adj[3] = {cross(g1, g2), cross(g2, g0), cross(g0, g1)};
            if (d < 0) {
                d = -d;
                for (auto& a : adj) a = -a;
            }
            for (const auto& q : piece.offsets) {
                Vec3 rest = alpha - q;
                bool ok = true;
                for (int i = 0; i < 3 && ok; ++i) {
                    long long v = dot(adj[i], rest);
                    ok = (v >= 0) && (v % d == 0);
                }
                if (ok) ++total;
            }
        }
        return total;
    }

    std::string to_string() const {
        auto monomial = [](const Vec3& e) {
            std::string s;
            const char* names[3] = {"T0", "T1", "T2"};
            for (int i = 0; i < 3; ++i) {
                if (e[i] == 0) continue;
                if (!s.empty()) s += "*";
                s += names[i];
                if (e[i] != 1) s += "^" + std::to_string(e[i]);
            }
            return s.empty() ? std::string("1") : s;
        };
        std::string out;
        for (const auto& piece : pieces) {
            if (!out.empty()) out += " + ";
            std::string num;
            for (const auto& q : piece.offsets) {
                if (!num.empty()) num += " + ";
                num += monomial(q);
            }
            std::string den;
            for (const auto& g : piece.denominator_exponents) den += "(1 - " + monomial(g) + ")";
            out += "(" + num + ") / (" + den + ")";
        }
        return out;
    }
};

inline HilbertSeriesSum hilbert_series(const PolyCone3& c_star) {
    HilbertSeriesSum sum;
    for (const auto& piece : simplicial_decomposition(c_star))
        sum.pieces.push_back({piece.generators, piece.parallelepiped_points});
    return sum;
}

struct IndexCharacterCoeffs {
    RationalFunction3 a0;
    RationalFunction3 a1;
};

namespace detail {

inline MultiPoly linear_form(const Vec3& v) {
    MultiPoly p(3);
    p.add_term({1, 0, 0}, BigRat(static_cast<long>(v[0])));
    p.add_term({0, 1, 0}, BigRat(static_cast<long>(v[1])));
    p.add_term({0, 0, 1}, BigRat(static_cast<long>(v[2])));
    return p;
}

}  // namespace detail

// Laurent coefficients of F(xi, t) = H(e^{-a t}, e^{-b t}, e^{-c t}) at t->0:
// the t^-3 coefficient a0 picks up index/product terms per piece (offset
// corrections cancel at that order), the t^-2 coefficient a1 collects the
// first-order offset and denominator corrections.
inline IndexCharacterCoeffs index_character(const PolyCone3& c_star) {
    IndexCharacterCoeffs out;
    for (const auto& piece : simplicial_decomposition(c_star)) {
        MultiPoly l0 = detail::linear_form(piece.generators[0]);
        MultiPoly l1 = detail::linear_form(piece.generators[1]);
        MultiPoly l2 = detail::linear_form(piece.generators[2]);
        std::vector<std::pair<MultiPoly, int>> den{{l0, 1}, {l1, 1}, {l2, 1}};
        BigRat m(static_cast<long>(piece.index));
        out.a0 += RationalFunction3(MultiPoly::constant(3, m), den);
        MultiPoly offset_sum(3);
        for (const auto& q : piece.parallelepiped_points) offset_sum += detail::linear_form(q);
        MultiPoly a1_num = (l0 + l1 + l2) * (m / 2) - offset_sum;
        out.a1 += RationalFunction3(std::move(a1_num), den);
    }
    return out;
}

struct Binomial {
    Exponents lhs, rhs;  // monomial exponent vectors over the N0 variables
    std::string to_string() const {
        auto side = [](const Exponents& e) {
            std::string s;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!s.empty()) s += "*";
                s += "z" + std::to_string(i + 1);
                if (e[i] > 1) s += "^" + std::to_string(e[i]);
            }
            return s.empty() ? std::string("1") : s;
        };
        return side(lhs) + " - " + side(rhs);
    }
};

inline Vec3 weight_of(const HilbertBasis& basis, const Exponents& e) {
    Vec3 w{0, 0, 0};
    for (size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) w = w + basis.elements[i];
    return w;
}

namespace detail {

inline void enumerate_monomials(int nvars, int degree, Exponents& cur, int from,
                                std::vector<Exponents>& out) {
    if (degree == 0) {
        out.push_back(cur);
        return;
    }
    if (from == nvars) return;
    for (int k = degree; k >= 0; --k) {
        cur[from] = k;
        enumerate_monomials(nvars, degree - k, cur, from + 1, out);
    }
    cur[from] = 0;
}

inline bool divides(const Exponents& d, const Exponents& m) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

}  // namespace detail

// Degree-bounded binomial generators of the toric ideal: per total degree and
// W-weight class, monomials not reducible by lower-degree output each yield
// one binomial against the class's canonical (lexicographically smallest)
// representative.
inline std::vector<Binomial> toric_ideal_binomials(const HilbertBasis& basis, int max_degree) {
    if (max_degree < 2) throw std::invalid_argument("toric_ideal_binomials: max_degree must be >= 2");
    const int n = static_cast<int>(basis.elements.size());
    std::vector<Binomial> out;
    std::vector<Exponents> reducers;  // lhs sides of emitted binomials
    for (int e = 2; e <= max_degree; ++e) {
        std::vector<Exponents> monomials;
        Exponents cur(n, 0);
        detail::enumerate_monomials(n, e, cur, 0, monomials);
        std::map<Vec3, std::vector<Exponents>, decltype([](const Vec3& a, const Vec3& b) {
                     return vec3_less(a, b);
                 })>
            classes;
        for (const auto& m : monomials) {
            bool reducible = false;
            for (const auto& r : reducers)
                if (detail::divides(r, m)) {
                    reducible = true;
                    break;
                }
            if (!reducible) classes[weight_of(basis, m)].push_back(m);
        }
        std::vector<Exponents> new_reducers;
        for (auto& [w, members] : classes) {
            if (members.size() < 2) continue;
            std::sort(members.begin(), members.end());
            const Exponents& rep = members.front();
            for (size_t i = 1; i < members.size(); ++i) {
                out.push_back({members[i], rep});
                new_reducers.push_back(members[i]);
            }
        }
        for (auto& r : new_reducers) reducers.push_back(std::move(r));
    }
    return out;
}

}  // namespace reebscope
