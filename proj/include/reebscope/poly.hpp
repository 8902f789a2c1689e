#pragma once

// Sparse multivariate polynomials over Q with graded-lex term order.
// Exponent vectors are dense per-term; coefficients are exact rationals.
// Zero coefficients are never stored; every operation re-canonicalizes.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reebscope/bigint.hpp"

namespace reebscope {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    int t = 0;
    for (int x : e) t += x;
    return t;
}

// graded-lex: first by total degree, then lexicographically (first variable
// most significant). Returns true when a < b.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int ta = total_degree(a), tb = total_degree(b);
        if (ta != tb) return ta < tb;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

class MultiPoly {
public:
    using TermMap = std::map<Exponents, BigRat, GrlexLess>;

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const BigRat& c) {
        MultiPoly p(nvars);
        if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
        return p;
    }
    static MultiPoly variable(int nvars, int var, int power = 1) {
        MultiPoly p(nvars);
        Exponents e(nvars, 0);
        e[var] = power;
        p.terms_[e] = 1;
        return p;
    }
    static MultiPoly from_terms(int nvars, const std::vector<std::pair<Exponents, BigRat>>& ts) {
        MultiPoly p(nvars);
        for (const auto& [e, c] : ts) p.add_term(e, c);
        return p;
    }
    // Univariate polynomial from ascending coefficient list.
    static MultiPoly from_coeffs(const std::vector<BigRat>& coeffs) {
        MultiPoly p(1);
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) p.terms_[{static_cast<int>(i)}] = coeffs[i];
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Exponents& e, const BigRat& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int degree() const {  // total degree, -1 for zero
        if (terms_.empty()) return -1;
        return total_degree(terms_.rbegin()->first);
    }
    int degree_in(int var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return terms_.empty() ? -1 : d;
    }

    // leading term in graded-lex
    const std::pair<const Exponents, BigRat>& leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
        return *terms_.rbegin();
    }

    bool is_constant() const { return terms_.empty() || degree() == 0; }
    BigRat constant_value() const {
        if (terms_.empty()) return BigRat(0);
        if (degree() != 0) throw std::logic_error("constant_value of non-constant");
        return terms_.begin()->second;
    }

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    MultiPoly operator+(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly r(nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exponents e(nvars_);
                for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    MultiPoly operator*(const BigRat& k) const {
        MultiPoly r(nvars_);
        if (k == 0) return r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c * k;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(nvars_, BigRat(1));
        MultiPoly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    MultiPoly derivative(int var) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            d[var] -= 1;
            r.add_term(d, c * BigRat(e[var]));
        }
        return r;
    }

    BigRat eval(const std::vector<BigRat>& x) const {
        if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("eval: wrong point dimension");
        // cache powers per variable up to needed degree
        std::vector<std::vector<BigRat>> pw(nvars_);
        for (int v = 0; v < nvars_; ++v) {
            int d = std::max(0, degree_in(v));
            pw[v].resize(d + 1);
            pw[v][0] = 1;
            for (int i = 1; i <= d; ++i) pw[v][i] = pw[v][i - 1] * x[v];
        }
        BigRat s(0);
        for (const auto& [e, c] : terms_) {
            BigRat t = c;
            for (int v = 0; v < nvars_; ++v)
                if (e[v]) t *= pw[v][e[v]];
            s += t;
        }
        return s;
    }

    // substitute variable -> constant (result keeps the same variable list)
    MultiPoly substitute_const(int var, const BigRat& value) const {
        MultiPoly r(nvars_);
        std::vector<BigRat> pw{BigRat(1)};
        for (const auto& [e, c] : terms_) {
            while (static_cast<int>(pw.size()) <= e[var]) pw.push_back(pw.back() * value);
            Exponents d = e;
            d[var] = 0;
            r.add_term(d, c * pw[e[var]]);
        }
        return r;
    }

    // substitute variable -> polynomial (same variable space)
    MultiPoly substitute(int var, const MultiPoly& sub) const {
        check_vars(sub);
        std::vector<MultiPoly> pw{constant(nvars_, BigRat(1))};
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            while (static_cast<int>(pw.size()) <= e[var]) pw.push_back(pw.back() * sub);
            Exponents d = e;
            d[var] = 0;
            MultiPoly m(nvars_);
            m.terms_[d] = c;
            r += m * pw[e[var]];
        }
        return r;
    }

    // drop a variable that no longer occurs (shrinks the variable list)
    MultiPoly drop_var(int var) const {
        if (degree_in(var) > 0) throw std::logic_error("drop_var: variable still occurs");
        MultiPoly r(nvars_ - 1);
        for (const auto& [e, c] : terms_) {
            Exponents d;
            d.reserve(nvars_ - 1);
            for (int i = 0; i < nvars_; ++i)
                if (i != var) d.push_back(e[i]);
            r.add_term(d, c);
        }
        return r;
    }

    // exact division; nullopt when not divisible (valid: a single divisor is a
    // Groebner basis of its ideal, so a zero normal form is equivalent to
    // divisibility)
    std::optional<MultiPoly> divide_exact(const MultiPoly& g) const {
        check_vars(g);
        if (g.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
        MultiPoly q(nvars_), r = *this;
        const auto& glt = g.leading_term();
        while (!r.is_zero()) {
            const auto& rlt = r.leading_term();
            Exponents d(nvars_);
            for (int i = 0; i < nvars_; ++i) {
                d[i] = rlt.first[i] - glt.first[i];
                if (d[i] < 0) return std::nullopt;
            }
            BigRat c = rlt.second / glt.second;
            MultiPoly t(nvars_);
            t.terms_[d] = c;
            q += t;
            r -= t * g;
        }
        return q;
    }
    bool divisible_by(const MultiPoly& g) const { return divide_exact(g).has_value(); }

    // integer content: the positive rational k with (1/k)*poly integer-primitive
    BigRat content() const {
        if (terms_.empty()) return BigRat(0);
        BigInt num_gcd = 0, den_lcm = 1;
        for (const auto& [e, c] : terms_) {
            num_gcd = gcd(num_gcd, c.get_num());
            den_lcm = lcm(den_lcm, c.get_den());
        }
        return make_rat(num_gcd, den_lcm);
    }

    // primitive integer part with positive graded-lex leading coefficient;
    // returns the rational scale s with *this == s * primitive
    std::pair<BigRat, MultiPoly> primitive_part() const {
        if (terms_.empty()) return {BigRat(0), MultiPoly(nvars_)};
        BigRat c = content();
        if (sgn(leading_term().second) < 0) c = -c;
        MultiPoly p(nvars_);
        for (const auto& [e, coef] : terms_) p.terms_[e] = coef / c;
        return {c, p};
    }

    // coefficients of the polynomial viewed in one variable, entries are
    // polynomials in the remaining (same-width) variable space
    std::vector<MultiPoly> coeffs_in(int var) const {
        int d = std::max(0, degree_in(var));
        std::vector<MultiPoly> cs(d + 1, MultiPoly(nvars_));
        for (const auto& [e, c] : terms_) {
            Exponents r = e;
            int k = r[var];
            r[var] = 0;
            cs[k].add_term(r, c);
        }
        return cs;
    }

    // ascending coefficient list of a univariate polynomial
    std::vector<BigRat> univariate_coeffs() const {
        if (nvars_ != 1) throw std::logic_error("univariate_coeffs: not univariate");
        std::vector<BigRat> cs(static_cast<size_t>(std::max(0, degree()) + 1), BigRat(0));
        for (const auto& [e, c] : terms_) cs[e[0]] = c;
        if (terms_.empty()) cs.assign(1, BigRat(0));
        return cs;
    }

    // canonical text: graded-lex descending, explicit signs, '^' powers
    std::string to_string(const std::vector<std::string>& names) const {
        if (static_cast<int>(names.size()) != nvars_) throw std::invalid_argument("to_string: wrong name count");
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            BigRat a = abs(c);
            if (first) {
                if (sgn(c) < 0) out << "-";
                first = false;
            } else {
                out << (sgn(c) < 0 ? " - " : " + ");
            }
            bool has_var = total_degree(e) > 0;
            if (a != 1 || !has_var) {
                out << reebscope::to_string(a);
                if (has_var) out << "*";
            }
            bool first_var = true;
            for (int v = 0; v < nvars_; ++v) {
                if (e[v] == 0) continue;
                if (!first_var) out << "*";
                first_var = false;
                out << names[v];
                if (e[v] > 1) out << "^" << e[v];
            }
        }
        return out.str();
    }

    // total order for canonical sorting of polynomial lists
    bool operator<(const MultiPoly& o) const {
        auto a = terms_.rbegin(), b = o.terms_.rbegin();
        GrlexLess less;
        for (; a != terms_.rend() && b != o.terms_.rend(); ++a, ++b) {
            if (less(a->first, b->first)) return true;
            if (less(b->first, a->first)) return false;
            if (a->second != b->second) return a->second < b->second;
        }
        return a == terms_.rend() && b != o.terms_.rend();
    }

private:
    void check_vars(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    }

    int nvars_;
    TermMap terms_;
};

inline MultiPoly operator*(const BigRat& k, const MultiPoly& p) { return p * k; }

}  // namespace reebscope
