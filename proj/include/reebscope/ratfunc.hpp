#pragma once

// Exact rational functions in (a, b, c) -- and, generically, in any fixed
// variable space. The denominator is kept as a multiset of primitive
// integer-coefficient factors with positive graded-lex leading coefficient;
// the numerator absorbs the rational scale. Common factors are cancelled by
// exact trial division, which is complete here because every denominator this
// artifact produces is a product of linear forms.

#include <string>
#include <utility>
#include <vector>

#include "reebscope/poly.hpp"

namespace reebscope {

class RationalFunction3 {
public:
    RationalFunction3() : num_(MultiPoly(3)) {}
    explicit RationalFunction3(MultiPoly num) : num_(std::move(num)) {}

    RationalFunction3(MultiPoly num, const std::vector<std::pair<MultiPoly, int>>& den_factors)
        : num_(std::move(num)) {
        for (const auto& [f, e] : den_factors) push_factor(f, e);
        canonicalize();
    }

    static RationalFunction3 constant(int nvars, const BigRat& c) {
        return RationalFunction3(MultiPoly::constant(nvars, c));
    }

    static RationalFunction3 fraction(MultiPoly num, const MultiPoly& den) {
        RationalFunction3 r(std::move(num));
        r.push_factor(den, 1);
        r.canonicalize();
        return r;
    }

    const MultiPoly& num() const { return num_; }
    const std::vector<std::pair<MultiPoly, int>>& den_factors() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }

    MultiPoly den_poly() const {
        MultiPoly d = MultiPoly::constant(nvars(), BigRat(1));
        for (const auto& [f, e] : den_)
            for (int i = 0; i < e; ++i) d *= f;
        return d;
    }

    RationalFunction3 operator+(const RationalFunction3& o) const {
        RationalFunction3 r;
        r.den_ = merged_lcm(den_, o.den_);
        r.num_ = num_ * cofactor(r.den_, den_) + o.num_ * cofactor(r.den_, o.den_);
        r.canonicalize();
        return r;
    }
    RationalFunction3 operator-(const RationalFunction3& o) const { return *this + (-o); }
    RationalFunction3 operator-() const {
        RationalFunction3 r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RationalFunction3 operator*(const RationalFunction3& o) const {
        RationalFunction3 r;
        r.num_ = num_ * o.num_;
        r.den_ = den_;
        for (const auto& [f, e] : o.den_) r.push_factor_canonical(f, e);
        r.sort_factors();
        r.canonicalize();
        return r;
    }
    RationalFunction3 operator/(const RationalFunction3& o) const {
        if (o.is_zero()) throw std::invalid_argument("RationalFunction3: division by zero");
        RationalFunction3 inv;
        inv.num_ = o.den_poly();
        inv.push_factor(o.num_, 1);
        inv.canonicalize();
        return *this * inv;
    }
    RationalFunction3& operator+=(const RationalFunction3& o) { return *this = *this + o; }

    // mathematical equality (cross multiplication; representation independent)
    bool operator==(const RationalFunction3& o) const {
        return (num_ * o.den_poly()) == (o.num_ * den_poly());
    }
    bool operator!=(const RationalFunction3& o) const { return !(*this == o); }

    // structural identity of the canonical form
    bool identical(const RationalFunction3& o) const { return num_ == o.num_ && den_ == o.den_; }

    BigRat eval(const std::vector<BigRat>& x) const {
        BigRat n = num_.eval(x);
        BigRat d(1);
        for (const auto& [f, e] : den_) {
            BigRat v = f.eval(x);
            if (v == 0) throw std::domain_error("RationalFunction3: pole at evaluation point");
            d *= pow(v, static_cast<unsigned long>(e));
        }
        return n / d;
    }

    RationalFunction3 substitute_const(int var, const BigRat& value) const {
        RationalFunction3 r;
        r.num_ = num_.substitute_const(var, value);
        for (const auto& [f, e] : den_) r.push_factor(f.substitute_const(var, value), e);
        r.canonicalize();
        return r;
    }

    RationalFunction3 substitute(int var, const MultiPoly& sub) const {
        RationalFunction3 r;
        r.num_ = num_.substitute(var, sub);
        for (const auto& [f, e] : den_) r.push_factor(f.substitute(var, sub), e);
        r.canonicalize();
        return r;
    }

    RationalFunction3 derivative(int var) const {
        // quotient rule over the factored denominator:
        //   d/dx (N / prod f_i^{e_i})
        //     = (N' * prod f_j  -  N * sum_i e_i f_i' prod_{j != i} f_j) / prod f_i^{e_i+1}
        MultiPoly prod_single = MultiPoly::constant(nvars(), BigRat(1));
        for (const auto& [f, e] : den_) prod_single *= f;
        MultiPoly n = num_.derivative(var) * prod_single;
        for (size_t i = 0; i < den_.size(); ++i) {
            MultiPoly rest = num_ * den_[i].first.derivative(var) * BigRat(den_[i].second);
            for (size_t j = 0; j < den_.size(); ++j)
                if (j != i) rest *= den_[j].first;
            n -= rest;
        }
        RationalFunction3 r;
        r.num_ = std::move(n);
        r.den_ = den_;
        for (auto& [f, e] : r.den_) ++e;
        r.canonicalize();
        return r;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (den_.empty()) return num_.to_string(names);
        std::string n = num_.to_string(names);
        if (num_.term_count() > 1) n = "(" + n + ")";
        std::string d;
        for (const auto& [f, e] : den_) {
            if (!d.empty()) d += "*";
            d += "(" + f.to_string(names) + ")";
            if (e > 1) d += "^" + std::to_string(e);
        }
        if (den_.size() > 1 || den_[0].second > 1) d = "(" + d + ")";
        return n + " / " + d;
    }

private:
    // normalize a factor to primitive integer form, folding the scale into num_
    void push_factor(const MultiPoly& f, int e) {
        if (f.is_zero()) throw std::invalid_argument("RationalFunction3: zero denominator factor");
        if (f.is_constant()) {
            num_ = num_ * pow(BigRat(1) / f.constant_value(), static_cast<unsigned long>(e));
            return;
        }
        auto [scale, prim] = f.primitive_part();
        num_ = num_ * pow(BigRat(1) / scale, static_cast<unsigned long>(e));
        push_factor_canonical(prim, e);
    }
    void push_factor_canonical(const MultiPoly& prim, int e) {
        for (auto& [g, k] : den_)
            if (g == prim) {
                k += e;
                return;
            }
        den_.emplace_back(prim, e);
    }
    void sort_factors() {
        std::sort(den_.begin(), den_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    void canonicalize() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        for (auto& [f, e] : den_) {
            while (e > 0) {
                auto q = num_.divide_exact(f);
                if (!q) break;
                num_ = std::move(*q);
                --e;
            }
        }
        den_.erase(std::remove_if(den_.begin(), den_.end(), [](const auto& fe) { return fe.second == 0; }),
                   den_.end());
        sort_factors();
    }

    static std::vector<std::pair<MultiPoly, int>> merged_lcm(const std::vector<std::pair<MultiPoly, int>>& a,
                                                             const std::vector<std::pair<MultiPoly, int>>& b) {
        auto out = a;
        for (const auto& [f, e] : b) {
            bool found = false;
            for (auto& [g, k] : out)
                if (g == f) {
                    k = std::max(k, e);
                    found = true;
                    break;
                }
            if (!found) out.emplace_back(f, e);
        }
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return out;
    }

    // product of lcm / own-denominator (the factor the numerator must carry)
    MultiPoly cofactor(const std::vector<std::pair<MultiPoly, int>>& lcm_den,
                       const std::vector<std::pair<MultiPoly, int>>& own) const {
        MultiPoly c = MultiPoly::constant(nvars(), BigRat(1));
        for (const auto& [f, e] : lcm_den) {
            int have = 0;
            for (const auto& [g, k] : own)
                if (g == f) {
                    have = k;
                    break;
                }
            for (int i = have; i < e; ++i) c *= f;
        }
        return c;
    }

    MultiPoly num_;
    std::vector<std::pair<MultiPoly, int>> den_;  // primitive factors, sorted
};

}  // namespace reebscope
