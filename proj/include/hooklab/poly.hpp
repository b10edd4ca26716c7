#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hooklab/rational.hpp"

namespace hooklab {

/// Dense univariate polynomial over a field K. Coefficients are stored
/// low-degree first with no trailing zeros; the zero polynomial has an
/// empty coefficient vector and degree() == -1.
template <typename K>
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(long c) { coeffs_.assign(1, K(c)); trim(); }
    UniPoly(const K& c) { coeffs_.assign(1, c); trim(); }
    explicit UniPoly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly variable() { return UniPoly(std::vector<K>{K(0), K(1)}); }

    static UniPoly monomial(const K& c, int deg) {
        std::vector<K> v(static_cast<std::size_t>(deg) + 1, K(0));
        v.back() = c;
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const K& leading() const {
        if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    K coefficient(int deg) const {
        if (deg < 0 || deg >= static_cast<int>(coeffs_.size())) return K(0);
        return coeffs_[static_cast<std::size_t>(deg)];
    }

    const std::vector<K>& coefficients() const { return coeffs_; }

    K operator()(const K& x) const {
        K acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<K> v(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = K(v[i] + b.coeffs_[i]);
        return UniPoly(std::move(v));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.coeffs_) c = K(-c);
        return r;
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<K> v(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] = K(v[i + j] + a.coeffs_[i] * b.coeffs_[j]);
        return UniPoly(std::move(v));
    }

    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
        return true;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly scaled(const K& c) const {
        UniPoly r = *this;
        for (auto& x : r.coeffs_) x = K(x * c);
        r.trim();
        return r;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(K(K(1) / leading()));
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw pole_error("polynomial division by zero");
        UniPoly q, r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            K c = K(r.leading() / d.leading());
            int shift = r.degree() - d.degree();
            UniPoly t = monomial(c, shift);
            q += t;
            r -= t * d;
        }
        return {q, r};
    }

    friend UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = a.divmod(b).second.monic();
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.monic();
    }

    std::string str(const std::string& var) const {
        if (is_zero()) return "0";
        std::string out;
        for (int d = degree(); d >= 0; --d) {
            K c = coefficient(d);
            if (c == K(0)) continue;
            if (!out.empty()) out += " + ";
            out += coeff_str(c);
            if (d >= 1) out += "*" + var;
            if (d >= 2) out += "^" + std::to_string(d);
        }
        return out;
    }

private:
    static std::string coeff_str(const K& c) {
        if constexpr (std::is_same_v<K, Rational>) {
            return hooklab::to_string(c);
        } else {
            return "(" + c.str() + ")";
        }
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == K(0)) coeffs_.pop_back();
    }

    std::vector<K> coeffs_;
};

/// Reduced univariate rational function over K: gcd(num, den) = 1 and the
/// denominator is monic, so equal values compare equal componentwise.
template <typename K>
class RatFunc {
public:
    using Poly = UniPoly<K>;

    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const K& c) : num_(c), den_(1) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RatFunc variable() { return RatFunc(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw pole_error("division by the zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const { return RatFunc(-num_, den_, no_reduce{}); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw pole_error("zero rational function to a negative power");
            return RatFunc(den_, num_).pow(-e);
        }
        RatFunc acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    K eval_at(const K& x) const {
        K d = den_(x);
        if (d == K(0)) throw pole_error("pole at evaluation point");
        return K(num_(x) / d);
    }

    /// Power-series coefficients c_0..c_N of num/den around 0; requires
    /// den(0) != 0.
    std::vector<K> series_at_zero(int order) const {
        K d0 = den_.coefficient(0);
        if (d0 == K(0)) throw pole_error("series expansion at a pole of the denominator");
        std::vector<K> out(static_cast<std::size_t>(order) + 1, K(0));
        for (int n = 0; n <= order; ++n) {
            K acc = num_.coefficient(n);
            for (int k = 1; k <= n; ++k)
                acc = K(acc - den_.coefficient(k) * out[static_cast<std::size_t>(n - k)]);
            out[static_cast<std::size_t>(n)] = K(acc / d0);
        }
        return out;
    }

    /// Coefficient of x^k in the Laurent expansion around 0. Negative k is
    /// allowed when the denominator vanishes at 0.
    K laurent_coefficient(int k) const {
        if (is_zero()) return K(0);
        int v = 0;
        Poly den0 = den_;
        while (den0.coefficient(0) == K(0)) {
            std::vector<K> shifted(den0.coefficients().begin() + 1, den0.coefficients().end());
            den0 = Poly(std::move(shifted));
            ++v;
        }
        int target = k + v;
        if (target < 0) return K(0);
        return RatFunc(num_, den0, no_reduce{}).series_at_zero(target).back();
    }

    /// Limit as the variable tends to infinity: 0 if deg num < deg den,
    /// ratio of leading coefficients if equal, pole otherwise.
    K limit_at_infinity() const {
        if (is_zero()) return K(0);
        if (num_.degree() < den_.degree()) return K(0);
        if (num_.degree() > den_.degree()) throw pole_error("rational function diverges at infinity");
        return K(num_.leading() / den_.leading());
    }

    /// If this value is c*x^n (monomial over monomial after reduction),
    /// returns {c, n} with n possibly negative.
    std::pair<K, int> as_monomial() const {
        auto single_term = [](const Poly& p) {
            int nz = 0;
            for (int d = 0; d <= p.degree(); ++d)
                if (!(p.coefficient(d) == K(0))) ++nz;
            return nz == 1;
        };
        if (is_zero() || !single_term(num_) || !single_term(den_))
            throw std::invalid_argument("rational function is not a monomial");
        return {K(num_.leading() / den_.leading()), num_.degree() - den_.degree()};
    }

    std::string str(const std::string& var = "x") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

private:
    struct no_reduce {};
    RatFunc(Poly num, Poly den, no_reduce) : num_(std::move(num)), den_(std::move(den)) {}

    void reduce() {
        if (den_.is_zero()) throw pole_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        K lc = den_.leading();
        if (!(lc == K(1))) {
            K inv = K(K(1) / lc);
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Poly num_;
    Poly den_;
};

using BetaPoly = UniPoly<Rational>;
using BetaFunc = RatFunc<Rational>;

}  // namespace hooklab
