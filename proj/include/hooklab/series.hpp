#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hooklab/poly.hpp"
#include "hooklab/rational.hpp"

namespace hooklab {

/// Truncated Laurent series over the rationals: coefficients are tracked for
/// exponents offset() .. order(); everything above order() is unknown.
class TruncSeries {
public:
    TruncSeries() : offset_(0), order_(-1) {}

    static TruncSeries zero(int order) { return TruncSeries(0, order, {}); }

    static TruncSeries constant(const Rational& c, int order) {
        TruncSeries s(0, order, {});
        s.add_term(0, c);
        return s;
    }

    static TruncSeries monomial(const Rational& c, int exp, int order) {
        TruncSeries s(std::min(exp, 0), order, {});
        s.add_term(exp, c);
        return s;
    }

    /// 1 / (1 - q^h) = 1 + q^h + q^{2h} + ...
    static TruncSeries geometric(int h, int order) {
        if (h <= 0) throw std::invalid_argument("geometric series needs a positive exponent");
        TruncSeries s(0, order, {});
        for (int e = 0; e <= order; e += h) s.add_term(e, Rational(1));
        return s;
    }

    int order() const { return order_; }
    int offset() const { return offset_; }

    Rational coefficient(int exp) const {
        if (exp > order_) throw std::invalid_argument("coefficient beyond the truncation order");
        if (exp < offset_ || exp - offset_ >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(exp - offset_)];
    }

    void add_term(int exp, const Rational& c) {
        if (exp > order_) return;
        if (exp < offset_) {
            c_.insert(c_.begin(), static_cast<std::size_t>(offset_ - exp), Rational(0));
            offset_ = exp;
        }
        std::size_t idx = static_cast<std::size_t>(exp - offset_);
        if (idx >= c_.size()) c_.resize(idx + 1, Rational(0));
        c_[idx] += c;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries out(std::min(a.offset_, b.offset_), std::min(a.order_, b.order_), {});
        for (int e = out.offset_; e <= out.order_; ++e)
            out.add_term(e, a.safe_coeff(e) + b.safe_coeff(e));
        return out;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries out(std::min(a.offset_, b.offset_), std::min(a.order_, b.order_), {});
        for (int e = out.offset_; e <= out.order_; ++e)
            out.add_term(e, a.safe_coeff(e) - b.safe_coeff(e));
        return out;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        // a is exact below order_a, so the product is trustworthy up to
        // min(order_a + offset_b, order_b + offset_a)
        int order = std::min(a.order_ + b.offset_, b.order_ + a.offset_);
        TruncSeries out(a.offset_ + b.offset_, order, {});
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                int e = a.offset_ + static_cast<int>(i) + b.offset_ + static_cast<int>(j);
                if (e > order) break;
                out.add_term(e, a.c_[i] * b.c_[j]);
            }
        }
        return out;
    }

    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    /// Equality of all coefficients up to the given exponent.
    bool agrees_with(const TruncSeries& o, int upTo) const {
        if (upTo > order_ || upTo > o.order_)
            throw std::invalid_argument("comparing beyond the truncation order");
        for (int e = std::min(offset_, o.offset_); e <= upTo; ++e)
            if (safe_coeff(e) != o.safe_coeff(e)) return false;
        return true;
    }

    std::string str(const std::string& var = "q") const {
        std::string out;
        for (int e = offset_; e <= order_; ++e) {
            Rational c = safe_coeff(e);
            if (c == 0) continue;
            if (!out.empty()) out += " + ";
            out += to_string(c);
            if (e != 0) out += "*" + var + "^" + std::to_string(e);
        }
        if (out.empty()) out = "0";
        return out + " + O(" + var + "^" + std::to_string(order_ + 1) + ")";
    }

    /// Expansion of a rational function around 0 to the given order; the
    /// denominator may vanish at 0 (Laurent shift).
    static TruncSeries expand(const RatFunc<Rational>& f, int order) {
        TruncSeries s(0, order, {});
        if (f.is_zero()) return s;
        int low = 0;
        while (f.num().coefficient(low) == 0 && low <= f.num().degree()) ++low;
        int lowDen = 0;
        while (f.den().coefficient(lowDen) == 0 && lowDen <= f.den().degree()) ++lowDen;
        int shift = low - lowDen;
        for (int e = shift; e <= order; ++e) s.add_term(e, f.laurent_coefficient(e));
        if (shift < 0) s.offset_ = std::min(s.offset_, shift);
        return s;
    }

private:
    TruncSeries(int offset, int order, std::vector<Rational> c)
        : offset_(offset), order_(order), c_(std::move(c)) {}

    Rational safe_coeff(int exp) const {
        if (exp < offset_ || exp - offset_ >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(exp - offset_)];
    }

    int offset_;
    int order_;
    std::vector<Rational> c_;
};

}  // namespace hooklab
