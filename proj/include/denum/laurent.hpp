#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "denum/combinatorics.hpp"
#include "denum/polynomial.hpp"
#include "denum/rational.hpp"

namespace denum {

// Querying a coefficient past the truncation window. Deliberately loud:
// a silent zero here is the classic series bug.
struct TruncationError : std::out_of_range {
    explicit TruncationError(const std::string& what) : std::out_of_range(what) {}
};

// Field hooks for Rational; Q(zeta_q) provides its own overloads. Every
// series carries a prototype element so field context (the conductor)
// survives through empty coefficient vectors.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational rational_embed(const Rational&, const Rational& r) { return r; }
inline Rational inv_elem(const Rational& a) { return a.inverse(); }
inline bool is_zero_elem(const Rational& a) { return a.is_zero(); }

// Truncated Laurent series: coefficients of t^k are known exactly for
// k <= high(); the stored vector starts at lead() and drops leading zeros.
template <class F>
class LaurentSeries {
public:
    // coeffs holds t^lead .. t^(lead+size-1); exponents up to `high` beyond
    // the vector are known zeros. high >= lead + size - 1 required.
    LaurentSeries(int lead, std::vector<F> coeffs, int high, F proto)
        : lead_(lead), hi_(high), c_(std::move(coeffs)), zero_(std::move(proto)) {
        if (hi_ < lead_ + static_cast<int>(c_.size()) - 1)
            throw std::invalid_argument("series window shorter than coefficient vector");
        normalize();
    }

    static LaurentSeries constant(const F& value, int high) {
        return LaurentSeries(0, {value}, high, zero_like(value));
    }
    static LaurentSeries monomial(const F& value, int k, int high) {
        return LaurentSeries(k, {value}, high, zero_like(value));
    }
    static LaurentSeries zero(const F& proto, int high) {
        return LaurentSeries(0, {}, high, proto);
    }

    bool is_zero() const { return c_.empty(); }
    int lead() const { return lead_; }
    int high() const { return hi_; }
    int order() const { return hi_ - lead_; }
    const F& proto() const { return zero_; }

    F coefficient_at(int k) const {
        if (k > hi_)
            throw TruncationError("coefficient of t^" + std::to_string(k) +
                                  " is beyond the truncation window (high = " +
                                  std::to_string(hi_) + ")");
        if (k < lead_ || k >= lead_ + static_cast<int>(c_.size())) return zero_;
        return c_[k - lead_];
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        return a.combine(b, false);
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a.combine(b, true);
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        int la = a.effective_lead(), lb = b.effective_lead();
        int hi = std::min(a.hi_ + lb, b.hi_ + la);
        if (a.is_zero() || b.is_zero()) return zero(a.zero_, hi);
        int lead = la + lb;
        std::vector<F> c(static_cast<std::size_t>(hi - lead + 1), a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero_elem(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                std::size_t k = i + j;
                if (k >= c.size()) break;
                c[k] = c[k] + a.c_[i] * b.c_[j];
            }
        }
        return LaurentSeries(lead, std::move(c), hi, a.zero_);
    }

private:
    LaurentSeries combine(const LaurentSeries& b, bool negate) const {
        int hi = std::min(hi_, b.hi_);
        int lead = std::min(effective_lead(), b.effective_lead());
        lead = std::min(lead, hi + 1);
        std::vector<F> c;
        c.reserve(static_cast<std::size_t>(hi - lead + 1));
        for (int k = lead; k <= hi; ++k) {
            F bv = b.coefficient_at(k);
            c.push_back(negate ? coefficient_at(k) - bv : coefficient_at(k) + bv);
        }
        return LaurentSeries(lead, std::move(c), hi, zero_);
    }

    // lead of the first nonzero coefficient; hi+1 when identically zero,
    // which is the exactly-known vanishing order bound.
    int effective_lead() const { return c_.empty() ? hi_ + 1 : lead_; }

    void normalize() {
        std::size_t drop = 0;
        while (drop < c_.size() && is_zero_elem(c_[drop])) ++drop;
        if (drop) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(drop));
            lead_ += static_cast<int>(drop);
        }
        while (!c_.empty() && is_zero_elem(c_.back())) c_.pop_back();
        if (c_.empty()) lead_ = 0;
    }

    int lead_;
    int hi_;
    std::vector<F> c_;
    F zero_;
};

enum class SeriesOp { add, mul };

template <class F>
LaurentSeries<F> series_arith(const LaurentSeries<F>& a, const LaurentSeries<F>& b,
                              SeriesOp op) {
    return op == SeriesOp::add ? a + b : a * b;
}

template <class F>
F coefficient(const LaurentSeries<F>& a, int k) {
    return a.coefficient_at(k);
}

template <class F>
LaurentSeries<F> series_inv(const LaurentSeries<F>& a) {
    if (a.is_zero()) throw std::domain_error("series not invertible: zero series");
    int n = a.order();
    int la = a.lead();
    F lead_inv = inv_elem(a.coefficient_at(la));
    std::vector<F> b(static_cast<std::size_t>(n + 1), a.proto());
    b[0] = lead_inv;
    for (int m = 1; m <= n; ++m) {
        F s = a.proto();
        for (int j = 1; j <= m; ++j) s = s + a.coefficient_at(la + j) * b[m - j];
        b[m] = a.proto() - lead_inv * s;
    }
    return LaurentSeries<F>(-la, std::move(b), -la + n, a.proto());
}

template <class F>
LaurentSeries<F> series_exp(const LaurentSeries<F>& a) {
    if (!a.is_zero() && a.lead() < 1)
        throw std::domain_error("series_exp requires a vanishing constant term");
    int hi = a.high();
    if (hi < 0) throw TruncationError("series_exp window excludes the constant term");
    F one = one_like(a.proto());
    std::vector<F> f(static_cast<std::size_t>(hi + 1), a.proto());
    f[0] = one;
    for (int m = 1; m <= hi; ++m) {
        F s = a.proto();
        for (int j = 1; j <= m; ++j)
            s = s + rational_embed(a.proto(), Rational(j)) * a.coefficient_at(j) * f[m - j];
        f[m] = rational_embed(a.proto(), Rational(1, m)) * s;
    }
    return LaurentSeries<F>(0, std::move(f), hi, a.proto());
}

template <class F>
LaurentSeries<F> series_log(const LaurentSeries<F>& a) {
    F one = one_like(a.proto());
    if (a.is_zero() || a.lead() != 0 || !is_zero_elem(a.coefficient_at(0) - one))
        throw std::domain_error("series_log requires constant term 1");
    int hi = a.high();
    std::vector<F> l(static_cast<std::size_t>(hi + 1), a.proto());
    for (int m = 1; m <= hi; ++m) {
        F s = a.coefficient_at(m);
        for (int j = 1; j < m; ++j)
            s = s - rational_embed(a.proto(), Rational(j, m)) * l[j] * a.coefficient_at(m - j);
        l[m] = s;
    }
    return LaurentSeries<F>(0, std::move(l), hi, a.proto());
}

// exp(c t) truncated at t^high.
template <class F>
LaurentSeries<F> exp_of_scalar_times_t(const F& c, int high) {
    std::vector<F> v(static_cast<std::size_t>(high + 1), zero_like(c));
    F acc = one_like(c);
    v[0] = acc;
    for (int k = 1; k <= high; ++k) {
        acc = rational_embed(c, Rational(1, k)) * acc * c;
        v[k] = acc;
    }
    return LaurentSeries<F>(0, std::move(v), high, zero_like(c));
}

// Power-series view of a polynomial: coefficients beyond the degree are
// known zeros out to t^high.
inline LaurentSeries<Rational> power_series_from_poly(const Polynomial& p, int high) {
    return LaurentSeries<Rational>(0, p.coeffs(), high, Rational(0));
}

}  // namespace denum
