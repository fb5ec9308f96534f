#ifndef DORMANT_LAURENT_HPP
#define DORMANT_LAURENT_HPP

#include "dormant/errors.hpp"
#include "dormant/polynomial.hpp"
#include "dormant/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dormant {

template <typename R> R ring_one();
template <> inline Rational ring_one<Rational>() { return Rational(1); }
template <> inline Polynomial ring_one<Polynomial>() { return Polynomial::constant(Rational(1)); }

inline bool ring_is_zero(const Rational& a) { return a.is_zero(); }
inline bool ring_is_zero(const Polynomial& a) { return a.is_zero(); }

inline Rational ring_inverse(const Rational& a) {
    if (a.is_zero())
        throw singular_series_error("Laurent inversion: zero leading coefficient");
    return Rational(1) / a;
}
inline Polynomial ring_inverse(const Polynomial& a) {
    if (a.is_zero() || !a.is_constant())
        throw singular_series_error("Laurent inversion: leading coefficient \"" +
                                    a.to_string() + "\" is not a unit");
    return Polynomial::constant(Rational(1) / a.coeff(0), a.indeterminate());
}

/*
 * Truncated Laurent series over a coefficient ring R (Rational or
 * Polynomial): sum of c_e * x^e for valuation <= e <= truncation_order,
 * with every coefficient below the valuation known to be zero and nothing
 * known above the truncation order.
 *
 * Truncation bookkeeping is pessimistic so that every reported coefficient
 * is exact: products know their result only up to
 * min(val_a + trunc_b, val_b + trunc_a), sums up to min(trunc_a, trunc_b),
 * and the inverse of a series with valuation v up to trunc - 2v.
 * Reading a coefficient beyond the truncation order throws.
 *
 * Normal form: the coefficient at the valuation is nonzero unless the
 * series is zero everywhere it is known, in which case the valuation is
 * pinned to the truncation order.
 */
template <typename R>
class LaurentSeries {
public:
    // Coefficients for exponents valuation, valuation+1, ... (must be
    // nonempty); the truncation order is valuation + coeffs.size() - 1.
    LaurentSeries(long valuation, std::vector<R> coeffs)
        : val_(valuation), c_(std::move(coeffs)) {
        if (c_.empty())
            throw std::invalid_argument("LaurentSeries: empty coefficient range");
        normalize();
    }

    static LaurentSeries one(long truncation_order) {
        if (truncation_order < 0)
            throw std::invalid_argument("LaurentSeries::one: truncation below constant term");
        std::vector<R> c(truncation_order + 1);
        c[0] = ring_one<R>();
        return LaurentSeries(0, std::move(c));
    }

    long valuation() const { return val_; }
    long truncation_order() const { return trunc_; }

    // Coefficient of x^e; exact for e <= truncation_order, never a guess.
    R coeff(long e) const {
        if (e > trunc_)
            throw std::out_of_range("LaurentSeries: coefficient beyond truncation order");
        if (e < val_)
            return R{};
        return c_[static_cast<std::size_t>(e - val_)];
    }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!ring_is_zero(c))
                return false;
        return true;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        long val = std::min(a.val_, b.val_);
        long trunc = std::min(a.trunc_, b.trunc_);
        std::vector<R> c(static_cast<std::size_t>(trunc - val + 1));
        for (long e = val; e <= trunc; ++e) {
            R s{};
            if (e >= a.val_ && e <= a.trunc_)
                s += a.c_[static_cast<std::size_t>(e - a.val_)];
            if (e >= b.val_ && e <= b.trunc_)
                s += b.c_[static_cast<std::size_t>(e - b.val_)];
            c[static_cast<std::size_t>(e - val)] = std::move(s);
        }
        return LaurentSeries(val, std::move(c));
    }

    // Adding an exactly-known constant does not lose truncation; a constant
    // above the truncation order is invisible there and is dropped.
    LaurentSeries plus_constant(const R& k) const {
        if (trunc_ < 0)
            return *this;
        LaurentSeries r(*this);
        if (r.val_ > 0) {
            r.c_.insert(r.c_.begin(), static_cast<std::size_t>(r.val_), R{});
            r.val_ = 0;
        }
        r.c_[static_cast<std::size_t>(-r.val_)] += k;
        r.normalize();
        return r;
    }

    LaurentSeries scaled(const R& s) const {
        LaurentSeries r(*this);
        for (auto& c : r.c_)
            c = c * s;
        r.normalize();
        return r;
    }

    LaurentSeries operator-() const { return scaled(-ring_one<R>()); }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        long val = a.val_ + b.val_;
        long trunc = std::min(a.val_ + b.trunc_, b.val_ + a.trunc_);
        std::vector<R> c(static_cast<std::size_t>(trunc - val + 1));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (ring_is_zero(a.c_[i]))
                continue;
            long ea = a.val_ + static_cast<long>(i);
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                long e = ea + b.val_ + static_cast<long>(j);
                if (e > trunc)
                    break;
                c[static_cast<std::size_t>(e - val)] += a.c_[i] * b.c_[j];
            }
        }
        return LaurentSeries(val, std::move(c));
    }

    /*
     * Multiplicative inverse.  With a = sum_{e>=v} a_e x^e and leading unit
     * a_v, the inverse b has valuation -v and coefficients given by
     * b_0 = 1/a_v,  b_m = -(sum_{j=1}^{m} a_{v+j} b_{m-j}) / a_v
     * (indices relative to the respective valuations); the result is
     * reliable through truncation_order - 2*valuation.
     */
    LaurentSeries invert() const {
        if (is_zero())
            throw singular_series_error("Laurent inversion: zero series");
        R lead_inv = ring_inverse(c_.front());
        std::size_t m = c_.size(); // relative orders carried through
        std::vector<R> b(m);
        b[0] = lead_inv;
        for (std::size_t e = 1; e < m; ++e) {
            R acc{};
            for (std::size_t j = 1; j <= e; ++j)
                acc += c_[j] * b[e - j];
            b[e] = -acc * lead_inv;
        }
        return LaurentSeries(-val_, std::move(b));
    }

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.val_ == b.val_ && a.trunc_ == b.trunc_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) {
        return !(a == b);
    }

private:
    void normalize() {
        trunc_ = val_ + static_cast<long>(c_.size()) - 1;
        std::size_t lead = 0;
        while (lead < c_.size() && ring_is_zero(c_[lead]))
            ++lead;
        if (lead == c_.size()) { // zero series: pin valuation to truncation
            c_.assign(1, R{});
            val_ = trunc_;
            return;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            val_ += static_cast<long>(lead);
        }
    }

    long val_;
    long trunc_;
    std::vector<R> c_;
};

// Lift a rational series to polynomial coefficients (for mixed products
// such as multiplying by a series whose coefficients depend on k).
inline LaurentSeries<Polynomial> promote(const LaurentSeries<Rational>& s,
                                         const std::string& indeterminate) {
    std::vector<Polynomial> c;
    long n = s.truncation_order() - s.valuation() + 1;
    c.reserve(static_cast<std::size_t>(n));
    for (long e = s.valuation(); e <= s.truncation_order(); ++e)
        c.push_back(Polynomial::constant(s.coeff(e), indeterminate));
    return LaurentSeries<Polynomial>(s.valuation(), std::move(c));
}

} // namespace dormant

#endif
