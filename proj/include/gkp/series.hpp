#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gkp/errors.hpp"
#include "gkp/factorials.hpp"
#include "gkp/poly.hpp"
#include "gkp/rational.hpp"

namespace gkp {

/// Truncated formal power series sum c_n z^n, n < order, over a coefficient
/// ring R (Rat, Poly or RatFunc).  The truncation order is carried
/// explicitly; binary operations take the minimum of the two orders, so a
/// result is never wrong below its own order.  Values are immutable in
/// spirit: every operation returns a fresh series.
template <class R>
class Series {
public:
    Series() : order_(0) {}
    explicit Series(long order) : order_(check_order(order)), c_(order_, R(Rat(0))) {}
    Series(long order, std::vector<R> coeffs) : order_(check_order(order)), c_(std::move(coeffs)) {
        c_.resize(order_, R(Rat(0)));
    }

    static Series constant(long order, const R& value) {
        Series s(order);
        if (order > 0) s.c_[0] = value;
        return s;
    }
    static Series one(long order) { return constant(order, R(Rat(1))); }
    /// The series z (truncated to the given order).
    static Series z(long order) {
        Series s(order);
        if (order > 1) s.c_[1] = R(Rat(1));
        return s;
    }

    long order() const { return order_; }
    const R& coeff(long n) const {
        static const R zero = R(Rat(0));
        return (n >= 0 && n < order_) ? c_[n] : zero;
    }
    const std::vector<R>& coeffs() const { return c_; }

    Series truncated(long new_order) const {
        new_order = std::min(new_order, order_);
        return Series(new_order, std::vector<R>(c_.begin(), c_.begin() + new_order));
    }

    Series operator-() const {
        Series r(order_);
        for (long i = 0; i < order_; ++i) r.c_[i] = R(Rat(0)) - c_[i];
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        long n = std::min(a.order_, b.order_);
        Series r(n);
        for (long i = 0; i < n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        long n = std::min(a.order_, b.order_);
        Series r(n);
        for (long i = 0; i < n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        long n = std::min(a.order_, b.order_);
        Series r(n);
        for (long i = 0; i < n; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (long j = 0; i + j < n; ++j) {
                if (is_zero(b.c_[j])) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    friend bool operator==(const Series& a, const Series& b) {
        long n = std::min(a.order_, b.order_);
        for (long i = 0; i < n; ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    Series scaled(const Rat& s) const {
        Series r(order_);
        for (long i = 0; i < order_; ++i) r.c_[i] = mul_rat(c_[i], s);
        return r;
    }
    Series scaled_ring(const R& s) const {
        Series r(order_);
        for (long i = 0; i < order_; ++i) r.c_[i] = c_[i] * s;
        return r;
    }

    /// Multiplicative inverse; the constant term must be invertible in R.
    Series inverse() const {
        require_nonempty("inverse");
        if (is_zero(c_[0]))
            throw DomainError("series inverse: constant term is zero");
        R inv0 = ring_invert(c_[0]);
        Series r(order_);
        r.c_[0] = inv0;
        for (long n = 1; n < order_; ++n) {
            R acc = R(Rat(0));
            for (long j = 1; j <= n; ++j) acc = acc + c_[j] * r.c_[n - j];
            r.c_[n] = R(Rat(0)) - inv0 * acc;
        }
        return r;
    }

    friend Series operator/(const Series& a, const Series& b) {
        long n = std::min(a.order(), b.order());
        return a.truncated(n) * b.truncated(n).inverse();
    }

    /// Integer power (negative allowed when the constant term is invertible).
    Series pow_int(long e) const {
        if (e < 0) return inverse().pow_int(-e);
        Series acc = one(order_);
        Series base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc = acc * base;
            base = base * base;
        }
        return acc;
    }

    /// base^q for rational q via the binomial series sum C(q, j) u^j with
    /// u = base - 1; requires constant term exactly 1 unless q is an integer.
    Series pow(const Rat& q) const {
        if (q.is_integer()) return pow_int(q.to_long());
        require_nonempty("pow");
        if (!is_one(c_[0]))
            throw DomainError("series pow with non-integer exponent: constant term is " +
                              constant_term_str() + ", expected 1");
        Series u = *this - one(order_);
        Series term = one(order_);
        Series acc = one(order_);
        for (long j = 1; j < order_; ++j) {
            term = term * u;
            acc = acc + term.scaled(binomial(q, j));
        }
        return acc;
    }

    Series sqrt() const { return pow(Rat(1, 2)); }

    /// log of a series with constant term 1.
    Series log() const {
        require_nonempty("log");
        if (!is_one(c_[0]))
            throw DomainError("series log: constant term is " + constant_term_str() +
                              ", expected 1");
        Series u = *this - one(order_);
        Series term = one(order_);
        Series acc(order_);
        for (long j = 1; j < order_; ++j) {
            term = term * u;
            Rat w(1, j);
            if (j % 2 == 0) w = -w;
            acc = acc + term.scaled(w);
        }
        return acc;
    }

    /// exp of a series with zero constant term.
    Series exp() const {
        require_nonempty("exp");
        if (!is_zero(c_[0]))
            throw DomainError("series exp: constant term is " + constant_term_str() +
                              ", expected 0");
        Series term = one(order_);
        Series acc = one(order_);
        for (long j = 1; j < order_; ++j) {
            term = term * *this;
            acc = acc + term.scaled(factorial(j).reciprocal());
        }
        return acc;
    }

    /// Substitution z -> inner(z); inner must have zero constant term.
    Series compose(const Series& inner) const {
        long n = std::min(order_, inner.order());
        if (n > 0 && !is_zero(inner.coeff(0)))
            throw DomainError("series compose: inner constant term is nonzero");
        Series acc(n);
        for (long i = n - 1; i >= 0; --i) {
            acc = acc * inner.truncated(n);
            acc.c_[0] = acc.c_[0] + c_[i];
        }
        return acc;
    }

    /// d/dz.
    Series derive() const {
        Series r(std::max<long>(order_ - 1, 0));
        for (long i = 1; i < order_; ++i) r.c_[i - 1] = mul_rat(c_[i], Rat(i));
        return r;
    }

private:
    static long check_order(long order) {
        if (order < 0) throw DomainError("series order must be non-negative");
        return order;
    }
    void require_nonempty(const char* op) const {
        if (order_ == 0) throw DomainError(std::string("series ") + op + " on order-0 series");
    }
    std::string constant_term_str() const;

    long order_;
    std::vector<R> c_;
};

template <>
inline std::string Series<Rat>::constant_term_str() const { return c_[0].str(); }
template <>
inline std::string Series<Poly>::constant_term_str() const { return c_[0].str(); }
template <>
inline std::string Series<RatFunc>::constant_term_str() const { return c_[0].str(); }

using SeriesQ = Series<Rat>;
using SeriesP = Series<Poly>;
using SeriesF = Series<RatFunc>;

/// Embeds a polynomial-coefficient series into rational-function coefficients.
inline SeriesF to_ratfunc_series(const SeriesP& s) {
    std::vector<RatFunc> c;
    c.reserve(s.order());
    for (long i = 0; i < s.order(); ++i) c.emplace_back(s.coeff(i));
    return SeriesF(s.order(), std::move(c));
}

/// Reduces a rational-function-coefficient series to polynomial coefficients;
/// throws InternalCheckError if any denominator fails to clear exactly.
SeriesP reduce_to_poly_series(const SeriesF& s);

} // namespace gkp
