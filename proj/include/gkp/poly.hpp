#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "gkp/rational.hpp"

namespace gkp {

/// Dense univariate polynomial over Rat, canonical form: no trailing zero
/// coefficients; the zero polynomial has an empty coefficient vector.
/// The indeterminate is conventionally called t.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT
    Poly(int c) : Poly(Rat(c)) {}                              // NOLINT
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

    /// The monomial c * t^d.
    static Poly monomial(const Rat& c, long d);
    /// The indeterminate t.
    static Poly t() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rat& leading() const;
    Rat coeff(long i) const { return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Rat& s) const;
    /// d/dt.
    Poly derive() const;
    Rat eval(const Rat& t0) const;
    /// Substitution t -> inner(t).
    Poly compose(const Poly& inner) const;
    Poly pow(long e) const;

    /// Quotient and remainder with deg(rem) < deg(divisor).
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    /// Exact division; throws DomainError on a nonzero remainder.
    Poly divexact(const Poly& divisor) const;

    /// Monic gcd (gcd of anything with 0 is the other argument made monic).
    static Poly gcd(Poly a, Poly b);

    Poly monic() const;

    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Rat> c_;
};

/// Quotient of two polynomials in canonical form: den is monic, nonzero and
/// coprime to num; zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT
    RatFunc(int c) : num_(Rat(c)), den_(Rat(1)) {}    // NOLINT
    RatFunc(const Poly& p) : num_(p), den_(Rat(1)) {} // NOLINT
    RatFunc(Poly num, Poly den);

    static RatFunc t() { return RatFunc(Poly::t()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    /// True when the denominator has reduced to 1.
    bool is_poly() const { return den_.degree() == 0; }
    /// The polynomial value; throws unless is_poly().
    Poly as_poly() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc reciprocal() const;
    RatFunc pow(long e) const;
    RatFunc derive() const;

    std::string str(const std::string& var = "t") const;

private:
    Poly num_, den_;
};

/// Evaluates p at a rational-function argument.
RatFunc eval_at(const Poly& p, const RatFunc& x);

// Ring hooks for the generic truncated-series code.
inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline bool is_one(const Poly& p) { return p.degree() == 0 && p.coeff(0).is_one(); }
Poly ring_invert(const Poly& p);
inline Poly mul_rat(const Poly& p, const Rat& s) { return p.scaled(s); }

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
inline bool is_one(const RatFunc& f) { return f.is_poly() && is_one(f.num()); }
inline RatFunc ring_invert(const RatFunc& f) { return f.reciprocal(); }
inline RatFunc mul_rat(const RatFunc& f, const Rat& s) { return f * RatFunc(s); }

} // namespace gkp
