#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "gkp/errors.hpp"

namespace gkp {

/// Arbitrary-precision rational number, the universal scalar of the library.
///
/// Canonical form (denominator > 0, gcd(|num|, den) = 1) is maintained after
/// every operation, so equality is structural.  Backed by GMP's mpq.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}                       // NOLINT(google-explicit-constructor)
    Rat(long n) : v_(static_cast<long>(n)) {}   // NOLINT(google-explicit-constructor)
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& z) : v_(z) {}
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "p", "-p", or "p/q" (no spaces, q > 0 after canonicalization).
    static Rat parse(const std::string& text);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonnegative_integer() const { return is_integer() && sgn(v_) >= 0; }
    bool is_nonpositive_integer() const { return is_integer() && sgn(v_) <= 0; }
    int sign() const { return sgn(v_); }

    /// Value as a machine integer; requires is_integer() and fitting range.
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw DomainError("rational " + str() + " is not a small integer");
        return v_.get_num().get_si();
    }

    /// Largest integer <= value.
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw DomainError("division of rational by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat reciprocal() const {
        if (is_zero()) throw DomainError("reciprocal of zero");
        mpq_class r;
        mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
        return Rat(r);
    }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    /// "p/q" with q > 0, or a bare integer when q = 1.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// r^e for integer e (negative allowed when r != 0).
Rat pow_int(const Rat& base, long e);

// Ring hooks used by the generic truncated-series code.
inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline bool is_one(const Rat& r) { return r.is_one(); }
inline Rat ring_invert(const Rat& r) { return r.reciprocal(); }
inline Rat mul_rat(const Rat& x, const Rat& s) { return x * s; }

} // namespace gkp
