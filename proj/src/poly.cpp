#include "gkp/poly.hpp"

#include <sstream>

#include "gkp/errors.hpp"

namespace gkp {

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const Rat& c, long d) {
    if (d < 0) throw DomainError("monomial of negative degree");
    if (c.is_zero()) return Poly();
    std::vector<Rat> v(static_cast<std::size_t>(d) + 1, Rat(0));
    v.back() = c;
    return Poly(std::move(v));
}

const Rat& Poly::leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::scaled(const Rat& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

Poly Poly::derive() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(v));
}

Rat Poly::eval(const Rat& t0) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t0 + c_[i];
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly(c_[i]);
    return acc;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw DomainError("negative power of a polynomial");
    Poly acc(Rat(1));
    Poly base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc *= base;
        base *= base;
    }
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    Poly rem = *this;
    long dd = divisor.degree();
    Rat lead_inv = divisor.leading().reciprocal();
    std::vector<Rat> q;
    if (rem.degree() >= dd) q.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Rat(0));
    while (rem.degree() >= dd) {
        long shift = rem.degree() - dd;
        Rat f = rem.leading() * lead_inv;
        q[static_cast<std::size_t>(shift)] = f;
        rem -= Poly::monomial(f, shift) * divisor;
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::divexact(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero())
        throw DomainError("inexact polynomial division: remainder " + r.str());
    return q;
}

namespace {

// Integer-primitive representative: scales a nonzero polynomial so its
// coefficients are coprime integers with positive leading coefficient.
Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1;
    for (const Rat& c : p.coeffs())
        if (!c.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const Rat& c : p.coeffs()) {
        if (c.is_zero()) continue;
        mpz_class scaled_num = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Rat scale = Rat(den_lcm) / Rat(num_gcd);
    if (p.leading().sign() < 0) scale = -scale;
    return p.scaled(scale);
}

} // namespace

Poly Poly::gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = b;
        b = r.is_zero() ? Poly() : primitive_part(r);
    }
    return a.monic();
}

Poly Poly::monic() const {
    if (is_zero()) throw DomainError("monic form of the zero polynomial");
    return scaled(leading().reciprocal());
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rat& c = c_[i];
        if (c.is_zero()) continue;
        Rat mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = mag.is_one() && i > 0;
        if (!unit) os << mag.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly ring_invert(const Poly& p) {
    if (p.degree() != 0)
        throw DomainError("polynomial " + p.str() + " is not invertible in the polynomial ring");
    return Poly(p.coeff(0).reciprocal());
}

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
        num = num.divexact(g);
        den = den.divexact(g);
    }
    Rat lead = den.leading();
    num_ = num.scaled(lead.reciprocal());
    den_ = den.scaled(lead.reciprocal());
}

Poly RatFunc::as_poly() const {
    if (!is_poly())
        throw InternalCheckError("rational function " + str() +
                                 " did not reduce to a polynomial");
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("division of rational function by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return reciprocal().pow(-e);
    RatFunc acc(Rat(1));
    RatFunc base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc *= base;
        base *= base;
    }
    return acc;
}

RatFunc RatFunc::derive() const {
    return RatFunc(num_.derive() * den_ - num_ * den_.derive(), den_ * den_);
}

std::string RatFunc::str(const std::string& var) const {
    if (is_poly()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RatFunc eval_at(const Poly& p, const RatFunc& x) {
    RatFunc acc;
    for (long i = p.degree(); i >= 0; --i) acc = acc * x + RatFunc(p.coeff(i));
    return acc;
}

} // namespace gkp
