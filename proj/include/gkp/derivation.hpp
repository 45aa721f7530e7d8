#pragma once

#include <map>
#include <string>
#include <utility>

#include "gkp/check.hpp"
#include "gkp/triangle.hpp"

namespace gkp {

/// Finite formal sum of monomials c x^p y^q with exact rational exponents,
/// the carrier of the iterated-derivation engine.  No zero coefficients are
/// stored and exponent pairs are unique.
class MonoElem {
public:
    using Exponents = std::pair<Rat, Rat>;

    MonoElem() = default;
    static MonoElem monomial(const Rat& c, const Rat& p, const Rat& q);

    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long term_count() const { return static_cast<long>(terms_.size()); }
    Rat coeff(const Rat& p, const Rat& q) const;

    void add_term(const Rat& c, const Rat& p, const Rat& q);

    friend MonoElem operator+(const MonoElem& a, const MonoElem& b);
    friend MonoElem operator-(const MonoElem& a, const MonoElem& b);
    friend MonoElem operator*(const MonoElem& a, const MonoElem& b);
    friend bool operator==(const MonoElem& a, const MonoElem& b) {
        return a.terms_ == b.terms_;
    }
    MonoElem scaled(const Rat& s) const;

    std::string str() const;

private:
    std::map<Exponents, Rat> terms_;
};

/// One application of the formal derivation D attached to a parameter array:
///   D(x^p y^q) = p x^{p+alpha} y^{q+alpha'} + q x^{p+alpha+beta} y^{q+alpha'+beta'}
/// (Leibniz plus the power rule, termwise).
MonoElem mono_derive(const MonoElem& e, const GkpParams& params);

/// General two-branch termwise derivation
///   D(x^p y^q) = s1 p x^{p+d1x} y^{q+d1y} + s2 q x^{p+d2x} y^{q+d2y};
/// mono_derive is the (s1, s2) = (1, 1) instance.
MonoElem mono_derive_general(const MonoElem& e, const Rat& d1x, const Rat& d1y, const Rat& s1,
                             const Rat& d2x, const Rat& d2y, const Rat& s2);

/// Generates rows 0..N by iterating D on x^gamma y^gamma' and reading
/// entry (n, k) off the coefficient at exponents
/// (gamma + alpha n + beta k, gamma' + alpha' n + beta' k).  Requires
/// (beta, beta') != (0, 0) so the k-offsets are distinct; any support off
/// that lattice is an internal fault.
Triangle triangle_via_derivation(const GkpParams& params, long N);

/// Exponential form: sum_n (delta^n / n!) D^n(x^g y^g') equals the
/// recurrence EGF with t -> x^beta y^beta' and z -> delta x^alpha y^alpha'
/// (times the seed monomial), compared as monomial-coefficient series in
/// delta through order N.
CheckReport corollary_series_check(const GkpParams& params, long N);

/// The three secant-tangent identities: iterated derivatives of the
/// canonical function pairs reproduce the W^S / W^rS / W^E triangles.  The
/// formal engine certifies them with x, y read as the concrete realizations
/// (tan/sec, sec/tan, cosh/sinh), which satisfy the same derivation rules.
enum class SectanKind { penult_a, penult_b, penult_c };
CheckReport sectan_identity_check(SectanKind kind, const Rat& c0, const Rat& cInf, long n);

/// Coherence of the iterated-operator formula for row polynomials with the
/// derivation engine under the substitution x = t, y = beta + beta' t:
/// n applications of t^{1+a^} (beta+beta' t)^{1-a^-a^'} d/dt to
/// t^{g^} (beta+beta' t)^{-g^-g^'} reproduce row polynomial n.  Requires
/// beta beta' != 0.
CheckReport iterated_operator_check(const GkpParams& params, long n);

} // namespace gkp
