#include "gkp/derivation.hpp"

#include <sstream>

#include "gkp/errors.hpp"
#include "gkp/factorials.hpp"
#include "gkp/families.hpp"

namespace gkp {

MonoElem MonoElem::monomial(const Rat& c, const Rat& p, const Rat& q) {
    MonoElem e;
    e.add_term(c, p, q);
    return e;
}

Rat MonoElem::coeff(const Rat& p, const Rat& q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? Rat(0) : it->second;
}

void MonoElem::add_term(const Rat& c, const Rat& p, const Rat& q) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Exponents{p, q}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MonoElem operator+(const MonoElem& a, const MonoElem& b) {
    MonoElem r = a;
    for (const auto& [pq, c] : b.terms_) r.add_term(c, pq.first, pq.second);
    return r;
}

MonoElem operator-(const MonoElem& a, const MonoElem& b) {
    MonoElem r = a;
    for (const auto& [pq, c] : b.terms_) r.add_term(-c, pq.first, pq.second);
    return r;
}

MonoElem operator*(const MonoElem& a, const MonoElem& b) {
    MonoElem r;
    for (const auto& [pq1, c1] : a.terms_)
        for (const auto& [pq2, c2] : b.terms_)
            r.add_term(c1 * c2, pq1.first + pq2.first, pq1.second + pq2.second);
    return r;
}

MonoElem MonoElem::scaled(const Rat& s) const {
    MonoElem r;
    for (const auto& [pq, c] : terms_) r.add_term(c * s, pq.first, pq.second);
    return r;
}

std::string MonoElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pq, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*x^(" << pq.first.str() << ")*y^(" << pq.second.str() << ")";
    }
    return os.str();
}

MonoElem mono_derive_general(const MonoElem& e, const Rat& d1x, const Rat& d1y, const Rat& s1,
                             const Rat& d2x, const Rat& d2y, const Rat& s2) {
    MonoElem r;
    for (const auto& [pq, c] : e.terms()) {
        const Rat& p = pq.first;
        const Rat& q = pq.second;
        r.add_term(c * p * s1, p + d1x, q + d1y);
        r.add_term(c * q * s2, p + d2x, q + d2y);
    }
    return r;
}

MonoElem mono_derive(const MonoElem& e, const GkpParams& params) {
    return mono_derive_general(e, params.alpha, params.alphaP, Rat(1),
                               params.alpha + params.beta, params.alphaP + params.betaP, Rat(1));
}

Triangle triangle_via_derivation(const GkpParams& params, long N) {
    if (params.beta.is_zero() && params.betaP.is_zero())
        throw DomainError("the derivation engine needs (beta, beta') != (0, 0) so the "
                          "column offsets stay distinct");
    std::vector<std::vector<Rat>> rows;
    rows.reserve(static_cast<std::size_t>(N) + 1);
    MonoElem cur = MonoElem::monomial(Rat(1), params.gamma, params.gammaP);
    for (long n = 0; n <= N; ++n) {
        // expected support: exponents (g + a n + b k, g' + a' n + b' k), 0 <= k <= n
        std::vector<Rat> row(static_cast<std::size_t>(n) + 1, Rat(0));
        long found = 0;
        for (long k = 0; k <= n; ++k) {
            Rat px = params.gamma + params.alpha * Rat(n) + params.beta * Rat(k);
            Rat py = params.gammaP + params.alphaP * Rat(n) + params.betaP * Rat(k);
            Rat c = cur.coeff(px, py);
            if (!c.is_zero()) ++found;
            row[static_cast<std::size_t>(k)] = c;
        }
        if (found != cur.term_count())
            throw InternalCheckError("derivation engine produced support off the expected "
                                     "exponent lattice at step " + std::to_string(n) + ": " +
                                     cur.str());
        rows.push_back(std::move(row));
        if (n < N) cur = mono_derive(cur, params);
    }
    return Triangle(params, std::move(rows));
}

CheckReport corollary_series_check(const GkpParams& params, long N) {
    if (params.beta.is_zero() && params.betaP.is_zero())
        return CheckReport::skip("needs (beta, beta') != (0, 0)");
    Triangle tri = Triangle::from_recurrence(params, N);
    MonoElem cur = MonoElem::monomial(Rat(1), params.gamma, params.gammaP);
    for (long n = 0; n <= N; ++n) {
        // delta-order n of the exponentiated derivation: D^n(x^g y^g') / n!
        MonoElem lhs = cur.scaled(factorial(n).reciprocal());
        // same order of x^g y^g' (x^a y^a')^n G_n(x^b y^b') / n!
        MonoElem rhs;
        for (long k = 0; k <= n; ++k)
            rhs.add_term(tri.entry(n, k) / factorial(n),
                         params.gamma + params.alpha * Rat(n) + params.beta * Rat(k),
                         params.gammaP + params.alphaP * Rat(n) + params.betaP * Rat(k));
        if (!(lhs == rhs))
            return CheckReport::fail("exponentiated derivation differs from the EGF "
                                     "substitution at order " + std::to_string(n));
        if (n < N) cur = mono_derive(cur, params);
    }
    return CheckReport::pass();
}

CheckReport sectan_identity_check(SectanKind kind, const Rat& c0, const Rat& cInf, long n) {
    // the three canonical derivations, with x, y realized as
    //   tan/sec, sec/tan, cosh/sinh respectively
    FamilyKind family;
    GkpParams params;
    switch (kind) {
    case SectanKind::penult_a:
        family = FamilyKind::sectan_s;
        params = GkpParams{-1, 2, c0, 2, -2, cInf};
        break;
    case SectanKind::penult_b:
        family = FamilyKind::sectan_rs;
        params = GkpParams{0, 2, c0, 1, -2, cInf};
        break;
    default:
        family = FamilyKind::sectan_e;
        params = GkpParams{-1, 2, c0, 1, -2, cInf};
        break;
    }
    Triangle from_derivation = triangle_via_derivation(params, n);
    Triangle from_rec = family_triangle({family, Rat(2), c0, cInf}, n);
    if (from_derivation == from_rec) return CheckReport::pass();
    return CheckReport::fail("derivation engine and recurrence rows differ for the "
                             "secant-tangent family");
}

CheckReport iterated_operator_check(const GkpParams& params, long n) {
    const Rat &beta = params.beta, &betaP = params.betaP;
    if (beta.is_zero() || betaP.is_zero())
        return CheckReport::skip("the iterated-operator form needs beta*beta' != 0");
    Rat ah = params.alpha / beta;
    Rat ahP = -params.alphaP / betaP;
    Rat gh = params.gamma / beta;
    Rat ghP = -params.gammaP / betaP;

    Triangle tri = Triangle::from_recurrence(params, n);

    // Formal carrier with x standing for t and y for beta + beta' t.  One
    // application of the operator t^{1+ah} (beta+beta' t)^{1-ah-ahP} d/dt
    // sends x^p y^q to p x^{p+ah} y^{q+1-ah-ahP} + q beta' x^{p+1+ah} y^{q-ah-ahP}.
    // Because y is a polynomial in x under the substitution, the comparison
    // happens at the row-polynomial level: stripping the common factor
    // x^{ah m + gh} y^{-(ah+ahP) m - gh - ghP} leaves integer exponent pairs
    // (j, m - j) whose terms assemble to t^j (beta+beta' t)^{m-j}.
    MonoElem cur = MonoElem::monomial(Rat(1), gh, -gh - ghP);
    Poly y_poly{beta, betaP};
    for (long m = 0; m <= n; ++m) {
        Rat base_x = ah * Rat(m) + gh;
        Rat base_y = -(ah + ahP) * Rat(m) - gh - ghP;
        Poly assembled;
        long matched = 0;
        for (long j = 0; j <= m; ++j) {
            Rat c = cur.coeff(base_x + Rat(j), base_y + Rat(m - j));
            if (!c.is_zero()) ++matched;
            assembled += (Poly::monomial(Rat(1), j) * y_poly.pow(m - j)).scaled(c);
        }
        if (matched != cur.term_count())
            return CheckReport::fail("iterated-operator support left the expected lattice at "
                                     "step " + std::to_string(m));
        if (assembled != tri.row_polynomial(m))
            return CheckReport::fail("iterated-operator rows differ from the recurrence at "
                                     "step " + std::to_string(m));
        if (m < n)
            cur = mono_derive_general(cur, ah, Rat(1) - ah - ahP, Rat(1),
                                      Rat(1) + ah, -ah - ahP, betaP);
    }
    return CheckReport::pass();
}

} // namespace gkp
