#include "gkp/characteristics.hpp"

#include <algorithm>

#include "gkp/errors.hpp"
#include "gkp/factorials.hpp"
#include "gkp/hypergeometric.hpp"

namespace gkp {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw DomainError(what);
}

RatFunc tvar() { return RatFunc::t(); }
RatFunc one_rf() { return RatFunc(Rat(1)); }

SeriesF sf_const(long N, const RatFunc& f) { return SeriesF::constant(N, f); }

/// c * z as a rational-function series.
SeriesF linz(long N, const RatFunc& c) { return SeriesF::z(N).scaled_ring(c); }

/// 1 + c1 z + c2 z^2.
SeriesF quadratic(long N, const RatFunc& c1, const RatFunc& c2) {
    std::vector<RatFunc> coeffs(static_cast<std::size_t>(N), RatFunc(Rat(0)));
    if (N > 0) coeffs[0] = one_rf();
    if (N > 1) coeffs[1] = c1;
    if (N > 2) coeffs[2] = c2;
    return SeriesF(N, std::move(coeffs));
}

/// Substitutes z -> scale * z (multiplies coefficient n by scale^n); used to
/// reduce general-b families to their b = 2 normal form.
SeriesF rescale_z(const SeriesF& s, const Rat& scale) {
    std::vector<RatFunc> c;
    c.reserve(s.order());
    Rat p(1);
    for (long n = 0; n < s.order(); ++n) {
        c.push_back(mul_rat(s.coeff(n), p));
        p *= scale;
    }
    return SeriesF(s.order(), std::move(c));
}

// --- case A builders -------------------------------------------------------

SeriesF egf_a1(const GkpParams& p, long N) {
    require(p.alphaP.is_zero(), "case A1 needs alpha' = 0");
    require(!p.alpha.is_zero(), "case A1 needs alpha != 0 (use the exponential limit)");
    require(!p.beta.is_zero() && !p.betaP.is_zero(), "case A1 needs beta*beta' != 0");
    SeriesF u = SeriesF::one(N) - linz(N, RatFunc(p.alpha));
    SeriesF head = u.pow(-p.gamma / p.alpha);
    SeriesF inner = SeriesF::one(N) - u.pow(-p.beta / p.alpha);
    SeriesF base = SeriesF::one(N) + inner.scaled_ring(tvar() * RatFunc(p.betaP / p.beta));
    return head * base.pow(-p.gammaP / p.betaP);
}

SeriesF egf_a1_limit(const GkpParams& p, long N) {
    require(p.alphaP.is_zero(), "case A1 limit needs alpha' = 0");
    require(p.alpha.is_zero(), "case A1 limit needs alpha = 0");
    require(!p.beta.is_zero() && !p.betaP.is_zero(), "case A1 limit needs beta*beta' != 0");
    SeriesF head = linz(N, RatFunc(p.gamma)).exp();
    SeriesF inner = SeriesF::one(N) - linz(N, RatFunc(p.beta)).exp();
    SeriesF base = SeriesF::one(N) + inner.scaled_ring(tvar() * RatFunc(p.betaP / p.beta));
    return head * base.pow(-p.gammaP / p.betaP);
}

SeriesF egf_a2(const GkpParams& p, long N) {
    require(p.alpha == -p.beta, "case A2 needs alpha = -beta");
    require(!p.beta.is_zero() && !p.betaP.is_zero(), "case A2 needs beta*beta' != 0");
    Rat apb = p.alphaP + p.betaP;
    require(!apb.is_zero(), "case A2 needs alpha' + beta' != 0 (use the exponential limit)");
    SeriesF u = SeriesF::one(N) - linz(N, tvar() * RatFunc(apb));
    SeriesF head = u.pow(-p.gammaP / apb);
    SeriesF inner = SeriesF::one(N) - u.pow(p.betaP / apb);
    SeriesF base =
        SeriesF::one(N) + inner.scaled_ring(tvar().reciprocal() * RatFunc(p.beta / p.betaP));
    return head * base.pow(p.gamma / p.beta);
}

SeriesF egf_a2_limit(const GkpParams& p, long N) {
    require(p.alpha == -p.beta, "case A2 limit needs alpha = -beta");
    require(p.alphaP == -p.betaP, "case A2 limit needs alpha' = -beta'");
    require(!p.beta.is_zero() && !p.betaP.is_zero(), "case A2 limit needs beta*beta' != 0");
    SeriesF head = linz(N, tvar() * RatFunc(p.gammaP)).exp();
    SeriesF inner = SeriesF::one(N) - linz(N, tvar() * RatFunc(-p.betaP)).exp();
    SeriesF base =
        SeriesF::one(N) + inner.scaled_ring(tvar().reciprocal() * RatFunc(p.beta / p.betaP));
    return head * base.pow(p.gamma / p.beta);
}

SeriesF egf_a3(const GkpParams& p, long N) {
    require(!p.beta.is_zero() && !p.betaP.is_zero(), "case A3 needs beta*beta' != 0");
    require(p.alpha / p.beta == p.alphaP / p.betaP + Rat(1),
            "case A3 needs alpha/beta = alpha'/beta' + 1");
    require(!p.alpha.is_zero(), "case A3 needs alpha != 0 (use the exponential limit)");
    RatFunc denom = RatFunc(p.beta) + RatFunc(p.betaP) * tvar(); // beta + beta' t
    RatFunc P = RatFunc(p.beta) / denom;
    RatFunc Q = RatFunc(p.betaP) * tvar() / denom;
    SeriesF core = SeriesF::one(N) - linz(N, RatFunc(p.alpha) / P);
    SeriesF base1 = SeriesF::one(N) - (SeriesF::one(N) - core.pow(p.beta / p.alpha)).scaled_ring(P);
    SeriesF base2 =
        SeriesF::one(N) - (SeriesF::one(N) - core.pow(-p.beta / p.alpha)).scaled_ring(Q);
    return base1.pow(-p.gamma / p.beta) * base2.pow(p.gammaP / p.betaP);
}

SeriesF egf_a3_limit(const GkpParams& p, long N) {
    require(!p.beta.is_zero() && !p.betaP.is_zero(), "case A3 limit needs beta*beta' != 0");
    require(p.alpha.is_zero() && p.alphaP == -p.betaP,
            "case A3 limit needs alpha = 0 and alpha' = -beta'");
    RatFunc denom = RatFunc(p.beta) + RatFunc(p.betaP) * tvar();
    RatFunc P = RatFunc(p.beta) / denom;
    RatFunc Q = RatFunc(p.betaP) * tvar() / denom;
    SeriesF base1 =
        SeriesF::one(N) - (SeriesF::one(N) - linz(N, -denom).exp()).scaled_ring(P);
    SeriesF base2 = SeriesF::one(N) - (SeriesF::one(N) - linz(N, denom).exp()).scaled_ring(Q);
    return base1.pow(-p.gamma / p.beta) * base2.pow(p.gammaP / p.betaP);
}

// --- Stirling / Eulerian family EGFs ---------------------------------------

SeriesF egf_s_elem(const GkpParams& p, long N) {
    require(p.alphaP.is_zero() && p.betaP.is_one() && p.gammaP.is_one(),
            "the factorial-weighted Stirling EGF expects the lower row (0, 1, 1)");
    Rat a = -p.alpha, b = p.beta, r = p.gamma;
    require(!b.is_zero(), "the factorial-weighted Stirling EGF needs b != 0");
    SeriesF head, bracket;
    if (a.is_zero()) {
        head = linz(N, RatFunc(r)).exp();
        bracket = linz(N, RatFunc(b)).exp() - SeriesF::one(N);
    } else {
        SeriesF u = SeriesF::one(N) + linz(N, RatFunc(a));
        head = u.pow(r / a);
        bracket = u.pow(b / a) - SeriesF::one(N);
    }
    SeriesF base = SeriesF::one(N) - bracket.scaled_ring(tvar() * RatFunc(b.reciprocal()));
    return head * base.inverse();
}

struct EulerianShape {
    Rat a, b, c0, cInf;
};

EulerianShape eulerian_shape(const GkpParams& p) {
    EulerianShape s{-p.alpha, p.beta, p.gamma, p.gammaP};
    require(!s.b.is_zero(), "Eulerian EGFs need b != 0");
    require(p.alphaP == s.a + s.b && p.betaP == -s.b,
            "expected the generalized Eulerian array [-a, b | c0; a+b, -b | cInf]");
    return s;
}

SeriesF egf_e_speck(const GkpParams& p, long N) {
    EulerianShape s = eulerian_shape(p);
    require(!s.a.is_zero(), "this EGF needs a != 0 (use the exponential limit)");
    RatFunc one_minus_t = one_rf() - tvar();
    SeriesF core = SeriesF::one(N) + linz(N, RatFunc(s.a) * one_minus_t);
    SeriesF base1 = SeriesF::one(N) -
                    (SeriesF::one(N) - core.pow(-s.b / s.a)).scaled_ring(one_minus_t.reciprocal());
    SeriesF base2 = SeriesF::one(N) +
                    (SeriesF::one(N) - core.pow(s.b / s.a))
                        .scaled_ring(tvar() * one_minus_t.reciprocal());
    return base1.pow(-s.c0 / s.b) * base2.pow(-s.cInf / s.b);
}

SeriesF egf_e_speck2(const GkpParams& p, long N) {
    EulerianShape s = eulerian_shape(p);
    require(s.a.is_zero(), "the exponential Eulerian EGF needs a = 0");
    RatFunc one_minus_t = one_rf() - tvar();
    SeriesF base1 = SeriesF::one(N) -
                    (SeriesF::one(N) - linz(N, RatFunc(-s.b) * one_minus_t).exp())
                        .scaled_ring(one_minus_t.reciprocal());
    SeriesF base2 = SeriesF::one(N) +
                    (SeriesF::one(N) - linz(N, RatFunc(s.b) * one_minus_t).exp())
                        .scaled_ring(tvar() * one_minus_t.reciprocal());
    return base1.pow(-s.c0 / s.b) * base2.pow(-s.cInf / s.b);
}

SeriesF egf_e_reducedspeck(const GkpParams& p, long N) {
    EulerianShape s = eulerian_shape(p);
    require(s.c0 + s.cInf == s.b, "the single-progression EGF needs c0 + cInf = b");
    RatFunc one_minus_t = one_rf() - tvar();
    SeriesF head, kb;
    if (s.a.is_zero()) {
        head = linz(N, RatFunc(s.c0) * one_minus_t).exp();
        kb = linz(N, RatFunc(s.b) * one_minus_t).exp();
    } else {
        SeriesF core = SeriesF::one(N) + linz(N, RatFunc(s.a) * one_minus_t);
        head = core.pow(s.c0 / s.a);
        kb = core.pow(s.b / s.a);
    }
    SeriesF denom = SeriesF::one(N) - kb.scaled_ring(tvar());
    return head.scaled_ring(one_minus_t) * denom.inverse();
}

// --- generalized Narayana (case B), normalized to b = 2 --------------------

struct BNormalized {
    Rat c0, c2;   // the (c0, cInf) pair after rescaling to b = 2
    Rat zscale;   // b / 2
};

BNormalized b_normalize(const GkpParams& p, FamilyKind kind) {
    Rat b = p.beta;
    require(!b.is_zero(), "Narayana EGFs need b != 0");
    NamedFamily probe{kind, b, p.gamma, p.gammaP};
    require(family_gkp(probe) == p,
            std::string("parameters do not match the ") + family_name(kind) + " shape");
    return BNormalized{Rat(2) * p.gamma / b, Rat(2) * p.gammaP / b, b / Rat(2)};
}

struct BCore {
    SeriesF s_plus, s_minus;
    RatFunc t_plus, t_minus;
    SeriesF sqrt_arg; // the square root S itself
};

BCore b_core(FamilyKind kind, long N) {
    RatFunc t = tvar();
    BCore c;
    switch (kind) {
    case FamilyKind::narayana_s: {
        c.t_plus = t;
        c.t_minus = one_rf() - t;
        SeriesF S = quadratic(N, RatFunc(Rat(2)) * (RatFunc(Rat(2)) * t - one_rf()), one_rf())
                        .sqrt();
        SeriesF num = sf_const(N, RatFunc(Rat(2)) * t - one_rf()) + SeriesF::z(N);
        c.s_plus = sf_const(N, RatFunc(Rat(1, 2))) + (num * S.inverse()).scaled(Rat(1, 2));
        c.sqrt_arg = S;
        break;
    }
    case FamilyKind::narayana_rs: {
        c.t_plus = t.reciprocal();
        c.t_minus = (t - one_rf()) / t;
        SeriesF S = quadratic(N, RatFunc(Rat(2)) * (RatFunc(Rat(2)) - t), t * t).sqrt();
        SeriesF num = sf_const(N, RatFunc(Rat(2)) - t) + SeriesF::z(N).scaled_ring(t * t);
        c.s_plus = sf_const(N, RatFunc(Rat(1, 2))) +
                   (num * S.inverse()).scaled_ring((RatFunc(Rat(2)) * t).reciprocal());
        c.sqrt_arg = S;
        break;
    }
    case FamilyKind::narayana_e: {
        RatFunc tm1 = t - one_rf();
        c.t_plus = t / tm1;
        c.t_minus = -tm1.reciprocal();
        RatFunc omt2 = tm1 * tm1;
        SeriesF S = quadratic(N, RatFunc(Rat(-2)) * (one_rf() + t), omt2).sqrt();
        SeriesF num = sf_const(N, one_rf() + t) - SeriesF::z(N).scaled_ring(omt2);
        c.s_plus = sf_const(N, RatFunc(Rat(1, 2))) +
                   (num * S.inverse()).scaled_ring((RatFunc(Rat(2)) * tm1).reciprocal());
        c.sqrt_arg = S;
        break;
    }
    default:
        throw DomainError("not a Narayana family kind");
    }
    c.s_minus = SeriesF::one(N) - c.s_plus;
    return c;
}

SeriesF egf_b_general(const GkpParams& p, FamilyKind kind, long N) {
    BNormalized norm = b_normalize(p, kind);
    BCore core = b_core(kind, N);
    SeriesF u = core.s_plus.scaled_ring(core.t_plus.reciprocal());
    SeriesF v = core.s_minus.scaled_ring(core.t_minus.reciprocal());
    Rat e_plus, e_minus;
    switch (kind) {
    case FamilyKind::narayana_s:
        e_plus = norm.c0 / Rat(2);
        e_minus = -(norm.c0 + norm.c2) / Rat(2);
        break;
    case FamilyKind::narayana_rs:
        e_plus = norm.c2 / Rat(2);
        e_minus = -(norm.c0 + norm.c2) / Rat(2);
        break;
    default:
        e_plus = norm.c0 / Rat(2);
        e_minus = norm.c2 / Rat(2);
        break;
    }
    return rescale_z(u.pow(e_plus) * v.pow(e_minus), norm.zscale);
}

/// Restricted one-parameter forms; restriction is 'a', 'b' or 'c'.
SeriesF egf_b_restricted(const GkpParams& p, FamilyKind kind, char restriction, long N) {
    BNormalized norm = b_normalize(p, kind);
    const Rat &c0 = norm.c0, &c2 = norm.c2;
    Rat c;
    switch (kind) {
    case FamilyKind::narayana_s:
        if (restriction == 'a') { c = c0; require(c2 == Rat(-2) * c, "restriction (a) needs cInf = -2 c0"); }
        else if (restriction == 'b') { c = c0; require(c2 == Rat(-2), "restriction (b) needs cInf = -2 (b = 2 scale)"); }
        else { c = c0 + Rat(1); require(c2.is_zero(), "restriction (c) needs cInf = 0"); }
        break;
    case FamilyKind::narayana_rs:
        if (restriction == 'a') { c = c2; require(c0 == Rat(-2) * c, "restriction (a) needs c0 = -2 cInf"); }
        else if (restriction == 'b') { c = c2; require(c0 == Rat(-2), "restriction (b) needs c0 = -2 (b = 2 scale)"); }
        else { c = c2 + Rat(1); require(c0.is_zero(), "restriction (c) needs c0 = 0"); }
        break;
    default:
        if (restriction == 'a') { c = c0; require(c2 == c, "restriction (a) needs cInf = c0"); }
        else if (restriction == 'b') { c = c0; require(c2 == Rat(2) - c, "restriction (b) needs cInf = 2 - c0 (b = 2 scale)"); }
        else { c = c0 + Rat(1); require(c2 == -c0, "restriction (c) needs cInf = -c0"); }
        break;
    }

    BCore core = b_core(kind, N);
    const SeriesF& S = core.sqrt_arg;
    RatFunc t = tvar();
    SeriesF g(N);
    if (restriction == 'a') {
        g = S.pow(-c);
    } else {
        switch (kind) {
        case FamilyKind::narayana_s: {
            SeriesF m = sf_const(N, RatFunc(Rat(-1)) + RatFunc(Rat(2)) * t) + SeriesF::z(N);
            if (restriction == 'b') {
                SeriesF base = (m + S).scaled_ring((RatFunc(Rat(2)) * t).reciprocal());
                g = S.inverse() * base.pow(c - Rat(1));
            } else {
                SeriesF base =
                    ((-m - S) * (-m + S).inverse()).scaled_ring((t - one_rf()) / t);
                g = base.pow((c - Rat(1)) / Rat(2));
            }
            break;
        }
        case FamilyKind::narayana_rs: {
            SeriesF m = sf_const(N, RatFunc(Rat(2)) - t) + SeriesF::z(N).scaled_ring(t * t);
            SeriesF tS = S.scaled_ring(t);
            if (restriction == 'b') {
                SeriesF base = (m + tS).scaled(Rat(1, 2));
                g = S.inverse() * base.pow(c - Rat(1));
            } else {
                SeriesF base = ((m + tS) * (m - tS).inverse()).scaled_ring(one_rf() - t);
                g = base.pow((c - Rat(1)) / Rat(2));
            }
            break;
        }
        default: {
            RatFunc omt = one_rf() - t;
            SeriesF m = sf_const(N, one_rf() + t) - SeriesF::z(N).scaled_ring(omt * omt);
            SeriesF oS = S.scaled_ring(omt);
            if (restriction == 'b') {
                SeriesF base = (m - oS).scaled_ring((RatFunc(Rat(2)) * t).reciprocal());
                g = S.inverse() * base.pow(c - Rat(1));
            } else {
                SeriesF base = ((m - oS) * (m + oS).inverse()).scaled_ring(t.reciprocal());
                g = base.pow((c - Rat(1)) / Rat(2));
            }
            break;
        }
        }
    }
    return rescale_z(g, norm.zscale);
}

// --- generalized secant-tangent (case C), normalized to b = 2 --------------

SeriesF egf_c(const GkpParams& p, FamilyKind kind, long N) {
    Rat b = p.beta;
    require(!b.is_zero(), "secant-tangent EGFs need b != 0");
    NamedFamily probe{kind, b, p.gamma, p.gammaP};
    require(family_gkp(probe) == p,
            std::string("parameters do not match the ") + family_name(kind) + " shape");
    Rat c0 = Rat(2) * p.gamma / b, c2 = Rat(2) * p.gammaP / b, zscale = b / Rat(2);

    RatFunc t = tvar();
    RatFunc t_plus, t_minus, u, cross;
    switch (kind) {
    case FamilyKind::sectan_s:
        t_plus = t;
        t_minus = one_rf() - t;
        u = t_plus * t_minus;
        cross = u; // sqrt(t+ t- u) with u = t+ t-
        break;
    case FamilyKind::sectan_rs:
        t_plus = t.reciprocal();
        t_minus = (t - one_rf()) / t;
        u = t_minus / t_plus;
        cross = t_minus; // sqrt(t+ t- u) with u = t-/t+
        break;
    case FamilyKind::sectan_e:
        t_plus = t / (t - one_rf());
        t_minus = (one_rf() - t).reciprocal();
        u = t_plus / t_minus;
        cross = t_plus; // sqrt(t+ t- u) with u = t+/t-
        break;
    default:
        throw DomainError("not a secant-tangent family kind");
    }

    // square-root-free trigonometric kernels in w = z^2 u:
    //   Ck = cos(z sqrt(u)),  Sk = sin(z sqrt(u)) / (z sqrt(u));
    // then s+ = t+ Ck^2 + t- w Sk^2 + 2 z cross Ck Sk and s- its mirror with
    // the cross term negated, eliminating every square root of t.  The sign
    // of the cross branch is pinned by the z^1 EGF coefficient c0 + cInf t.
    SeriesF w = (SeriesF::z(N) * SeriesF::z(N)).scaled_ring(u);
    SeriesF Ck(N), Sk(N);
    {
        SeriesF term = SeriesF::one(N);
        for (long k = 0; 2 * k < N; ++k) {
            Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
            Ck = Ck + term.scaled(sign / factorial(2 * k));
            Sk = Sk + term.scaled(sign / factorial(2 * k + 1));
            term = term * w;
        }
    }
    SeriesF cross_term = (SeriesF::z(N) * Ck * Sk).scaled_ring(RatFunc(Rat(2)) * cross);
    SeriesF s_plus = (Ck * Ck).scaled_ring(t_plus) + (w * Sk * Sk).scaled_ring(t_minus) +
                     cross_term;
    SeriesF s_minus = (Ck * Ck).scaled_ring(t_minus) + (w * Sk * Sk).scaled_ring(t_plus) -
                      cross_term;

    SeriesF up = s_plus.scaled_ring(t_plus.reciprocal());
    SeriesF vp = s_minus.scaled_ring(t_minus.reciprocal());
    Rat e_plus, e_minus;
    switch (kind) {
    case FamilyKind::sectan_s:
        e_plus = c0 / Rat(2);
        e_minus = -(c0 + c2) / Rat(2);
        break;
    case FamilyKind::sectan_rs:
        e_plus = c2 / Rat(2);
        e_minus = -(c0 + c2) / Rat(2);
        break;
    default:
        e_plus = c0 / Rat(2);
        e_minus = c2 / Rat(2);
        break;
    }
    return rescale_z(up.pow(e_plus) * vp.pow(e_minus), zscale);
}

SeriesF egf_c_sec(const GkpParams& p, int power, long N) {
    GkpParams expect{Rat(0), Rat(2), Rat(power), Rat(1), Rat(-2), Rat(0)};
    require(p == expect, "the secant EGFs are the [0,2|1;1,-2|0] and [0,2|2;1,-2|0] triangles");
    // 1 / (CH - z SH)^power with CH = cosh(z sqrt(1-t)) and
    // SH = sinh(z sqrt(1-t)) / (z sqrt(1-t)), both even in the square root
    RatFunc omt = one_rf() - tvar();
    SeriesF w = (SeriesF::z(N) * SeriesF::z(N)).scaled_ring(omt);
    SeriesF CH(N), SH(N);
    SeriesF term = SeriesF::one(N);
    for (long k = 0; 2 * k < N; ++k) {
        CH = CH + term.scaled(factorial(2 * k).reciprocal());
        SH = SH + term.scaled(factorial(2 * k + 1).reciprocal());
        term = term * w;
    }
    SeriesF denom = CH - SeriesF::z(N) * SH;
    return denom.inverse().pow_int(power);
}

} // namespace

const char* egf_case_name(EgfCase c) {
    switch (c) {
    case EgfCase::a1: return "a1";
    case EgfCase::a1_limit: return "a1-limit";
    case EgfCase::a2: return "a2";
    case EgfCase::a2_limit: return "a2-limit";
    case EgfCase::a3: return "a3";
    case EgfCase::a3_limit: return "a3-limit";
    case EgfCase::s_elem: return "s-elem";
    case EgfCase::e_speck: return "e-general";
    case EgfCase::e_speck2: return "e-exponential";
    case EgfCase::e_reducedspeck: return "e-single-progression";
    case EgfCase::b_s: return "b-s";
    case EgfCase::b_rs: return "b-rs";
    case EgfCase::b_e: return "b-e";
    case EgfCase::b_s_ra: return "b-s-ra";
    case EgfCase::b_s_rb: return "b-s-rb";
    case EgfCase::b_s_rc: return "b-s-rc";
    case EgfCase::b_rs_ra: return "b-rs-ra";
    case EgfCase::b_rs_rb: return "b-rs-rb";
    case EgfCase::b_rs_rc: return "b-rs-rc";
    case EgfCase::b_e_ra: return "b-e-ra";
    case EgfCase::b_e_rb: return "b-e-rb";
    case EgfCase::b_e_rc: return "b-e-rc";
    case EgfCase::c_s: return "c-s";
    case EgfCase::c_rs: return "c-rs";
    case EgfCase::c_e: return "c-e";
    case EgfCase::c_sec1: return "c-sec";
    case EgfCase::c_sec2: return "c-sec-squared";
    }
    return "?";
}

SeriesF closed_egf(const ClosedEgfSpec& spec) {
    const GkpParams& p = spec.params;
    long N = spec.order;
    switch (spec.caseId) {
    case EgfCase::a1: return egf_a1(p, N);
    case EgfCase::a1_limit: return egf_a1_limit(p, N);
    case EgfCase::a2: return egf_a2(p, N);
    case EgfCase::a2_limit: return egf_a2_limit(p, N);
    case EgfCase::a3: return egf_a3(p, N);
    case EgfCase::a3_limit: return egf_a3_limit(p, N);
    case EgfCase::s_elem: return egf_s_elem(p, N);
    case EgfCase::e_speck: return egf_e_speck(p, N);
    case EgfCase::e_speck2: return egf_e_speck2(p, N);
    case EgfCase::e_reducedspeck: return egf_e_reducedspeck(p, N);
    case EgfCase::b_s: return egf_b_general(p, FamilyKind::narayana_s, N);
    case EgfCase::b_rs: return egf_b_general(p, FamilyKind::narayana_rs, N);
    case EgfCase::b_e: return egf_b_general(p, FamilyKind::narayana_e, N);
    case EgfCase::b_s_ra: return egf_b_restricted(p, FamilyKind::narayana_s, 'a', N);
    case EgfCase::b_s_rb: return egf_b_restricted(p, FamilyKind::narayana_s, 'b', N);
    case EgfCase::b_s_rc: return egf_b_restricted(p, FamilyKind::narayana_s, 'c', N);
    case EgfCase::b_rs_ra: return egf_b_restricted(p, FamilyKind::narayana_rs, 'a', N);
    case EgfCase::b_rs_rb: return egf_b_restricted(p, FamilyKind::narayana_rs, 'b', N);
    case EgfCase::b_rs_rc: return egf_b_restricted(p, FamilyKind::narayana_rs, 'c', N);
    case EgfCase::b_e_ra: return egf_b_restricted(p, FamilyKind::narayana_e, 'a', N);
    case EgfCase::b_e_rb: return egf_b_restricted(p, FamilyKind::narayana_e, 'b', N);
    case EgfCase::b_e_rc: return egf_b_restricted(p, FamilyKind::narayana_e, 'c', N);
    case EgfCase::c_s: return egf_c(p, FamilyKind::sectan_s, N);
    case EgfCase::c_rs: return egf_c(p, FamilyKind::sectan_rs, N);
    case EgfCase::c_e: return egf_c(p, FamilyKind::sectan_e, N);
    case EgfCase::c_sec1: return egf_c_sec(p, 1, N);
    case EgfCase::c_sec2: return egf_c_sec(p, 2, N);
    }
    throw DomainError("unknown EGF case");
}

CheckReport closed_egf_matches_recurrence(const ClosedEgfSpec& spec) {
    SeriesF closed = closed_egf(spec);
    SeriesP reduced = reduce_to_poly_series(closed); // throws loudly on residue
    SeriesP direct = egf_truncated(Triangle::from_recurrence(spec.params, spec.order - 1));
    for (long n = 0; n < spec.order; ++n)
        if (reduced.coeff(n) != direct.coeff(n))
            return CheckReport::fail(std::string("closed EGF ") + egf_case_name(spec.caseId) +
                                     " differs from the recurrence at z-order " +
                                     std::to_string(n) + " for " + spec.params.str());
    return CheckReport::pass();
}

CheckReport vertical_egf_check(const StirlingParams& p, long k, long N) {
    if (p.b.is_zero())
        return CheckReport::skip("the closed column EGF needs b != 0");
    RiordanSpec spec = stirling_riordan_spec(p, N);
    SeriesQ closed = spec.d.truncated(N);
    for (long i = 0; i < k; ++i) closed = closed * spec.h.truncated(N);
    Triangle tri = stirling_triangle(p, N - 1);
    for (long n = 0; n < N; ++n) {
        Rat expected = n >= k ? tri.entry(n, k) * factorial(k) / factorial(n) : Rat(0);
        if (closed.coeff(n) != expected)
            return CheckReport::fail("column EGF of k=" + std::to_string(k) +
                                     " differs at z-order " + std::to_string(n));
    }
    return CheckReport::pass();
}

// ---------------------------------------------------------------------------
// BiSeries
// ---------------------------------------------------------------------------

BiSeries::BiSeries(long orderT, long orderZ) : orderT_(orderT), orderZ_(orderZ) {
    if (orderT < 0 || orderZ < 0) throw DomainError("bi-series orders must be non-negative");
    c_.assign(static_cast<std::size_t>(orderT),
              std::vector<Rat>(static_cast<std::size_t>(orderZ), Rat(0)));
}

const Rat& BiSeries::coeff(long i, long j) const {
    static const Rat zero(0);
    if (i < 0 || i >= orderT_ || j < 0 || j >= orderZ_) return zero;
    return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

void BiSeries::set_coeff(long i, long j, const Rat& v) {
    if (i < 0 || i >= orderT_ || j < 0 || j >= orderZ_)
        throw DomainError("bi-series coefficient out of range");
    c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
}

BiSeries BiSeries::constant(long orderT, long orderZ, const Rat& c) {
    BiSeries s(orderT, orderZ);
    if (orderT > 0 && orderZ > 0) s.set_coeff(0, 0, c);
    return s;
}

BiSeries BiSeries::var_t(long orderT, long orderZ) {
    BiSeries s(orderT, orderZ);
    if (orderT > 1 && orderZ > 0) s.set_coeff(1, 0, Rat(1));
    return s;
}

BiSeries BiSeries::var_z(long orderT, long orderZ) {
    BiSeries s(orderT, orderZ);
    if (orderT > 0 && orderZ > 1) s.set_coeff(0, 1, Rat(1));
    return s;
}

BiSeries BiSeries::operator-() const {
    BiSeries r = *this;
    for (auto& row : r.c_)
        for (auto& v : row) v = -v;
    return r;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    long T = std::min(a.orderT_, b.orderT_), Z = std::min(a.orderZ_, b.orderZ_);
    BiSeries r(T, Z);
    for (long i = 0; i < T; ++i)
        for (long j = 0; j < Z; ++j) r.set_coeff(i, j, a.coeff(i, j) + b.coeff(i, j));
    return r;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) { return a + (-b); }

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    long T = std::min(a.orderT_, b.orderT_), Z = std::min(a.orderZ_, b.orderZ_);
    BiSeries r(T, Z);
    for (long i1 = 0; i1 < T; ++i1)
        for (long j1 = 0; j1 < Z; ++j1) {
            const Rat& x = a.coeff(i1, j1);
            if (x.is_zero()) continue;
            for (long i2 = 0; i1 + i2 < T; ++i2)
                for (long j2 = 0; j1 + j2 < Z; ++j2) {
                    const Rat& y = b.coeff(i2, j2);
                    if (y.is_zero()) continue;
                    r.set_coeff(i1 + i2, j1 + j2, r.coeff(i1 + i2, j1 + j2) + x * y);
                }
        }
    return r;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
    long T = std::min(a.order_t(), b.order_t()), Z = std::min(a.order_z(), b.order_z());
    for (long i = 0; i < T; ++i)
        for (long j = 0; j < Z; ++j)
            if (a.coeff(i, j) != b.coeff(i, j)) return false;
    return true;
}

BiSeries BiSeries::scaled(const Rat& s) const {
    BiSeries r = *this;
    for (auto& row : r.c_)
        for (auto& v : row) v *= s;
    return r;
}

bool BiSeries::is_zero() const {
    for (const auto& row : c_)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

BiSeries BiSeries::pow(const Rat& q) const {
    if (orderT_ == 0 || orderZ_ == 0) return *this;
    if (q.is_integer() && q.sign() >= 0) {
        long e = q.to_long();
        BiSeries acc = constant(orderT_, orderZ_, Rat(1));
        BiSeries base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc = acc * base;
            base = base * base;
        }
        return acc;
    }
    if (!coeff(0, 0).is_one())
        throw DomainError("bi-series pow with non-integer or negative exponent needs "
                          "constant coefficient 1, got " + coeff(0, 0).str());
    BiSeries u = *this - constant(orderT_, orderZ_, Rat(1));
    // u has no constant coefficient, so u^m vanishes once m exceeds the sum
    // of the truncation degrees and the binomial series terminates
    long nil = (orderT_ - 1) + (orderZ_ - 1);
    BiSeries acc = constant(orderT_, orderZ_, Rat(1));
    BiSeries term = acc;
    for (long j = 1; j <= nil; ++j) {
        term = term * u;
        if (term.is_zero()) break;
        acc = acc + term.scaled(binomial(q, j));
    }
    return acc;
}

BiSeries BiSeries::inverse() const {
    Rat c00 = coeff(0, 0);
    if (c00.is_zero()) throw DomainError("bi-series inverse: constant coefficient is zero");
    return scaled(c00.reciprocal()).pow(Rat(-1)).scaled(c00.reciprocal());
}

// ---------------------------------------------------------------------------
// Implicit construction of the EGF by characteristics
// ---------------------------------------------------------------------------

namespace {

/// Evaluates sum_m f_m x^m by Horner; x must carry no constant coefficient.
BiSeries eval_series_at(const std::vector<Rat>& f, const BiSeries& x) {
    BiSeries acc = BiSeries::constant(x.order_t(), x.order_z(), Rat(0));
    for (std::size_t m = f.size(); m-- > 0;) {
        acc = acc * x;
        acc.set_coeff(0, 0, acc.coeff(0, 0) + f[m]);
    }
    return acc;
}

/// Solves for u = s/t with u(t, 0) = 1 by Newton iteration in powers of z.
BiSeries implicit_u_solver(const Tableau& tab, long orderT, long orderZ) {
    const Rat &r0 = tab.r0, &r1 = tab.r1;
    if (r0.is_nonpositive_integer())
        throw DomainError("the implicit construction needs r0 not a non-positive integer; "
                          "permute the tableau pairs first (r0 = " + r0.str() + ")");
    // F(x) = 2F1(r0 + r1, 1; 1 + r0 | x), truncated coefficients
    std::vector<Rat> F(static_cast<std::size_t>(orderT));
    std::vector<Rat> Fp(static_cast<std::size_t>(orderT), Rat(0)); // F'
    for (long m = 0; m < orderT; ++m)
        F[static_cast<std::size_t>(m)] = gauss_2f1_coeff(r0 + r1, Rat(1), Rat(1) + r0, m);
    for (long m = 0; m + 1 < orderT; ++m)
        Fp[static_cast<std::size_t>(m)] =
            Rat(m + 1) * gauss_2f1_coeff(r0 + r1, Rat(1), Rat(1) + r0, m + 1);

    BiSeries one = BiSeries::constant(orderT, orderZ, Rat(1));
    BiSeries t = BiSeries::var_t(orderT, orderZ);
    BiSeries z = BiSeries::var_z(orderT, orderZ);
    BiSeries rhs = (one - t).pow(r1) * (z.scaled(r0) + eval_series_at(F, t));

    auto phi_of = [&](const BiSeries& u) {
        BiSeries s = t * u;
        return u.pow(r0) * (one - s).pow(r1) * eval_series_at(F, s) - rhs;
    };

    BiSeries u = one;
    long steps = 1;
    for (long reached = 1; reached < orderZ; reached *= 2) ++steps;
    for (long it = 0; it <= steps; ++it) {
        BiSeries phi = phi_of(u);
        if (phi.is_zero()) break;
        BiSeries s = t * u;
        BiSeries one_ms = one - s;
        BiSeries f_at = eval_series_at(F, s);
        BiSeries dphi = u.pow(r0 - Rat(1)) * one_ms.pow(r1) * f_at.scaled(r0) -
                        (t * u.pow(r0) * one_ms.pow(r1 - Rat(1)) * f_at).scaled(r1) +
                        t * u.pow(r0) * one_ms.pow(r1) * eval_series_at(Fp, s);
        u = u - phi * dphi.inverse();
    }
    if (!phi_of(u).is_zero())
        throw InternalCheckError("formal Newton iteration failed to close the implicit "
                                 "equation within the truncation orders");
    return u;
}

} // namespace

BiSeries implicit_s_solver(const Tableau& tab, long orderT, long orderZ) {
    return BiSeries::var_t(orderT, orderZ) * implicit_u_solver(tab, orderT, orderZ);
}

BiSeries implicit_egf(const Tableau& tab, long orderT, long orderZ) {
    BiSeries u = implicit_u_solver(tab, orderT, orderZ);
    BiSeries one = BiSeries::constant(orderT, orderZ, Rat(1));
    BiSeries t = BiSeries::var_t(orderT, orderZ);
    BiSeries ratio = (one - t * u) * (one - t).inverse(); // (1 - s) / (1 - t)
    return u.pow(tab.g0) * ratio.pow(tab.g1);
}

BiSeries egf_bi_truncated(const Triangle& tri, long orderT, long orderZ) {
    BiSeries g(orderT, orderZ);
    for (long n = 0; n < orderZ && n <= tri.max_n(); ++n) {
        Poly row = tri.row_polynomial(n).scaled(factorial(n).reciprocal());
        for (long i = 0; i <= row.degree() && i < orderT; ++i) g.set_coeff(i, n, row.coeff(i));
    }
    return g;
}

CheckReport implicit_egf_matches_recurrence(const Tableau& tab, long orderT, long orderZ) {
    BiSeries g = implicit_egf(tab, orderT, orderZ);
    Triangle tri = Triangle::from_recurrence(from_tableau(tab, Rat(1), Rat(-1)), orderZ - 1);
    BiSeries direct = egf_bi_truncated(tri, orderT, orderZ);
    for (long i = 0; i < orderT; ++i)
        for (long j = 0; j < orderZ; ++j)
            if (g.coeff(i, j) != direct.coeff(i, j))
                return CheckReport::fail("implicit EGF differs from the recurrence at t^" +
                                         std::to_string(i) + " z^" + std::to_string(j) +
                                         " for tableau " + tab.str());
    return CheckReport::pass();
}

CheckReport narayana_egf_contiguity(const Rat& c0, const Rat& cInf, long n) {
    if (n < 1) throw DomainError("the contiguity relation needs n >= 1");
    auto rows = [&](const Rat& a, const Rat& b) {
        return family_triangle({FamilyKind::narayana_s, Rat(2), a, b}, n);
    };
    Triangle base = rows(c0, cInf);
    Triangle up = rows(c0 + Rat(1), cInf);
    Triangle down = rows(c0 - Rat(1), cInf + Rat(2));
    Poly two_t_m1{Rat(-1), Rat(2)};
    Poly t = Poly::t();
    for (long m = 1; m <= n; ++m) {
        Poly lhs = two_t_m1 * base.row_polynomial(m) +
                   base.row_polynomial(m - 1).scaled(Rat(m));
        Poly rhs = t.scaled(Rat(2)) * up.row_polynomial(m) - down.row_polynomial(m);
        if (lhs != rhs)
            return CheckReport::fail("Narayana EGF contiguity fails at row " +
                                     std::to_string(m));
    }
    return CheckReport::pass();
}

} // namespace gkp
