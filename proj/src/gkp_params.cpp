#include "gkp/gkp_params.hpp"

#include <sstream>

#include "gkp/errors.hpp"

namespace gkp {

std::string GkpParams::str() const {
    std::ostringstream os;
    os << "[" << alpha.str() << "," << beta.str() << "|" << gamma.str() << "; "
       << alphaP.str() << "," << betaP.str() << "|" << gammaP.str() << "]";
    return os.str();
}

Tableau::Tableau(Rat r0_, Rat r1_, Rat rInf_, Rat g0_, Rat g1_, Rat gInf_)
    : r0(std::move(r0_)), r1(std::move(r1_)), rInf(std::move(rInf_)),
      g0(std::move(g0_)), g1(std::move(g1_)), gInf(std::move(gInf_)) {
    if (r0 + r1 + rInf != Rat(1))
        throw DomainError("tableau r-row must sum to 1, got " + (r0 + r1 + rInf).str());
    if (!(g0 + g1 + gInf).is_zero())
        throw DomainError("tableau g-row must sum to 0, got " + (g0 + g1 + gInf).str());
}

std::string Tableau::str() const {
    std::ostringstream os;
    os << "[r=(" << r0.str() << "," << r1.str() << "," << rInf.str() << "); g=("
       << g0.str() << "," << g1.str() << "," << gInf.str() << ")]";
    return os.str();
}

Tableau to_tableau(const GkpParams& p) {
    if (p.beta.is_zero() || p.betaP.is_zero())
        throw DomainError("tableau form requires beta*beta' != 0, got " + p.str());
    Rat ab = p.alpha / p.beta;
    Rat apbp = p.alphaP / p.betaP;
    Rat gb = p.gamma / p.beta;
    Rat gpbp = p.gammaP / p.betaP;
    return Tableau(-ab, ab - apbp, Rat(1) + apbp,
                   gb, -gb + gpbp, -gpbp);
}

GkpParams from_tableau(const Tableau& tab, const Rat& beta, const Rat& betaP) {
    if (beta.is_zero() || betaP.is_zero())
        throw DomainError("tableau conversion requires beta*beta' != 0");
    return GkpParams{-beta * tab.r0,        beta,  beta * tab.g0,
                     betaP * (tab.rInf - Rat(1)), betaP, -betaP * tab.gInf};
}

ScaledParams scale_params(const GkpParams& p, const Rat& A, const Rat& B) {
    GkpParams q{A * p.alpha, A * p.beta, A * p.gamma,
                B * p.alphaP, B * p.betaP, B * p.gammaP};
    return ScaledParams{q, A, B};
}

ShiftedParams shift_lower_params(const GkpParams& p, const Rat& s) {
    if (!p.alphaP.is_zero() || !p.betaP.is_zero())
        throw DomainError("lower-row shift requires alpha' = beta' = 0, got " + p.str());
    GkpParams q{p.alpha, p.beta, p.gamma, Rat(0), p.gammaP, s * p.gammaP};
    return ShiftedParams{q, s};
}

PdeCoefficients pde_coefficients(const GkpParams& p) {
    return PdeCoefficients{
        Poly{p.alpha, p.alphaP},
        Poly{Rat(0), p.beta, p.betaP},
        Poly{p.gamma, p.gammaP},
    };
}

} // namespace gkp
