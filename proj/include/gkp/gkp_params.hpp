#pragma once

#include <array>
#include <string>

#include "gkp/factorials.hpp"
#include "gkp/poly.hpp"
#include "gkp/rational.hpp"

namespace gkp {

/// The six parameters of a triangular recurrence
///   T(n+1, k+1) = [alpha n + beta (k+1) + gamma] T(n, k+1)
///               + [alpha' n + beta' k + gamma'] T(n, k),
/// written as the array [alpha, beta | gamma ; alpha', beta' | gamma'].
struct GkpParams {
    Rat alpha, beta, gamma;
    Rat alphaP, betaP, gammaP;

    friend bool operator==(const GkpParams& a, const GkpParams& b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma &&
               a.alphaP == b.alphaP && a.betaP == b.betaP && a.gammaP == b.gammaP;
    }
    friend bool operator!=(const GkpParams& a, const GkpParams& b) { return !(a == b); }

    std::string str() const;
};

/// Equivalent six-parameter coordinates (r_0, r_1, r_inf ; g_0, g_1, g_inf)
/// attached to the points 0, 1, infinity of the projective t-line, with
/// r_0 + r_1 + r_inf = 1 and g_0 + g_1 + g_inf = 0 (checked at construction).
/// The order-6 transformation group acts on these by permuting the pairs.
struct Tableau {
    Rat r0, r1, rInf;
    Rat g0, g1, gInf;

    Tableau(Rat r0_, Rat r1_, Rat rInf_, Rat g0_, Rat g1_, Rat gInf_);

    Rat r(int label) const { return label == 0 ? r0 : label == 1 ? r1 : rInf; }
    Rat g(int label) const { return label == 0 ? g0 : label == 1 ? g1 : gInf; }

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.r0 == b.r0 && a.r1 == b.r1 && a.rInf == b.rInf &&
               a.g0 == b.g0 && a.g1 == b.g1 && a.gInf == b.gInf;
    }

    std::string str() const;
};

/// Parameter array -> tableau; requires beta * beta' != 0.
Tableau to_tableau(const GkpParams& p);

/// Tableau -> parameter array at a chosen (beta, beta') normalization;
/// requires beta * beta' != 0.  Inverse of to_tableau.
GkpParams from_tableau(const Tableau& tab, const Rat& beta, const Rat& betaP);

/// Scaling the upper parameter row by A and the lower by B multiplies the
/// triangle entry (n, k) by A^(n-k) B^k.
struct ScaledParams {
    GkpParams params;
    Rat A, B;
    Rat entry_factor(long n, long k) const { return pow_int(A, n - k) * pow_int(B, k); }
};
ScaledParams scale_params(const GkpParams& p, const Rat& A, const Rat& B);

/// For a lower row (0, 0, gamma'), replacing it by (0, gamma', s gamma')
/// multiplies entry (n, k) by the rising factorial s^{k rising}.
/// Requires alpha' = beta' = 0.
struct ShiftedParams {
    GkpParams params;
    Rat s;
    Rat entry_factor(long /*n*/, long k) const { return rising(s, k); }
};
ShiftedParams shift_lower_params(const GkpParams& p, const Rat& s);

/// Coefficients of the first-order PDE satisfied by the bivariate EGF:
///   [A(t) z - 1] dG/dz + B(t) dG/dt + C(t) G = 0,
/// with A = alpha + alpha' t, B = (beta + beta' t) t, C = gamma + gamma' t.
struct PdeCoefficients {
    Poly A, B, C;
};
PdeCoefficients pde_coefficients(const GkpParams& p);

} // namespace gkp
