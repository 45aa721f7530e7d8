#pragma once

#include <string>
#include <vector>

#include "gkp/check.hpp"
#include "gkp/families.hpp"
#include "gkp/series.hpp"
#include "gkp/triangle.hpp"

namespace gkp {

// ---------------------------------------------------------------------------
// Closed-form EGF builders
// ---------------------------------------------------------------------------

/// The closed-form EGF cases.  Case-A builders cover the generalized
/// Stirling (upper row degenerate), reflected Stirling, and generalized
/// Eulerian parameter constraints together with their exact degenerate
/// (exponential) limits; the S/E entries are the family-normalized EGFs; the
/// B entries are the three generalized Narayana subcases (with the nine
/// parametrically restricted specializations) and the C entries the three
/// secant-tangent subcases plus the two classical secant EGFs.
enum class EgfCase {
    a1,            // alpha' = 0, alpha != 0
    a1_limit,      // alpha' = 0, alpha  = 0
    a2,            // alpha = -beta, alpha' + beta' != 0
    a2_limit,      // alpha = -beta, alpha' = -beta'
    a3,            // alpha/beta = alpha'/beta' + 1, alpha != 0
    a3_limit,      // same ratio constraint, alpha = 0
    s_elem,        // EGF of k! S_{n,k}(a,b;r): triangle [-a,b|r; 0,1|1]
    e_speck,       // EGF of E_{n,k}(a,b;c0,cInf), a != 0
    e_speck2,      // a = 0 limit of the above
    e_reducedspeck,// single-progression cInf = b - c0
    b_s, b_rs, b_e,            // generalized Narayana, b = 2 normalization
    b_s_ra, b_s_rb, b_s_rc,    // restricted Narayana, Stirling subcase
    b_rs_ra, b_rs_rb, b_rs_rc, // restricted, reversed-Stirling subcase
    b_e_ra, b_e_rb, b_e_rc,    // restricted, Eulerian subcase
    c_s, c_rs, c_e,            // generalized secant-tangent, b = 2
    c_sec1,        // EGF of W^rS(2;1,0): iterated derivatives of sec
    c_sec2,        // EGF of W^rS(2;2,0): iterated derivatives of sec^2
};

const char* egf_case_name(EgfCase c);

/// A closed-form EGF request: the case tag, the full parameter array of the
/// triangle whose EGF is wanted, and the z-truncation order.  Each builder
/// derives its named parameters from the array and checks the structural
/// constraints of its case by exact equality (no epsilon logic anywhere).
struct ClosedEgfSpec {
    EgfCase caseId;
    GkpParams params;
    long order;
};

/// Truncated closed-form EGF over rational functions of t.  The z^n
/// coefficient, reduced, must be a polynomial equal to G_n(t)/n! of the
/// matching recurrence triangle; a residual denominator is a builder bug
/// and is surfaced as InternalCheckError by the comparison helpers.
SeriesF closed_egf(const ClosedEgfSpec& spec);

/// Compares a closed-form EGF against the recurrence EGF of spec.params,
/// requiring exact clearing of denominators.
CheckReport closed_egf_matches_recurrence(const ClosedEgfSpec& spec);

/// Column EGF of the Stirling family:
///   sum_n S_{n,k}(a,b;r) (k!/n!) z^n = (1+az)^{r/a} [((1+az)^{b/a}-1)/b]^k,
/// with exact degenerate branch at a = 0; checked against the recurrence.
CheckReport vertical_egf_check(const StirlingParams& p, long k, long N);

// ---------------------------------------------------------------------------
// Doubly truncated bivariate series and the implicit construction
// ---------------------------------------------------------------------------

/// Power series in t and z over Rat, truncated at t^orderT and z^orderZ
/// (both exclusive).  coeff(i, j) is the coefficient of t^i z^j.  Arithmetic
/// is exact below both truncation orders.
class BiSeries {
public:
    BiSeries() : orderT_(0), orderZ_(0) {}
    BiSeries(long orderT, long orderZ);

    long order_t() const { return orderT_; }
    long order_z() const { return orderZ_; }
    const Rat& coeff(long i, long j) const;
    void set_coeff(long i, long j, const Rat& v);

    static BiSeries constant(long orderT, long orderZ, const Rat& c);
    static BiSeries var_t(long orderT, long orderZ);
    static BiSeries var_z(long orderT, long orderZ);

    BiSeries operator-() const;
    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend bool operator==(const BiSeries& a, const BiSeries& b);

    BiSeries scaled(const Rat& s) const;
    bool is_zero() const;

    /// base^q, rational q; requires coefficient (0,0) exactly 1 (the base is
    /// then 1 + nilpotent and the binomial series terminates).
    BiSeries pow(const Rat& q) const;
    /// Multiplicative inverse; requires an invertible (0,0) coefficient.
    BiSeries inverse() const;
    friend BiSeries operator/(const BiSeries& a, const BiSeries& b) { return a * b.inverse(); }

private:
    long orderT_, orderZ_;
    std::vector<std::vector<Rat>> c_; // c_[i][j] multiplies t^i z^j
};

/// Solves the implicit characteristic-curve equation
///   (s/t)^{r0} ((1-s)/(1-t))^{r1}
///     = [r0 z + F(t)] / F(s),     F(x) = 2F1(r0 + r1, 1; 1 + r0 | x),
/// for s(t, z) with s(t, 0) = t, by formal Newton iteration on u = s/t in
/// powers of z.  Requires r0 not to be a non-positive integer (permute the
/// tableau pairs first when it is).  Returns s to the requested bi-order.
BiSeries implicit_s_solver(const Tableau& tab, long orderT, long orderZ);

/// The EGF G(t, z) = (s/t)^{g0} ((1-s)/(1-t))^{g1} built from the implicit
/// solution, as a doubly truncated series.
BiSeries implicit_egf(const Tableau& tab, long orderT, long orderZ);

/// Compares the implicit-construction EGF against the recurrence EGF of
/// from_tableau(tab, 1, -1), coefficientwise below both truncation orders.
CheckReport implicit_egf_matches_recurrence(const Tableau& tab, long orderT, long orderZ);

/// Recurrence EGF as a doubly truncated series (row polynomials / n!).
BiSeries egf_bi_truncated(const Triangle& tri, long orderT, long orderZ);

// ---------------------------------------------------------------------------
// Contiguity of the Narayana EGF in its (c0, cInf) parameters
// ---------------------------------------------------------------------------

/// Row-polynomial form of the three-term EGF relation for N^S(2; c0, cInf):
///   (2t-1) G_n(t; c0, cInf) + n G_{n-1}(t; c0, cInf)
///     = 2t G_n(t; c0+1, cInf) - G_n(t; c0-1, cInf+2),   n >= 1.
CheckReport narayana_egf_contiguity(const Rat& c0, const Rat& cInf, long n);

} // namespace gkp
