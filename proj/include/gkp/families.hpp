#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gkp/check.hpp"
#include "gkp/hypergeometric.hpp"
#include "gkp/triangle.hpp"

namespace gkp {

// ---------------------------------------------------------------------------
// Parametric families
// ---------------------------------------------------------------------------

/// Hsu-Shiue generalized Stirling numbers S_{n,k}(a, b; r), the triangle
/// [-a, b | r ; 0, 0 | 1].
struct StirlingParams {
    Rat a, b, r;
};

/// Generalized Eulerian numbers E_{n,k}(a, b; c0, cInf), the triangle
/// [-a, b | c0 ; a+b, -b | cInf].
struct EulerianParams {
    Rat a, b, c0, cInf;
};

GkpParams stirling_gkp(const StirlingParams& p);
GkpParams eulerian_gkp(const EulerianParams& p);

Triangle stirling_triangle(const StirlingParams& p, long N);
Triangle eulerian_triangle(const EulerianParams& p, long N);

/// Rank-1 formula (single summation)
///   S_{n,k} = (1 / b^k k!) sum_j (-1)^(k-j) C(k,j) (b j + r)^{n falling, a};
/// requires b != 0 (throws NotApplicableError directing to the recurrence).
Rat stirling_rank1(const StirlingParams& p, long n, long k);

/// Rank-1 formula
///   E_{n,k} = (1 / b^k k!) sum_j (-1)^(k-j) C(k,j)
///             (b n + c0 + cInf)^{(k-j) falling, b}
///             (c0 + cInf)^{j rising, b} (b j + c0)^{n falling, a};
/// requires b != 0 (throws NotApplicableError directing to the recurrence).
Rat eulerian_rank1(const EulerianParams& p, long n, long k);

/// Named parametric triangles: three generalized Narayana kinds and three
/// generalized secant-tangent kinds, each in a Stirling (S), reversed
/// Stirling (rS), and Eulerian (E) subcase.
enum class FamilyKind {
    narayana_s,   // [ b/2, b | c0 ; -b,   -b | cInf]
    narayana_rs,  // [-2b,  b | c0 ; 3b/2, -b | cInf]
    narayana_e,   // [ b/2, b | c0 ; 3b/2, -b | cInf]
    sectan_s,     // [-b/2, b | c0 ;  b,   -b | cInf]
    sectan_rs,    // [ 0,   b | c0 ;  b/2, -b | cInf]
    sectan_e,     // [-b/2, b | c0 ;  b/2, -b | cInf]
};

struct NamedFamily {
    FamilyKind kind;
    Rat b, c0, cInf;
};

GkpParams family_gkp(const NamedFamily& f);
Triangle family_triangle(const NamedFamily& f, long N);
const char* family_name(FamilyKind kind);
FamilyKind family_by_name(const std::string& name);

// ---------------------------------------------------------------------------
// Connection-coefficient identities (polynomial identities in x)
// ---------------------------------------------------------------------------

/// (x)^{n falling, a} = sum_k S_{n,k}(a,b;r) (x - r)^{k falling, b}.
CheckReport connection_check_stirling(const StirlingParams& p, long n);

/// Generalized Worpitzky identity
///   (c0+cInf)^{n rising, b} (x)^{n falling, a}
///     = sum_k E_{n,k} (x - c0)^{k falling, b} (x + cInf)^{(n-k) rising, b};
/// skipped when the left factor (c0+cInf)^{n rising, b} vanishes.
CheckReport connection_check_worpitzky_general(const EulerianParams& p, long n);

/// Single-progression form (cInf = b - c0):
///   n! b^n (x)^{n falling, a}
///     = sum_k E_{n,k}(a,b;c0,b-c0) [x - c0 + b(n-k)]^{n falling, b}.
CheckReport connection_check_worpitzky_single(const Rat& a, const Rat& b, const Rat& c0, long n);

/// Symmetric factorial-basis identity
///   (b x + cInf)^{n falling}
///     = sum_k [E_{n,k}(-1,b;b-cInf,cInf) / n!] (x + k)^{n falling}.
CheckReport connection_check_symmetric(const Rat& b, const Rat& cInf, long n);

/// The single-progression identity written with rising factorials equals the
/// falling-factorial form termwise after re-indexing; checked symbolically.
CheckReport worpitzky_reindex_check(const Rat& a, const Rat& b, const Rat& c0, long n);

// ---------------------------------------------------------------------------
// Binomial-transform pairs between the S and E families
// ---------------------------------------------------------------------------

/// Upper pair: E_{n,k} = sum_{j>=k} (-1)^(j-k) C(j,k)
///                       (c0+cInf)^{(n-j) rising, b} S_{n,n-j}(-a,b;cInf)
/// and its inverse; both directions checked for all 0 <= k <= n.
CheckReport transform_pair_ubt(const EulerianParams& p, long n);

/// Lower pair: b^k k! E_{n,k} as an alternating sum of bifactorial products,
/// and its inverse; both directions checked.
CheckReport transform_pair_rephrased(const EulerianParams& p, long n);

/// Lower pair for the Stirling family: b^k k! S_{n,k} and its inverse.
CheckReport transform_pair_lbt(const StirlingParams& p, long n);

/// Closure of the Stirling family under row-wise upper binomial transforms:
///   delta^{k falling, b} S_{n,k}(a,-b;r+delta)
///     = sum_{j>=k} C(j,k) delta^{j falling, b} S_{n,j}(a,b;r).
CheckReport ubt_closure_check(const StirlingParams& p, const Rat& delta, long n);

// ---------------------------------------------------------------------------
// Contiguous-parameter relations
// ---------------------------------------------------------------------------

/// Five relations on S_{n,k} moving r by a or b, flipping the signs of a or
/// b, and left-trimming; `relation` is 1..5, k = -1 admitted by 2 and 5.
CheckReport contiguity_check_s(int relation, const StirlingParams& p, long n, long k);

/// Five relations on E_{n,k} moving (c0, cInf) by a or b and the three
/// trimming relations; `relation` is 1..5, k = -1 admitted by 2, 3 and 5.
CheckReport contiguity_check_e(int relation, const EulerianParams& p, long n, long k);

// ---------------------------------------------------------------------------
// Exponential Riordan-array algebra of the Stirling matrices
// ---------------------------------------------------------------------------

/// An exponential Riordan array [d, h]: d of order 0 with d(0) != 0, h of
/// order 1 with h'(0) != 0; entry (n,k) = (n!/k!) [z^n] d h^k.
struct RiordanSpec {
    SeriesQ d, h;
    RiordanSpec(SeriesQ d_, SeriesQ h_);
};

/// Lower-triangular matrix of the array, rows 0..N.
std::vector<std::vector<Rat>> riordan_matrix(const RiordanSpec& spec, long N);

/// The [d, h] pair generating S_{n,k}(a,b;r):
///   d = (1+az)^{r/a},  h = [(1+az)^{b/a} - 1]/b   (exact a = 0 branch:
///   d = e^{rz}, h = (e^{bz}-1)/b; b = 0 branch: h = z, via limit forms).
RiordanSpec stirling_riordan_spec(const StirlingParams& p, long N);

/// S(a,b;r1) . S(b,c;r2) = S(a,c;r1+r2), entrywise to depth N.
CheckReport riordan_product_check(const Rat& a, const Rat& b, const Rat& c,
                                  const Rat& r1, const Rat& r2, long N);
/// S(a,b;r) . S(b,a;-r) = I to depth N.
CheckReport riordan_inverse_check(const Rat& a, const Rat& b, const Rat& r, long N);
/// Symmetric convolution on row indices for fixed k = k1 + k2.
CheckReport riordan_convolution_check(const StirlingParams& r1_params, const Rat& r2,
                                      long n, long k1, long k2);
/// Asymmetric convolution with interchanged (a, b) in the summand; indices
/// n1 = n + k2 and k1 = k + n2.
CheckReport riordan_asym_convolution_check(const StirlingParams& r1_params, const Rat& r2,
                                           long n, long k, long k2);

// ---------------------------------------------------------------------------
// Closed-form registry
// ---------------------------------------------------------------------------

/// Arguments for a registry formula: named rational parameters plus the
/// position (n, k) and an optional variant selector.
struct FormulaArgs {
    std::map<std::string, Rat> rat;
    long n = 0;
    long k = 0;
    std::string variant;

    Rat at(const std::string& name) const;
};

/// One registered closed form.  `eval` computes the formula value;
/// `reference` computes the same entry from the defining recurrence, so that
/// no closed form ships unverified.
struct RegistryEntry {
    std::string id;
    std::string description;
    std::vector<std::string> rat_args;
    std::vector<std::string> variants; // empty when the entry has none
    std::function<Rat(const FormulaArgs&)> eval;
    std::function<Rat(const FormulaArgs&)> reference;
};

const std::vector<RegistryEntry>& formula_registry();
const RegistryEntry& registry_entry(const std::string& id);
Rat closed_form_eval(const std::string& id, const FormulaArgs& args);

/// Second-kind r-Bessel numbers S_{n,k}(1,2;r), evaluated by the compensated
/// product form (reciprocal-gamma regularization of the terminating series),
/// which stays finite where the raw prefactor/series display would be 0/0.
Rat stirling_bessel2(const Rat& r, long n, long k);

/// First-kind (unsigned) r-Bessel numbers S_{n,k}(-2,-1;r) from the
/// terminating hypergeometric form; the (0,0) entry is 1 by convention.
Rat stirling_bessel1(const Rat& r, long n, long k);

/// One-parameter generalized Narayana triangles with hypergeometric-term
/// entries: three parametric restrictions of each of the three subcases,
/// in a direct (index k) and a reversed (index n-k) representation.
struct NarayanaT2Entry {
    std::string label;      // e.g. "bi-a", "biii-b"
    FamilyKind kind;        // narayana_s / narayana_rs / narayana_e
    char restriction;       // 'a', 'b' or 'c'
    bool has_direct;
    bool has_reversed;
};
const std::vector<NarayanaT2Entry>& narayana_t2_entries();
/// The (c0, cInf) pair of the restricted family at parameter c, with b = 2.
NamedFamily narayana_t2_family(const NarayanaT2Entry& entry, const Rat& c);
/// Hypergeometric-term value; form is "direct" or "reversed".
Rat narayana_t2_eval(const NarayanaT2Entry& entry, const std::string& form, const Rat& c,
                     long n, long k);

/// OEIS-normalized one-parameter Narayana triangles: sign-stripped rows
/// divided by a rising factorial, each with a closed row-polynomial form.
struct OeisRow {
    std::string label; // unique key, e.g. "bi-a-1"
    std::string anum;  // OEIS id carried for human cross-reference
    FamilyKind kind;
    char restriction;  // 'a' or 'b'
    long c;
};
const std::vector<OeisRow>& oeis_rows();
Rat oeis_normalized_entry(const OeisRow& row, long n, long k);
/// Row polynomial of the normalized triangle from its hypergeometric form.
Poly oeis_row_polynomial_closed(const OeisRow& row, long n);
/// Entries and row polynomials against the recurrence, through n_max.
CheckReport oeis_row_check(const OeisRow& row, long n_max);

// ---------------------------------------------------------------------------
// Connection matrices between the factorial bases (bx+k)^{n falling} and
// (x+j)^{n falling}
// ---------------------------------------------------------------------------

struct ConnectionMatrix {
    long n;
    Rat b;
    std::vector<std::vector<Rat>> entries; // (n+1) x (n+1)
};

/// A^{(n,b)}(k, j) = E_{n,j}(-1, b; b-k, k) / n!.  The construction verifies
/// the defining polynomial identity (b x + k)^{n falling} =
/// sum_j A(k,j) (x+j)^{n falling} for every k, and that A^{(n,1)} = I.
ConnectionMatrix connection_matrix(long n, const Rat& b);

/// Characteristic polynomial check det(x I - A^{(n,b)}) = prod_j (x - b^j),
/// by exact cofactor expansion (empirical eigenvalue claim, so this is
/// evidence-level rather than a theorem test).
CheckReport connection_matrix_eigencheck(long n, const Rat& b);

/// The finite-difference extension of the defining identity, for difference
/// orders r = 0..r_max.
CheckReport connection_matrix_diff_check(long n, const Rat& b, long r_max);

// ---------------------------------------------------------------------------
// Jacobi-polynomial identities
// ---------------------------------------------------------------------------

/// Degree-n Jacobi polynomial from the explicit double-binomial sum
///   P_n^{(A,B)}(t) = sum_k C(n+A, n-k) C(n+B, k)
///                    ((t-1)/2)^k ((t+1)/2)^(n-k).
Poly jacobi_poly(long n, const Rat& A, const Rat& B);

/// Validates jacobi_poly against the standard three-term recurrence.
CheckReport jacobi_recurrence_check(long n_max, const Rat& A, const Rat& B);

/// Row polynomials of E(-2,1; c0+1, -1) equal n! P_n^{(c0+n, -c0-n)}(-t),
/// and rows of E(-2,1; c0, 0) equal c0 n! P_n^{(c0+n+1, -c0-n-1)}(-t) one
/// row up; both checked coefficientwise, plus the right-trim relation
/// between the two.
CheckReport jacobi_identity_check(const Rat& c0, long n);

// ---------------------------------------------------------------------------
// The Bessel-sum conjecture (unproved; failures are findings, not errors)
// ---------------------------------------------------------------------------

struct ConjectureReport {
    bool holds = true;
    std::string detail;
};

/// Tests E_{n,k}(-1,2; c+2p+zeta, 2p+zeta) against the Bessel / r-Bessel
/// double-product sum, both sides exactly.
ConjectureReport conjecture_check(long p, int zeta, const Rat& c, long n, long k);

// ---------------------------------------------------------------------------
// Assorted family-level identities
// ---------------------------------------------------------------------------

/// E_{n,n-k}(a,b;c0,cInf) = E_{n,k}(-a,b;cInf,c0).
CheckReport eulerian_reflection_check(const EulerianParams& p, long n);

/// S homogeneity in lambda: S(la, lb; lr) = l^(n-k) S(a,b;r); E homogeneity:
/// E(l.) = l^n E(.).  Checked for all 0 <= k <= n.
CheckReport stirling_homogeneity_check(const StirlingParams& p, const Rat& lambda, long n);
CheckReport eulerian_homogeneity_check(const EulerianParams& p, const Rat& lambda, long n);
CheckReport family_homogeneity_check(const NamedFamily& f, const Rat& lambda, long n);

/// First-kind/second-kind Bessel cross identity
///   bhat^{(r)}(n+1, k+1) = B^{(r)}(2n-k, n)  for r in {0, 1}.
CheckReport bessel_cross_identity_check(int r, long n_max);

/// S_{n,k}(1,2;r) != 0 exactly when 0 <= n-k <= floor((n+r)/2), r natural.
CheckReport bessel_support_check(long r, long n_max);

} // namespace gkp
