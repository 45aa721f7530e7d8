#pragma once

#include <array>
#include <string>
#include <vector>

#include "gkp/gkp_params.hpp"
#include "gkp/triangle.hpp"

namespace gkp {

/// The six degree-1 transformations of triangles normalized to beta' = -beta.
/// The group is generated by two involutions acting row-wise: the reflection
/// RT (row reversal) and the signed upper binomial transformation UBT.  Each
/// element corresponds to a Moebius map of t permuting {0, 1, infinity}.
enum class S3Op {
    identity,   // (0)(1)(inf)
    rt,         // (0 inf)(1)        row reversal
    ubt,        // (0 1)(inf)        signed upper binomial transform
    rt_ubt_rt,  // (1 inf)(0)        RT o UBT o RT (Stanton-Sprott variant)
    ubt_rt,     // (0 inf 1)         UBT o RT, order 3
    rt_ubt,     // (0 1 inf)         RT o UBT, order 3
};

constexpr std::array<S3Op, 6> kAllS3Ops = {S3Op::identity, S3Op::rt,     S3Op::ubt,
                                           S3Op::rt_ubt_rt, S3Op::ubt_rt, S3Op::rt_ubt};

struct S3Elem {
    S3Op op;
    /// perm[i] = image of label i under the lifting map R, labels 0,1,2
    /// standing for the points 0, 1, infinity.
    std::array<int, 3> perm;
    /// The lifting pair (R, S): the transformed EGF at (t*, z*) equals the
    /// original EGF at (R(t*), S(t*) z*).
    RatFunc lift_r, lift_s;
    std::string name;   // CLI / report identifier
    std::string cycles; // cycle notation over {0, 1, inf}
};

const S3Elem& s3_element(S3Op op);
/// Looks up an element by its CLI name (id, rt, ubt, rt-ubt-rt, ubt-rt, rt-ubt).
const S3Elem& s3_element_by_name(const std::string& name);

/// Group composition, read left to right on triangles: the result transforms
/// a triangle by applying `first` and then `second`.  The attached label
/// permutations and lifting maps compose contravariantly (substitution acts
/// on the t-line): perm = perm_first . perm_second as functions, and
/// (R, S) = (R1 o R2, (S1 o R2) S2) with (R1, S1) belonging to `first`.
const S3Elem& s3_compose(const S3Elem& first, const S3Elem& second);
const S3Elem& s3_inverse(const S3Elem& e);

/// Transformed parameter array for a triangle normalized to beta' = -beta,
/// beta != 0 (the normalization is asserted, not imposed; use scale_params
/// to reach it losslessly).  beta and beta' are preserved.
GkpParams s3_transform_params(const S3Elem& e, const GkpParams& p);

/// Row-wise action of the element on a triangle (same normalization).
/// The result equals, entrywise, the triangle regenerated from
/// s3_transform_params.  With negate_s = true the companion element of the
/// order-12 extension is applied instead: S is negated, every transformed
/// entry picks up (-1)^n, and the whole parameter array is negated.
Triangle s3_transform_rows(const S3Elem& e, const Triangle& tri, bool negate_s = false);

/// Permutes the tableau parameter-pairs by the element's label permutation:
/// the pair at label p of the result is the input pair at label perm(p).
Tableau tableau_permute(const S3Elem& e, const Tableau& tab);

/// The original Stanton-Sprott involution, acting row-wise on triangles with
/// beta' = beta != 0:
///   T*(n, k) = sum_{j=0..k} C(n-j, n-k) (-1)^j T(n, j),
/// with parameter map (alpha, beta, gamma; -beta + alpha - alpha', beta,
/// gamma - gamma').
Triangle stanton_sprott(const Triangle& tri);

/// Generalized lower binomial transform pair with step-b factorial weights:
///   forward: v_k = sum_{j<=k} (-1)^(k-j) C(k,j) A^{(k-j) falling, b} u_j
///   inverse: u_k = sum_{j<=k} C(k,j) A^{(k-j) rising, b} v_j
/// A = 1, b = 0 gives the classical lower binomial transform pair.
enum class TransformDir { forward, inverse };
std::vector<Rat> generalized_lbt(const std::vector<Rat>& u, const Rat& A, const Rat& b,
                                 TransformDir dir);

/// Classical (unsigned/signed) upper binomial transform pair on a finite
/// sequence u_0..u_n:
///   forward: v_k = sum_{j>=k} (-1)^(j-k) C(j,k) u_j
///   inverse: u_k = sum_{j>=k} C(j,k) v_j
std::vector<Rat> classical_ubt(const std::vector<Rat>& u, TransformDir dir);

/// Transformed EGF G(R(t*), S(t*) z*) as a truncated series over rational
/// functions of t*, built from a polynomial-coefficient EGF.
SeriesF lift_egf(const SeriesP& egf, const RatFunc& R, const RatFunc& S);

} // namespace gkp
