#pragma once

#include <vector>

#include "gkp/rational.hpp"
#include "gkp/series.hpp"

namespace gkp {

/// A hypergeometric term  prod_i (upper_i)^{k rising} / prod_j (lower_j)^{k rising},
/// the bracket notation used throughout for rank-0 formulas.
///
/// Evaluation at index k is legal only when no lower Pochhammer factor
/// vanishes before (strictly earlier than) every vanishing upper factor:
/// a series must terminate before it turns singular.  When an upper factor
/// vanishes at an index <= the first vanishing lower index, the term is 0.
struct HypTermSpec {
    std::vector<Rat> upper;
    std::vector<Rat> lower;
};

/// Value of the term at index k (k >= 0).  Throws SingularTermError when a
/// lower factor vanishes uncovered.
Rat hyp_term(const HypTermSpec& spec, long k);

/// First index i >= 0 with x + i = 0, or -1 if none (x not a non-positive
/// integer).
long first_vanishing_index(const Rat& x);

/// Truncated Maclaurin series of the Gauss hypergeometric function
/// 2F1(A, B; C | w) to order N (exclusive).  C must not be a non-positive
/// integer unless an upper parameter terminates the series first.
SeriesQ gauss_2f1_series(const Rat& A, const Rat& B, const Rat& C, long N);

/// Coefficient k of the 2F1(A, B; C | .) series (same admissibility rule).
Rat gauss_2f1_coeff(const Rat& A, const Rat& B, const Rat& C, long k);

/// Olver-regularized terminating value
///   sum_j  A^{j rising} B^{j rising} w^j / (j! * (C + j - 1)!),
/// where 1/(m)! is taken to be 0 for negative integers m.  Requires integer C
/// and a terminating upper parameter (A or B a non-positive integer); this is
/// the compensated product form used for closed forms whose plain 2F1 display
/// would hit a 0/0.
Rat gauss_2f1_regularized(const Rat& A, const Rat& B, const Rat& C, const Rat& w);

} // namespace gkp
