#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkp/gkp_params.hpp"
#include "gkp/poly.hpp"
#include "gkp/series.hpp"

namespace gkp {

/// Exact lower-triangular array T(n, k), 0 <= k <= n <= N, with apex 1, the
/// solution of a six-parameter triangular recurrence.  Entries outside the
/// triangle read as 0.  Immutable after construction.
class Triangle {
public:
    Triangle(GkpParams params, std::vector<std::vector<Rat>> rows);

    /// Generates rows 0..N from the recurrence (O(N^2) ring operations).
    static Triangle from_recurrence(const GkpParams& params, long N = 32);

    const GkpParams& params() const { return params_; }
    /// Largest generated row index.
    long max_n() const { return static_cast<long>(rows_.size()) - 1; }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }
    const std::vector<Rat>& row(long n) const;

    /// Entry with zero padding outside 0 <= k <= n.
    Rat entry(long n, long k) const;

    /// n-th row polynomial sum_k T(n,k) t^k.
    Poly row_polynomial(long n) const;

    friend bool operator==(const Triangle& a, const Triangle& b) {
        return a.rows_ == b.rows_;
    }

private:
    GkpParams params_;
    std::vector<std::vector<Rat>> rows_;
};

/// First (n, k) with 0 <= k <= n+1 <= N at which the rows fail the recurrence
/// for the given parameters, or nullopt when every entry satisfies it.
std::optional<std::pair<long, long>>
recurrence_violation(const std::vector<std::vector<Rat>>& rows, const GkpParams& params);

enum class TrimSide { left, right, mid };

/// Removes a structurally forced zero edge (left: gamma = 0, right:
/// gamma' = 0) or divides out a common row-polynomial factor
/// beta + beta' t (mid: (gamma, gamma') = A (beta, beta'), A != 0).
/// Returns a fresh triangle, one row shorter, carrying the shifted parameter
/// array; the result is re-verified against its own recurrence.
Triangle trim(const Triangle& tri, TrimSide side);

/// Truncated bivariate EGF: the z^n coefficient is the n-th row polynomial
/// divided by n! (exact in Rat), so that series multiplication matches
/// function multiplication.
SeriesP egf_truncated(const Triangle& tri);

/// Outcome of the EGF PDE check; `first_failure` is the lowest z-order at
/// which the PDE residual (equivalently the differential recurrence on row
/// polynomials) fails to vanish.
struct PdeReport {
    bool ok = true;
    long first_failure = -1;
    std::string detail;
};

/// Checks that the truncated EGF annihilates the first-order PDE
/// [A(t) z - 1] dG/dz + B(t) dG/dt + C(t) G through z-order N-2, and that the
/// row polynomials satisfy the matching differential recurrence
/// G_{n+1} = [A n + C] G_n + B G_n'.
PdeReport verify_pde(const Triangle& tri);
PdeReport verify_pde(const GkpParams& params, long N);

} // namespace gkp
