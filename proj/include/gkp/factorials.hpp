#pragma once

#include <span>
#include <vector>

#include "gkp/rational.hpp"

namespace gkp {

enum class FactDir { rising, falling };
enum class DiffDir { forward, backward };

/// Generalized factorial with step:
///   falling: x (x - step) (x - 2 step) ... (x - (n-1) step)
///   rising : x (x + step) (x + 2 step) ... (x + (n-1) step)
/// n = 0 gives the empty product 1.
Rat gen_factorial(const Rat& x, long n, const Rat& step, FactDir dir);

/// x^{n falling} with unit step.
inline Rat falling(const Rat& x, long n) { return gen_factorial(x, n, 1, FactDir::falling); }
/// x^{n rising} with unit step.
inline Rat rising(const Rat& x, long n) { return gen_factorial(x, n, 1, FactDir::rising); }

/// n! as an exact rational; n must be >= 0.
Rat factorial(long n);

/// Generalized binomial coefficient C(top, k) = top^{k falling} / k!.
Rat binomial(const Rat& top, long k);
/// Integer binomial (zero outside 0 <= k <= n for n >= 0).
Rat binomial(long n, long k);

/// k-th order finite difference of a tabulated sequence:
///   forward : Delta^k at the left end  = sum_j (-1)^(k-j) C(k,j) f[j]
///   backward: nabla^k at the right end = sum_j (-1)^j C(k,j) f[last-j]
/// Requires at least order+1 values.
Rat finite_difference(std::span<const Rat> values, long order, DiffDir dir);

} // namespace gkp
