#pragma once

#include <cstdint>
#include <random>

#include "gkp/rational.hpp"

namespace gkp {

/// Deterministic sampler for small exact rationals, used by the seeded
/// verification suites and the property tests.  Identical seeds give
/// identical draws on every platform (mt19937_64 is fully specified).
class RatSampler {
public:
    explicit RatSampler(std::uint64_t seed) : eng_(seed) {}

    /// Integer in [lo, hi].
    long int_in(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    /// Rational with numerator in [-max_num, max_num], denominator in
    /// [1, max_den].
    Rat rat(long max_num = 5, long max_den = 3) {
        return Rat(int_in(-max_num, max_num), int_in(1, max_den));
    }

    Rat nonzero_rat(long max_num = 5, long max_den = 3) {
        for (;;) {
            Rat r = rat(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    bool coin() { return int_in(0, 1) == 1; }

private:
    std::mt19937_64 eng_;
};

} // namespace gkp
