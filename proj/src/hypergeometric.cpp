#include "gkp/hypergeometric.hpp"

#include <algorithm>

#include "gkp/errors.hpp"
#include "gkp/factorials.hpp"

namespace gkp {

long first_vanishing_index(const Rat& x) {
    if (!x.is_nonpositive_integer()) return -1;
    return (-x).to_long();
}

Rat hyp_term(const HypTermSpec& spec, long k) {
    if (k < 0) throw DomainError("hypergeometric term at negative index");
    long min_upper = -1;
    for (const Rat& a : spec.upper) {
        long i = first_vanishing_index(a);
        if (i >= 0 && (min_upper < 0 || i < min_upper)) min_upper = i;
    }
    long min_lower = -1;
    for (const Rat& c : spec.lower) {
        long i = first_vanishing_index(c);
        if (i >= 0 && (min_lower < 0 || i < min_lower)) min_lower = i;
    }
    if (min_lower >= 0 && min_lower < k) {
        // A denominator factor vanishes inside the product range; the term is
        // only meaningful when the numerator terminated at or before that
        // index, in which case the whole term is zero.
        if (min_upper >= 0 && min_upper <= min_lower) return Rat(0);
        throw SingularTermError("lower parameter reaches zero at index " +
                                std::to_string(min_lower) +
                                " with no earlier terminating upper parameter");
    }
    Rat num(1), den(1);
    for (const Rat& a : spec.upper) num *= rising(a, k);
    for (const Rat& c : spec.lower) den *= rising(c, k);
    return num / den;
}

Rat gauss_2f1_coeff(const Rat& A, const Rat& B, const Rat& C, long k) {
    return hyp_term(HypTermSpec{{A, B}, {Rat(1), C}}, k);
}

SeriesQ gauss_2f1_series(const Rat& A, const Rat& B, const Rat& C, long N) {
    long csing = first_vanishing_index(C);
    if (csing >= 0) {
        long term = -1;
        for (const Rat& u : {A, B}) {
            long i = first_vanishing_index(u);
            if (i >= 0 && (term < 0 || i < term)) term = i;
        }
        if (term < 0 || term > csing)
            throw DomainError("2F1 with non-positive integer lower parameter " + C.str() +
                              " and no upper parameter terminating the series first");
    }
    std::vector<Rat> c(static_cast<std::size_t>(N));
    for (long k = 0; k < N; ++k) c[static_cast<std::size_t>(k)] = gauss_2f1_coeff(A, B, C, k);
    return SeriesQ(N, std::move(c));
}

Rat gauss_2f1_regularized(const Rat& A, const Rat& B, const Rat& C, const Rat& w) {
    if (!C.is_integer())
        throw DomainError("regularized 2F1 requires an integer lower parameter, got " + C.str());
    long terminate = -1;
    for (const Rat& u : {A, B}) {
        long i = first_vanishing_index(u);
        if (i >= 0 && (terminate < 0 || i < terminate)) terminate = i;
    }
    if (terminate < 0)
        throw DomainError("regularized 2F1 requires a terminating upper parameter");
    long c = C.to_long();
    Rat acc(0);
    for (long j = 0; j <= terminate; ++j) {
        long m = c + j - 1; // reciprocal factorial (m)!; zero when m < 0
        if (m < 0) continue;
        acc += rising(A, j) * rising(B, j) * pow_int(w, j) / (factorial(j) * factorial(m));
    }
    return acc;
}

} // namespace gkp
