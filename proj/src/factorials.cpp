#include "gkp/factorials.hpp"

#include "gkp/errors.hpp"

namespace gkp {

Rat gen_factorial(const Rat& x, long n, const Rat& step, FactDir dir) {
    if (n < 0) throw DomainError("generalized factorial of negative length");
    Rat acc(1);
    Rat cur = x;
    for (long i = 0; i < n; ++i) {
        acc *= cur;
        if (dir == FactDir::falling)
            cur -= step;
        else
            cur += step;
    }
    return acc;
}

Rat factorial(long n) {
    if (n < 0) throw DomainError("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

Rat binomial(const Rat& top, long k) {
    if (k < 0) return Rat(0);
    return falling(top, k) / factorial(k);
}

Rat binomial(long n, long k) {
    if (k < 0 || (n >= 0 && k > n)) return Rat(0);
    return binomial(Rat(n), k);
}

Rat finite_difference(std::span<const Rat> values, long order, DiffDir dir) {
    if (order < 0) throw DomainError("finite difference of negative order");
    if (static_cast<long>(values.size()) < order + 1)
        throw DomainError("finite difference needs at least order+1 tabulated values");
    Rat acc(0);
    long last = static_cast<long>(values.size()) - 1;
    for (long j = 0; j <= order; ++j) {
        Rat c = binomial(order, j);
        if (dir == DiffDir::forward) {
            // Delta^k f(x0) = sum_j (-1)^(k-j) C(k,j) f(x0 + j)
            if ((order - j) % 2 != 0) c = -c;
            acc += c * values[j];
        } else {
            // nabla^k f(xN) = sum_j (-1)^j C(k,j) f(xN - j)
            if (j % 2 != 0) c = -c;
            acc += c * values[last - j];
        }
    }
    return acc;
}

} // namespace gkp
