#include <doctest.h>

#include <vector>

#include "gkp/factorials.hpp"
#include "gkp/hypergeometric.hpp"
#include "gkp/rng.hpp"

using namespace gkp;

TEST_CASE("generalized factorials") {
    CHECK(gen_factorial(Rat(5), 3, Rat(1), FactDir::falling) == Rat(60)); // 5*4*3
    CHECK(gen_factorial(Rat(7, 2), 0, Rat(3), FactDir::rising).is_one()); // empty product
    CHECK(gen_factorial(Rat(1), 4, Rat(2), FactDir::rising) == Rat(105)); // 1*3*5*7
    CHECK(falling(Rat(4), 4) == Rat(24));
    CHECK(rising(Rat(1), 5) == Rat(120));
}

TEST_CASE("falling at shifted start equals rising") {
    // x^{n falling, a} = (x - (n-1)a)^{n rising, a}
    RatSampler rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Rat x = rng.rat();
        Rat a = rng.rat();
        long n = rng.int_in(0, 7);
        CHECK(gen_factorial(x, n, a, FactDir::falling) ==
              gen_factorial(x - Rat(n - 1) * a, n, a, FactDir::rising));
    }
}

TEST_CASE("finite differences") {
    std::vector<Rat> squares = {Rat(0), Rat(1), Rat(4)}; // x^2 at 0,1,2
    CHECK(finite_difference(squares, 2, DiffDir::forward) == Rat(2));

    std::vector<Rat> cubes; // (x+1)^3 at 0..3
    for (long x = 0; x <= 3; ++x) cubes.push_back(pow_int(Rat(x + 1), 3));
    CHECK(finite_difference(cubes, 3, DiffDir::forward) == Rat(6)); // 3! * leading coeff

    std::vector<Rat> vals = {Rat(3), Rat(1), Rat(4)};
    CHECK(finite_difference(vals, 0, DiffDir::forward) == Rat(3));  // first value
    CHECK(finite_difference(vals, 0, DiffDir::backward) == Rat(4)); // last value

    CHECK_THROWS_AS(finite_difference(vals, 3, DiffDir::forward), DomainError);
}

TEST_CASE("forward and backward differences agree on reversed tables") {
    RatSampler rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        long len = rng.int_in(1, 6);
        std::vector<Rat> v, rev;
        for (long i = 0; i < len; ++i) v.push_back(rng.rat());
        rev.assign(v.rbegin(), v.rend());
        long ord = rng.int_in(0, len - 1);
        Rat fwd = finite_difference(v, ord, DiffDir::forward);
        Rat bwd = finite_difference(rev, ord, DiffDir::backward);
        CHECK(fwd == (ord % 2 == 0 ? bwd : -bwd));
    }
}

TEST_CASE("binomial coefficients with rational tops") {
    CHECK(binomial(Rat(1, 2), 2) == Rat(-1, 8));
    CHECK(binomial(5L, 2L) == Rat(10));
    CHECK(binomial(4L, 7L).is_zero());
    CHECK(binomial(Rat(-1), 3) == Rat(-1));
    CHECK(binomial(Rat(7, 3), 0).is_one());
}

TEST_CASE("hypergeometric terms") {
    CHECK(hyp_term({{Rat(-2), Rat(3)}, {Rat(1), Rat(1)}}, 1) == Rat(-6));
    CHECK(hyp_term({{Rat(5, 2)}, {Rat(-7, 3)}}, 0).is_one()); // empty products
    // terminating upper parameter: value 0 past the termination index
    long n = 4;
    CHECK(hyp_term({{Rat(-n), Rat(2)}, {Rat(1)}}, n + 1).is_zero());
    // uncovered lower singularity
    CHECK_THROWS_AS(hyp_term({{Rat(1, 2)}, {Rat(-2)}}, 4), SingularTermError);
    // covered singularity: upper terminates at the same index
    CHECK(hyp_term({{Rat(-2)}, {Rat(-2)}}, 4).is_zero());
}

TEST_CASE("hypergeometric term telescoping") {
    // term(k+1)/term(k) = prod (A_i + k) / prod (C_i + k) whenever defined
    RatSampler rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        HypTermSpec spec{{rng.rat() + Rat(1, 7), rng.rat() + Rat(2, 7)},
                         {rng.rat() + Rat(3, 7)}};
        long k = rng.int_in(0, 5);
        Rat tk = hyp_term(spec, k);
        Rat tk1 = hyp_term(spec, k + 1);
        Rat num = (spec.upper[0] + Rat(k)) * (spec.upper[1] + Rat(k));
        Rat den = spec.lower[0] + Rat(k);
        if (!den.is_zero() && !tk.is_zero()) CHECK(tk1 / tk == num / den);
    }
}

TEST_CASE("Gauss 2F1 series") {
    SeriesQ s = gauss_2f1_series(Rat(1), Rat(1), Rat(2), 4);
    CHECK(s.coeff(0) == Rat(1));
    CHECK(s.coeff(1) == Rat(1, 2));
    CHECK(s.coeff(2) == Rat(1, 3));
    CHECK(s.coeff(3) == Rat(1, 4)); // -log(1-w)/w

    CHECK(gauss_2f1_series(Rat(3), Rat(-5), Rat(7, 2), 1).coeff(0).is_one());

    // arcsin(sqrt(t)) / sqrt(t(1-t)) = sum_k (2k)!! / (2k+1)!! t^k; the 2F1
    // coefficients with parameters (1, 1; 3/2) must match to order 8.
    SeriesQ f = gauss_2f1_series(Rat(1), Rat(1), Rat(3, 2), 8);
    Rat even(1), odd(1);
    for (long k = 0; k < 8; ++k) {
        CHECK(f.coeff(k) == even / odd);
        even *= Rat(2 * k + 2);
        odd *= Rat(2 * k + 3);
    }

    CHECK_THROWS_AS(gauss_2f1_series(Rat(1, 2), Rat(1), Rat(-2), 6), DomainError);
    // terminating numerator rescues a non-positive lower parameter
    CHECK(gauss_2f1_series(Rat(-1), Rat(1), Rat(-2), 6).coeff(1) == Rat(1, 2));
}

TEST_CASE("regularized terminating 2F1") {
    // With a positive integer lower parameter the regularized sum is the
    // plain sum divided by (C-1)!.
    Rat plain(0);
    for (long j = 0; j <= 3; ++j)
        plain += hyp_term({{Rat(-3), Rat(5, 2)}, {Rat(1), Rat(2)}}, j) * pow_int(Rat(2), j);
    CHECK(gauss_2f1_regularized(Rat(-3), Rat(5, 2), Rat(2), Rat(2)) == plain / factorial(1));
    // Non-positive C: leading terms vanish through the reciprocal gamma.
    Rat v = gauss_2f1_regularized(Rat(-2), Rat(1), Rat(-1), Rat(1));
    // terms j=0,1 die; j=2 contributes (-2)(-1) * 1*2 * 1 / (2! * 1!) ... = 2/2 = 2
    CHECK(v == Rat(2));
    CHECK_THROWS_AS(gauss_2f1_regularized(Rat(1, 2), Rat(1, 3), Rat(1), Rat(2)), DomainError);
}
