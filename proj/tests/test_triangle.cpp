#include <doctest.h>

#include "gkp/rng.hpp"
#include "gkp/transforms.hpp"
#include "gkp/triangle.hpp"
#include "oracles.hpp"

using namespace gkp;

namespace {
const GkpParams kBinomial{0, 0, 1, 0, 0, 1};
const GkpParams kEulerian{0, 1, 1, 1, -1, 0};      // descent counts
const GkpParams kStirlingSubset{0, 1, 0, 0, 0, 1};
const GkpParams kEulerianShift{0, 1, 0, 1, -1, 1}; // classical indexing
const GkpParams kEulerianNext{0, 1, 1, 1, -1, 1};  // one row down

GkpParams random_params(RatSampler& rng) {
    return GkpParams{rng.rat(), rng.rat(), rng.rat(), rng.rat(), rng.rat(), rng.rat()};
}
} // namespace

TEST_CASE("recurrence reproduces the classical triangles") {
    Triangle pascal = Triangle::from_recurrence(kBinomial, 6);
    CHECK(pascal.entry(5, 2) == Rat(10));
    CHECK(pascal.entry(4, 2) == Rat(6));
    CHECK(pascal.entry(2, 0) == Rat(1));
    CHECK(pascal.entry(2, 2) == Rat(1));

    Triangle eulerian = Triangle::from_recurrence(kEulerian, 6);
    CHECK(eulerian.row(3) == std::vector<Rat>{Rat(1), Rat(4), Rat(1), Rat(0)});
    CHECK(eulerian.row(4) == std::vector<Rat>{Rat(1), Rat(11), Rat(11), Rat(1), Rat(0)});
    // the classical length-(n+1) Eulerian row [1,11,11,1] lives one row down
    // in the triangle with both boundary weights 1
    Triangle next = Triangle::from_recurrence(kEulerianNext, 3);
    CHECK(next.row(3) == std::vector<Rat>{Rat(1), Rat(11), Rat(11), Rat(1)});

    Triangle subset = Triangle::from_recurrence(kStirlingSubset, 7);
    CHECK(subset.entry(4, 2) == Rat(7));
}

TEST_CASE("descent-count oracle matches the Eulerian triangle") {
    Triangle eulerian = Triangle::from_recurrence(kEulerian, 6);
    for (long n = 0; n <= 6; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(eulerian.entry(n, k) == Rat(oracles::count_descents(n, k)));
}

TEST_CASE("set-partition oracle matches the subset-number triangle") {
    Triangle subset = Triangle::from_recurrence(kStirlingSubset, 7);
    for (long n = 0; n <= 7; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(subset.entry(n, k) == Rat(oracles::count_set_partitions(n, k)));
}

TEST_CASE("zero padding and apex conventions") {
    Triangle tri = Triangle::from_recurrence(kEulerian, 4);
    CHECK(tri.entry(3, -1).is_zero());
    CHECK(tri.entry(3, 4).is_zero());
    CHECK(tri.entry(0, 0).is_one());
    CHECK_THROWS_AS(tri.entry(9, 0), DomainError);
    CHECK_THROWS_AS(tri.row(-1), DomainError);
}

TEST_CASE("row polynomials") {
    Triangle pascal = Triangle::from_recurrence(kBinomial, 4);
    CHECK(pascal.row_polynomial(2) == Poly{Rat(1), Rat(2), Rat(1)});
    CHECK(pascal.row_polynomial(0) == Poly(Rat(1)));
    Triangle eulerian = Triangle::from_recurrence(kEulerian, 4);
    CHECK(eulerian.row_polynomial(3) == Poly{Rat(1), Rat(4), Rat(1)});
}

TEST_CASE("tableau round trip and the Eulerian tableau") {
    Tableau tab = to_tableau(kEulerian);
    CHECK(tab == Tableau(Rat(0), Rat(1), Rat(0), Rat(1), Rat(-1), Rat(0)));

    CHECK_THROWS_AS(to_tableau(GkpParams{1, 2, 3, 0, 0, 1}), DomainError);
    CHECK_THROWS_AS(Tableau(Rat(1), Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)), DomainError);

    RatSampler rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        GkpParams p = random_params(rng);
        if (p.beta.is_zero() || p.betaP.is_zero()) continue;
        CHECK(from_tableau(to_tableau(p), p.beta, p.betaP) == p);
    }
}

TEST_CASE("scaling the parameter rows scales entries by A^(n-k) B^k") {
    RatSampler rng(43);
    Triangle pascal = Triangle::from_recurrence(kBinomial, 5);
    ScaledParams sc = scale_params(kBinomial, Rat(2), Rat(3));
    Triangle scaled = Triangle::from_recurrence(sc.params, 5);
    CHECK(scaled.entry(2, 1) == Rat(12)); // 2 * 3 * C(2,1)
    for (long n = 0; n <= 5; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(scaled.entry(n, k) == sc.entry_factor(n, k) * pascal.entry(n, k));

    // identity scaling
    ScaledParams id = scale_params(kEulerian, Rat(1), Rat(1));
    CHECK(id.params == kEulerian);
    CHECK(id.entry_factor(7, 3).is_one());

    // signed triangle via B = -1
    ScaledParams sgn = scale_params(kEulerian, Rat(1), Rat(-1));
    Triangle signed_tri = Triangle::from_recurrence(sgn.params, 5);
    Triangle plain = Triangle::from_recurrence(kEulerian, 5);
    for (long n = 0; n <= 5; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(signed_tri.entry(n, k) ==
                  (k % 2 == 0 ? plain.entry(n, k) : -plain.entry(n, k)));

    for (int trial = 0; trial < 20; ++trial) {
        GkpParams p = random_params(rng);
        Rat A = rng.rat(), B = rng.rat();
        ScaledParams s = scale_params(p, A, B);
        Triangle base = Triangle::from_recurrence(p, 6);
        Triangle stri = Triangle::from_recurrence(s.params, 6);
        for (long n = 0; n <= 6; ++n)
            for (long k = 0; k <= n; ++k) {
                if ((A.is_zero() && n > k) || (B.is_zero() && k > 0))
                    CHECK(stri.entry(n, k).is_zero());
                else
                    CHECK(stri.entry(n, k) == s.entry_factor(n, k) * base.entry(n, k));
            }
    }
}

TEST_CASE("shifting a degenerate lower row weights entries by s^(k rising)") {
    // s = 1 turns subset numbers into surjection counts
    ShiftedParams sh = shift_lower_params(kStirlingSubset, Rat(1));
    CHECK(sh.params == GkpParams{0, 1, 0, 0, 1, 1});
    Triangle surj = Triangle::from_recurrence(sh.params, 6);
    CHECK(surj.entry(3, 2) == Rat(6)); // 2^3 - 2 onto maps
    for (long n = 0; n <= 6; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(surj.entry(n, k) == Rat(oracles::count_surjections(n, k)));

    // s = 0 zeroes every positive column
    Triangle zeroed = Triangle::from_recurrence(shift_lower_params(kStirlingSubset, Rat(0)).params, 5);
    Triangle subset = Triangle::from_recurrence(kStirlingSubset, 5);
    for (long n = 0; n <= 5; ++n) {
        CHECK(zeroed.entry(n, 0) == subset.entry(n, 0));
        for (long k = 1; k <= n; ++k) CHECK(zeroed.entry(n, k).is_zero());
    }

    // generic s against the recurrence
    RatSampler rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        GkpParams p{rng.rat(), rng.rat(), rng.rat(), Rat(0), Rat(0), rng.nonzero_rat()};
        Rat s = rng.rat();
        ShiftedParams shp = shift_lower_params(p, s);
        Triangle base = Triangle::from_recurrence(p, 7);
        Triangle shifted = Triangle::from_recurrence(shp.params, 7);
        for (long n = 0; n <= 7; ++n)
            for (long k = 0; k <= n; ++k)
                CHECK(shifted.entry(n, k) == shp.entry_factor(n, k) * base.entry(n, k));
    }

    CHECK_THROWS_AS(shift_lower_params(kEulerian, Rat(2)), DomainError);
}

TEST_CASE("left and right trimming") {
    // left-trim of the shifted Eulerian triangle gives the next-row triangle
    Triangle a = Triangle::from_recurrence(kEulerianShift, 13);
    Triangle left = trim(a, TrimSide::left);
    CHECK(left.params() == kEulerianNext);

    Triangle b = Triangle::from_recurrence(kEulerian, 13);
    Triangle right = trim(b, TrimSide::right);
    CHECK(right.params() == kEulerianNext);

    // both trims produce the same triangle, entrywise through n = 12
    Triangle c = Triangle::from_recurrence(kEulerianNext, 12);
    CHECK(left == c);
    CHECK(right == c);

    CHECK_THROWS_AS(trim(b, TrimSide::left), NotApplicableError);
    CHECK_THROWS_AS(trim(a, TrimSide::right), NotApplicableError);
}

TEST_CASE("mid trimming divides out the common row factor") {
    RatSampler rng(45);
    int done = 0;
    while (done < 10) {
        Rat beta = rng.nonzero_rat(), betaP = rng.nonzero_rat(), A = rng.nonzero_rat();
        GkpParams p{rng.rat(), beta, A * beta, rng.rat(), betaP, A * betaP};
        Triangle tri = Triangle::from_recurrence(p, 9);
        Triangle mid = trim(tri, TrimSide::mid);
        CHECK(mid.params() == GkpParams{p.alpha, p.beta, p.alpha + p.gamma,
                                        p.alphaP, p.betaP, p.alphaP + p.betaP + p.gammaP});
        Triangle expect = Triangle::from_recurrence(mid.params(), 8);
        CHECK(mid == expect);
        ++done;
    }
    CHECK_THROWS_AS(trim(Triangle::from_recurrence(kEulerian, 4), TrimSide::mid),
                    NotApplicableError);
}

TEST_CASE("truncated EGF") {
    Triangle pascal = Triangle::from_recurrence(kBinomial, 5);
    SeriesP egf = egf_truncated(pascal);
    // coefficient of z^2 is (1+t)^2 / 2
    CHECK(egf.coeff(2) == Poly{Rat(1, 2), Rat(1), Rat(1, 2)});
    CHECK(egf.coeff(0) == Poly(Rat(1)));

    // Eulerian EGF matches the expansion of (1-t)/(e^((t-1)z) - t) to order 4
    Triangle eulerian = Triangle::from_recurrence(kEulerian, 4);
    long N = 5;
    SeriesF tm1z = SeriesF::z(N).scaled_ring(RatFunc(Poly{Rat(-1), Rat(1)}));
    SeriesF denom = tm1z.exp() - SeriesF::constant(N, RatFunc(Poly::t()));
    SeriesF closed = SeriesF::constant(N, RatFunc(Poly{Rat(1), Rat(-1)})) * denom.inverse();
    CHECK(reduce_to_poly_series(closed) == egf_truncated(eulerian));
}

TEST_CASE("the EGF PDE holds exactly for generated triangles") {
    CHECK(verify_pde(kBinomial, 10).ok);

    RatSampler rng(46);
    for (int trial = 0; trial < 20; ++trial) {
        GkpParams p = random_params(rng);
        PdeReport r = verify_pde(p, 12);
        CHECK(r.ok);
    }

    // negative control: corrupt one entry and the check reports its order
    Triangle tri = Triangle::from_recurrence(kEulerian, 6);
    auto rows = tri.rows();
    rows[4][1] += Rat(1);
    Triangle bad(tri.params(), std::move(rows));
    PdeReport r = verify_pde(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.first_failure == 3); // the recurrence producing row 4 fails
}

TEST_CASE("recurrence violation detector") {
    Triangle tri = Triangle::from_recurrence(kBinomial, 5);
    CHECK_FALSE(recurrence_violation(tri.rows(), kBinomial).has_value());
    auto rows = tri.rows();
    rows[3][2] = Rat(99);
    auto bad = recurrence_violation(rows, kBinomial);
    REQUIRE(bad.has_value());
    CHECK(bad->first == 3);
}
