#include <doctest.h>

#include "gkp/rng.hpp"
#include "gkp/transforms.hpp"
#include "gkp/triangle.hpp"

using namespace gkp;

namespace {

// random parameter array already in the beta' = -beta normalization
GkpParams random_normalized(RatSampler& rng) {
    Rat beta = rng.nonzero_rat();
    return GkpParams{rng.rat(), beta, rng.rat(), rng.rat(), -beta, rng.rat()};
}

const GkpParams kEulerianShift{0, 1, 0, 1, -1, 1};
const GkpParams kEulerian{0, 1, 1, 1, -1, 0};
const GkpParams kEulerianNext{0, 1, 1, 1, -1, 1};

} // namespace

TEST_CASE("the six elements form a group isomorphic to S3") {
    // closure: the full 6x6 Cayley table stays inside the enumeration, and
    // the permutation map respects composition
    for (S3Op a : kAllS3Ops)
        for (S3Op b : kAllS3Ops) {
            const S3Elem& ea = s3_element(a);
            const S3Elem& eb = s3_element(b);
            const S3Elem& c = s3_compose(ea, eb);
            for (int i = 0; i < 3; ++i) CHECK(c.perm[i] == ea.perm[eb.perm[i]]);
        }
    // the map onto permutations is a bijection
    for (S3Op a : kAllS3Ops)
        for (S3Op b : kAllS3Ops)
            if (a != b) CHECK(s3_element(a).perm != s3_element(b).perm);

    // involutions and inverses
    CHECK(s3_compose(s3_element(S3Op::rt), s3_element(S3Op::rt)).op == S3Op::identity);
    CHECK(s3_compose(s3_element(S3Op::ubt), s3_element(S3Op::ubt)).op == S3Op::identity);
    CHECK(s3_inverse(s3_element(S3Op::rt)).op == S3Op::rt);
    CHECK(s3_inverse(s3_element(S3Op::ubt)).op == S3Op::ubt);
    CHECK(s3_inverse(s3_element(S3Op::ubt_rt)).op == S3Op::rt_ubt);
    CHECK(s3_compose(s3_element(S3Op::ubt), s3_element(S3Op::rt)).op == S3Op::ubt_rt);
    CHECK(s3_compose(s3_element(S3Op::rt), s3_element(S3Op::ubt)).op == S3Op::rt_ubt);

    for (S3Op a : kAllS3Ops) {
        const S3Elem& e = s3_element(a);
        CHECK(s3_compose(e, s3_inverse(e)).op == S3Op::identity);
    }
}

TEST_CASE("lifting pairs compose like the group elements") {
    // (R1, S1) o (R2, S2) = (R1 o R2, (S1 o R2) S2) must land on the stored
    // pair of the composed element
    auto compose_pair = [](const S3Elem& a, const S3Elem& b) {
        RatFunc R = eval_at(a.lift_r.num(), b.lift_r) / eval_at(a.lift_r.den(), b.lift_r);
        RatFunc S = (eval_at(a.lift_s.num(), b.lift_r) / eval_at(a.lift_s.den(), b.lift_r)) *
                    b.lift_s;
        return std::make_pair(R, S);
    };
    for (S3Op a : kAllS3Ops)
        for (S3Op b : kAllS3Ops) {
            const S3Elem& ea = s3_element(a);
            const S3Elem& eb = s3_element(b);
            auto [R, S] = compose_pair(ea, eb);
            const S3Elem& c = s3_compose(ea, eb);
            CHECK(R == c.lift_r);
            CHECK(S == c.lift_s);
        }
}

TEST_CASE("parameter transform on the classical Eulerian chain") {
    // reflection maps the classically-indexed triangle onto the modern one
    CHECK(s3_transform_params(s3_element(S3Op::rt), kEulerianShift) == kEulerian);
    CHECK(s3_transform_params(s3_element(S3Op::identity), kEulerian) == kEulerian);

    // the upper binomial transform written on the generalized Eulerian array
    Rat a(-3, 2), b(2), c0(1, 3), cInf(5);
    GkpParams p{-a, b, c0, a + b, -b, cInf};
    GkpParams q = s3_transform_params(s3_element(S3Op::ubt), p);
    CHECK(q == GkpParams{-b, b, -c0 - cInf, a + b, -b, cInf});

    CHECK_THROWS_AS(s3_transform_params(s3_element(S3Op::rt), GkpParams{0, 1, 1, 0, 1, 1}),
                    NotApplicableError);
}

TEST_CASE("row transforms agree with regenerating from transformed parameters") {
    RatSampler rng(301);
    for (int trial = 0; trial < 25; ++trial) {
        GkpParams p = random_normalized(rng);
        Triangle tri = Triangle::from_recurrence(p, 10);
        for (S3Op op : kAllS3Ops) {
            const S3Elem& e = s3_element(op);
            Triangle moved = s3_transform_rows(e, tri);
            Triangle regenerated = Triangle::from_recurrence(moved.params(), 10);
            CHECK(moved == regenerated);
        }
    }
}

TEST_CASE("reflection fixes palindromic Eulerian rows") {
    Triangle tri = Triangle::from_recurrence(kEulerianNext, 9);
    Triangle reflected = s3_transform_rows(s3_element(S3Op::rt), tri);
    CHECK(reflected.rows() == tri.rows()); // classical symmetry of the rows
}

TEST_CASE("UBT applied twice is the identity") {
    RatSampler rng(302);
    for (int trial = 0; trial < 10; ++trial) {
        GkpParams p = random_normalized(rng);
        Triangle tri = Triangle::from_recurrence(p, 10);
        const S3Elem& ubt = s3_element(S3Op::ubt);
        Triangle twice = s3_transform_rows(ubt, s3_transform_rows(ubt, tri));
        CHECK(twice.rows() == tri.rows());
        CHECK(twice.params() == p);
    }
}

TEST_CASE("sign-extended elements negate odd rows and the parameter array") {
    RatSampler rng(303);
    GkpParams p = random_normalized(rng);
    Triangle tri = Triangle::from_recurrence(p, 8);
    Triangle neg = s3_transform_rows(s3_element(S3Op::identity), tri, /*negate_s=*/true);
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(neg.entry(n, k) == (n % 2 == 0 ? tri.entry(n, k) : -tri.entry(n, k)));
    CHECK(neg.params() == GkpParams{-p.alpha, -p.beta, -p.gamma, -p.alphaP, -p.betaP, -p.gammaP});
    // the negated array regenerates the same signed triangle
    CHECK(Triangle::from_recurrence(neg.params(), 8) == neg);
}

TEST_CASE("tableau permutation matches the parameter transform") {
    // reflection swaps the 0 and infinity pairs
    Tableau tab = to_tableau(kEulerianShift);
    Tableau swapped = tableau_permute(s3_element(S3Op::rt), tab);
    CHECK(swapped.r0 == tab.rInf);
    CHECK(swapped.rInf == tab.r0);
    CHECK(swapped.g0 == tab.gInf);
    CHECK(swapped.r1 == tab.r1);

    CHECK(tableau_permute(s3_element(S3Op::identity), tab) == tab);

    // commuting square: params -> transform -> tableau == params -> tableau -> permute
    RatSampler rng(304);
    for (int trial = 0; trial < 20; ++trial) {
        GkpParams p = random_normalized(rng);
        for (S3Op op : kAllS3Ops) {
            const S3Elem& e = s3_element(op);
            CHECK(to_tableau(s3_transform_params(e, p)) == tableau_permute(e, to_tableau(p)));
        }
    }
}

TEST_CASE("EGF coherence: the transformed EGF is the lifted EGF") {
    // each z^n coefficient of G(R(t*), S(t*) z*) is the rational function
    // g_n(R) S^n, which reduces to the transformed row polynomial / n! even
    // for the elements whose Moebius map has a pole at the origin
    RatSampler rng(305);
    for (int trial = 0; trial < 6; ++trial) {
        GkpParams p = random_normalized(rng);
        Triangle tri = Triangle::from_recurrence(p, 7);
        for (S3Op op : kAllS3Ops) {
            const S3Elem& e = s3_element(op);
            SeriesF lifted = lift_egf(egf_truncated(tri), e.lift_r, e.lift_s);
            Triangle moved = s3_transform_rows(e, tri);
            SeriesF direct = to_ratfunc_series(egf_truncated(moved));
            CHECK(lifted == direct);
        }
    }
}

TEST_CASE("Stanton-Sprott involution") {
    RatSampler rng(306);
    for (int trial = 0; trial < 10; ++trial) {
        Rat beta = rng.nonzero_rat();
        GkpParams p{rng.rat(), beta, rng.rat(), rng.rat(), beta, rng.rat()};
        Triangle tri = Triangle::from_recurrence(p, 9);
        Triangle once = stanton_sprott(tri);
        // parameter map
        CHECK(once.params() == GkpParams{p.alpha, p.beta, p.gamma,
                                         -p.beta + p.alpha - p.alphaP, p.beta,
                                         p.gamma - p.gammaP});
        // the transformed rows satisfy the mapped recurrence
        CHECK_FALSE(recurrence_violation(once.rows(), once.params()).has_value());
        // k = 0 column is fixed
        for (long n = 0; n <= 9; ++n) CHECK(once.entry(n, 0) == tri.entry(n, 0));
        // involution
        Triangle twice = stanton_sprott(once);
        CHECK(twice.rows() == tri.rows());
        CHECK(twice.params() == p);
    }
    CHECK_THROWS_AS(stanton_sprott(Triangle::from_recurrence(kEulerian, 4)),
                    NotApplicableError);
}

TEST_CASE("generalized lower binomial transform pair") {
    RatSampler rng(307);
    // A = 1, b = 0 reduces to the classical pair: forward of a constant
    // sequence is the delta sequence
    std::vector<Rat> ones(8, Rat(1));
    std::vector<Rat> delta = generalized_lbt(ones, Rat(1), Rat(0), TransformDir::forward);
    CHECK(delta[0].is_one());
    for (std::size_t i = 1; i < delta.size(); ++i) CHECK(delta[i].is_zero());

    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rat> u;
        for (int i = 0; i < 12; ++i) u.push_back(rng.rat());
        Rat A = rng.rat(), b = rng.rat();
        auto v = generalized_lbt(u, A, b, TransformDir::forward);
        CHECK(generalized_lbt(v, A, b, TransformDir::inverse) == u);
        // the classical upper pair inverts as well
        auto w = classical_ubt(u, TransformDir::forward);
        CHECK(classical_ubt(w, TransformDir::inverse) == u);
    }
}
