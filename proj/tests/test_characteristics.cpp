#include <doctest.h>

#include "gkp/characteristics.hpp"
#include "gkp/rng.hpp"
#include "gkp/transforms.hpp"

using namespace gkp;

namespace {

// parameter samplers for each closed-form case
GkpParams sample_a1(RatSampler& rng) {
    return {rng.nonzero_rat(), rng.nonzero_rat(), rng.rat(), Rat(0), rng.nonzero_rat(), rng.rat()};
}
GkpParams sample_a1_limit(RatSampler& rng) {
    return {Rat(0), rng.nonzero_rat(), rng.rat(), Rat(0), rng.nonzero_rat(), rng.rat()};
}
GkpParams sample_a2(RatSampler& rng) {
    Rat beta = rng.nonzero_rat();
    Rat betaP = rng.nonzero_rat();
    Rat alphaP;
    do { alphaP = rng.rat(); } while (alphaP == -betaP);
    return {-beta, beta, rng.rat(), alphaP, betaP, rng.rat()};
}
GkpParams sample_a2_limit(RatSampler& rng) {
    Rat beta = rng.nonzero_rat(), betaP = rng.nonzero_rat();
    return {-beta, beta, rng.rat(), -betaP, betaP, rng.rat()};
}
GkpParams sample_a3(RatSampler& rng) {
    Rat beta = rng.nonzero_rat(), betaP = rng.nonzero_rat();
    Rat alphaP;
    do { alphaP = rng.rat(); } while (alphaP == -betaP);
    Rat alpha = beta * (alphaP / betaP + Rat(1));
    return {alpha, beta, rng.rat(), alphaP, betaP, rng.rat()};
}
GkpParams sample_a3_limit(RatSampler& rng) {
    Rat beta = rng.nonzero_rat(), betaP = rng.nonzero_rat();
    return {Rat(0), beta, rng.rat(), -betaP, betaP, rng.rat()};
}

} // namespace

TEST_CASE("case-A closed EGFs match the recurrence EGF") {
    RatSampler rng(601);
    struct Case {
        EgfCase id;
        GkpParams (*sample)(RatSampler&);
    };
    const Case cases[] = {
        {EgfCase::a1, sample_a1},           {EgfCase::a1_limit, sample_a1_limit},
        {EgfCase::a2, sample_a2},           {EgfCase::a2_limit, sample_a2_limit},
        {EgfCase::a3, sample_a3},           {EgfCase::a3_limit, sample_a3_limit},
    };
    for (const Case& c : cases)
        for (int trial = 0; trial < 10; ++trial) {
            GkpParams p = c.sample(rng);
            CAPTURE(egf_case_name(c.id));
            CAPTURE(p.str());
            CheckReport r = closed_egf_matches_recurrence({c.id, p, 8});
            CHECK(r.ok);
            if (!r.ok) MESSAGE(r.detail);
        }
    // preconditions are enforced by exact tests
    CHECK_THROWS_AS(closed_egf({EgfCase::a1, GkpParams{0, 1, 1, 0, 1, 1}, 6}), DomainError);
    CHECK_THROWS_AS(closed_egf({EgfCase::a1, GkpParams{1, 1, 1, 1, 1, 1}, 6}), DomainError);
    CHECK_THROWS_AS(closed_egf({EgfCase::a2, GkpParams{1, 1, 1, 1, 1, 1}, 6}), DomainError);
}

TEST_CASE("the degenerate-boundary EGF reproduces the surjection triangle") {
    // boundary (0,1,0;1,1) with t-weights: the surjection-count triangle
    GkpParams surj{0, 1, 0, 0, 1, 1};
    CHECK(closed_egf_matches_recurrence({EgfCase::a1_limit, surj, 9}).ok);
}

TEST_CASE("Stirling and Eulerian family EGFs match the recurrence EGF") {
    RatSampler rng(602);
    for (int trial = 0; trial < 10; ++trial) {
        // factorial-weighted Stirling EGF (both generic and a = 0)
        Rat a = (trial % 2 == 0) ? rng.nonzero_rat() : Rat(0);
        GkpParams elem{-a, rng.nonzero_rat(), rng.rat(), Rat(0), Rat(1), Rat(1)};
        CHECK(closed_egf_matches_recurrence({EgfCase::s_elem, elem, 8}).ok);

        Rat b = rng.nonzero_rat();
        EulerianParams full{rng.nonzero_rat(), b, rng.rat(), rng.rat()};
        CHECK(closed_egf_matches_recurrence({EgfCase::e_speck, eulerian_gkp(full), 8}).ok);

        EulerianParams expo{Rat(0), b, rng.rat(), rng.rat()};
        CHECK(closed_egf_matches_recurrence({EgfCase::e_speck2, eulerian_gkp(expo), 8}).ok);

        Rat c0 = rng.rat();
        EulerianParams single{trial % 2 == 0 ? rng.nonzero_rat() : Rat(0), b, c0, b - c0};
        CHECK(closed_egf_matches_recurrence({EgfCase::e_reducedspeck, eulerian_gkp(single), 8}).ok);
    }
    // the classical Eulerian EGF is the b = 1, (c0, cInf) = (1, 0) instance
    CHECK(closed_egf_matches_recurrence(
              {EgfCase::e_speck2, eulerian_gkp({Rat(0), Rat(1), Rat(1), Rat(0)}), 9})
              .ok);
}

TEST_CASE("generalized Narayana EGFs match the recurrence EGF") {
    RatSampler rng(603);
    for (EgfCase id : {EgfCase::b_s, EgfCase::b_rs, EgfCase::b_e}) {
        FamilyKind kind = id == EgfCase::b_s    ? FamilyKind::narayana_s
                          : id == EgfCase::b_rs ? FamilyKind::narayana_rs
                                                : FamilyKind::narayana_e;
        for (int trial = 0; trial < 10; ++trial) {
            Rat b = (trial % 3 == 0) ? rng.nonzero_rat() : Rat(2);
            NamedFamily f{kind, b, rng.rat(), rng.rat()};
            CAPTURE(egf_case_name(id));
            CheckReport r = closed_egf_matches_recurrence({id, family_gkp(f), 8});
            CHECK(r.ok);
            if (!r.ok) MESSAGE(r.detail);
        }
    }
    // frozen example: the type-A h-vector family at (3, 3)
    NamedFamily narayana{FamilyKind::narayana_e, Rat(2), Rat(3), Rat(3)};
    CHECK(closed_egf_matches_recurrence({EgfCase::b_e, family_gkp(narayana), 10}).ok);
}

TEST_CASE("restricted Narayana EGFs match the recurrence EGF") {
    RatSampler rng(604);
    struct Restricted {
        EgfCase id;
        FamilyKind kind;
        char restriction;
    };
    const Restricted cases[] = {
        {EgfCase::b_s_ra, FamilyKind::narayana_s, 'a'},
        {EgfCase::b_s_rb, FamilyKind::narayana_s, 'b'},
        {EgfCase::b_s_rc, FamilyKind::narayana_s, 'c'},
        {EgfCase::b_rs_ra, FamilyKind::narayana_rs, 'a'},
        {EgfCase::b_rs_rb, FamilyKind::narayana_rs, 'b'},
        {EgfCase::b_rs_rc, FamilyKind::narayana_rs, 'c'},
        {EgfCase::b_e_ra, FamilyKind::narayana_e, 'a'},
        {EgfCase::b_e_rb, FamilyKind::narayana_e, 'b'},
        {EgfCase::b_e_rc, FamilyKind::narayana_e, 'c'},
    };
    for (const Restricted& rc : cases)
        for (int trial = 0; trial < 10; ++trial) {
            Rat c = rng.rat();
            Rat c0, cInf;
            switch (rc.kind) {
            case FamilyKind::narayana_s:
                c0 = (rc.restriction == 'c') ? c - Rat(1) : c;
                cInf = rc.restriction == 'a' ? Rat(-2) * c
                       : rc.restriction == 'b' ? Rat(-2) : Rat(0);
                break;
            case FamilyKind::narayana_rs:
                cInf = (rc.restriction == 'c') ? c - Rat(1) : c;
                c0 = rc.restriction == 'a' ? Rat(-2) * c
                     : rc.restriction == 'b' ? Rat(-2) : Rat(0);
                break;
            default:
                c0 = (rc.restriction == 'c') ? c - Rat(1) : c;
                cInf = rc.restriction == 'a' ? c
                       : rc.restriction == 'b' ? Rat(2) - c : Rat(1) - c;
                break;
            }
            NamedFamily f{rc.kind, Rat(2), c0, cInf};
            CAPTURE(egf_case_name(rc.id));
            CAPTURE(c.str());
            CheckReport r = closed_egf_matches_recurrence({rc.id, family_gkp(f), 8});
            CHECK(r.ok);
            if (!r.ok) MESSAGE(r.detail);
        }
    // restriction mismatches are rejected
    CHECK_THROWS_AS(closed_egf({EgfCase::b_s_ra,
                                family_gkp({FamilyKind::narayana_s, Rat(2), Rat(1), Rat(5)}), 6}),
                    DomainError);
}

TEST_CASE("secant-tangent EGFs match the recurrence EGF") {
    RatSampler rng(605);
    for (EgfCase id : {EgfCase::c_s, EgfCase::c_rs, EgfCase::c_e}) {
        FamilyKind kind = id == EgfCase::c_s    ? FamilyKind::sectan_s
                          : id == EgfCase::c_rs ? FamilyKind::sectan_rs
                                                : FamilyKind::sectan_e;
        for (int trial = 0; trial < 10; ++trial) {
            Rat b = (trial % 3 == 0) ? rng.nonzero_rat() : Rat(2);
            NamedFamily f{kind, b, rng.rat(), rng.rat()};
            CAPTURE(egf_case_name(id));
            CheckReport r = closed_egf_matches_recurrence({id, family_gkp(f), 8});
            CHECK(r.ok);
            if (!r.ok) MESSAGE(r.detail);
        }
    }
    // the two secant EGFs (left-peak and interior-peak triangles)
    CHECK(closed_egf_matches_recurrence(
              {EgfCase::c_sec1, GkpParams{0, 2, 1, 1, -2, 0}, 9}).ok);
    CHECK(closed_egf_matches_recurrence(
              {EgfCase::c_sec2, GkpParams{0, 2, 2, 1, -2, 0}, 9}).ok);
    CHECK_THROWS_AS(closed_egf({EgfCase::c_sec1, GkpParams{0, 2, 2, 1, -2, 0}, 6}), DomainError);
}

TEST_CASE("column EGF of the Stirling family") {
    RatSampler rng(606);
    // k = 0 reduces to the head factor (1 + az)^{r/a}
    StirlingParams p{Rat(3), Rat(2), Rat(5, 2)};
    CHECK(vertical_egf_check(p, 0, 10).ok);
    // classical subset numbers at k = 2: the a = 0 branch
    CHECK(vertical_egf_check({Rat(0), Rat(1), Rat(0)}, 2, 12).ok);
    for (int trial = 0; trial < 10; ++trial) {
        StirlingParams sp{rng.rat(), rng.nonzero_rat(), rng.rat()};
        for (long k = 0; k <= 4; ++k) CHECK(vertical_egf_check(sp, k, 12).ok);
    }
    CHECK(vertical_egf_check({Rat(1), Rat(0), Rat(1)}, 1, 6).skipped);
}

TEST_CASE("bi-series arithmetic") {
    BiSeries t = BiSeries::var_t(5, 5);
    BiSeries z = BiSeries::var_z(5, 5);
    BiSeries one = BiSeries::constant(5, 5, Rat(1));
    BiSeries f = one + t * z;
    CHECK(f.coeff(1, 1).is_one());
    CHECK((f * f).coeff(2, 2).is_one());
    CHECK((f * f).coeff(1, 1) == Rat(2));
    // pow and inverse agree with multiplication
    CHECK(f.pow(Rat(3)) == f * f * f);
    CHECK(f.pow(Rat(1, 2)) * f.pow(Rat(1, 2)) == f);
    CHECK(f.inverse() * f == one);
    CHECK_THROWS_AS((t * z).inverse(), DomainError);
    CHECK_THROWS_AS((one + one).pow(Rat(1, 2)), DomainError);
}

TEST_CASE("implicit characteristic-curve construction") {
    // initial condition: the z = 0 slice of s is t itself
    Tableau generic(Rat(1, 3), Rat(5, 12), Rat(1, 4), Rat(1), Rat(-2), Rat(1));
    BiSeries s = implicit_s_solver(generic, 8, 8);
    for (long i = 0; i < 8; ++i) CHECK(s.coeff(i, 0) == (i == 1 ? Rat(1) : Rat(0)));

    // the generic tableau reproduces its recurrence EGF to bi-order (8, 8)
    CheckReport r = implicit_egf_matches_recurrence(generic, 8, 8);
    CHECK(r.ok);
    if (!r.ok) MESSAGE(r.detail);

    // the half-integer tableau solved by the sine construction
    Tableau halves(Rat(1, 2), Rat(1, 2), Rat(0), Rat(1), Rat(-1), Rat(0));
    CHECK(implicit_egf_matches_recurrence(halves, 8, 8).ok);
    {
        // s agrees with the square of the sine-form closed solution:
        // s = [sqrt(t) cos((z/2) sqrt(t(1-t))) + sqrt(1-t) sin(...)]^2
        //   = t C^2 + (1-t) w S^2 + 2 (z/2) t (1-t) C S with w = (z/2)^2 t (1-t)
        BiSeries s_impl = implicit_s_solver(halves, 8, 8);
        BiSeries t = BiSeries::var_t(8, 8), z = BiSeries::var_z(8, 8);
        BiSeries one = BiSeries::constant(8, 8, Rat(1));
        BiSeries u = t * (one - t);
        BiSeries w = z * z * u.scaled(Rat(1, 4));
        BiSeries C(8, 8), S(8, 8), term = one;
        for (long k = 0; 2 * k < 8; ++k) {
            Rat sign = k % 2 == 0 ? Rat(1) : Rat(-1);
            C = C + term.scaled(sign / factorial(2 * k));
            S = S + term.scaled(sign / factorial(2 * k + 1));
            term = term * w;
        }
        BiSeries closed = t * C * C + (one - t) * w * S * S + z * u * C * S;
        CHECK(s_impl == closed);
    }

    // inadmissible first pair
    CHECK_THROWS_AS(implicit_s_solver(Tableau(Rat(0), Rat(1), Rat(0), Rat(1), Rat(-1), Rat(0)),
                                      4, 4),
                    DomainError);

    {
        // the stated workaround: permute the parameter pairs until the first
        // one is admissible, then solve the permuted triangle (the Eulerian
        // tableau has r0 = 0 but r1 = 1)
        Tableau eulerian = to_tableau(GkpParams{0, 1, 1, 1, -1, 0});
        CHECK(eulerian.r0.is_nonpositive_integer());
        Tableau permuted = tableau_permute(s3_element(S3Op::ubt), eulerian);
        CHECK_FALSE(permuted.r0.is_nonpositive_integer());
        CHECK(implicit_egf_matches_recurrence(permuted, 8, 8).ok);
    }

    // asymmetric truncation orders
    CHECK(implicit_egf_matches_recurrence(generic, 10, 6).ok);
    CHECK(implicit_egf_matches_recurrence(generic, 6, 9).ok);

    // random admissible tableaux
    RatSampler rng(607);
    int done = 0;
    while (done < 2) {
        Rat r0 = rng.rat(), r1 = rng.rat();
        if (r0.is_nonpositive_integer()) continue;
        Rat g0 = rng.rat(), g1 = rng.rat();
        Tableau tab(r0, r1, Rat(1) - r0 - r1, g0, g1, -g0 - g1);
        CheckReport rr = implicit_egf_matches_recurrence(tab, 8, 8);
        CHECK(rr.ok);
        if (!rr.ok) MESSAGE(rr.detail);
        ++done;
    }
}

namespace {

RatFunc subst_ratfunc(const RatFunc& f, const RatFunc& x) {
    return eval_at(f.num(), x) / eval_at(f.den(), x);
}

// G(R(t), S(t) z) on a rational-function-coefficient series
SeriesF subst_egf(const SeriesF& g, const RatFunc& R, const RatFunc& S) {
    std::vector<RatFunc> c;
    RatFunc s_pow(Rat(1));
    for (long n = 0; n < g.order(); ++n) {
        c.push_back(subst_ratfunc(g.coeff(n), R) * s_pow);
        s_pow = s_pow * S;
    }
    return SeriesF(g.order(), std::move(c));
}

} // namespace

TEST_CASE("the subcase-I builders generate the others under the Moebius substitutions") {
    // swapping the 0 and infinity parameter pairs is t -> 1/t, z -> t z;
    // swapping the 1 and infinity pairs is t -> -t/(1-t), z -> (1-t) z
    RatFunc t = RatFunc::t();
    RatFunc one(Rat(1));
    RatFunc r_swap0inf = one / t;
    RatFunc s_swap0inf = t;
    RatFunc r_swap1inf = -t / (one - t);
    RatFunc s_swap1inf = one - t;

    RatSampler rng(609);
    for (int trial = 0; trial < 5; ++trial) {
        Rat c0 = rng.rat(), cInf = rng.rat();
        long N = 7;
        // generalized Narayana
        SeriesF gs = closed_egf({EgfCase::b_s,
                                 family_gkp({FamilyKind::narayana_s, Rat(2), c0, cInf}), N});
        SeriesF grs = closed_egf({EgfCase::b_rs,
                                  family_gkp({FamilyKind::narayana_rs, Rat(2), cInf, c0}), N});
        SeriesF ge = closed_egf({EgfCase::b_e,
                                 family_gkp({FamilyKind::narayana_e, Rat(2), c0, -c0 - cInf}), N});
        CHECK(subst_egf(gs, r_swap0inf, s_swap0inf) == grs);
        CHECK(subst_egf(gs, r_swap1inf, s_swap1inf) == ge);
        // generalized secant-tangent
        SeriesF ws = closed_egf({EgfCase::c_s,
                                 family_gkp({FamilyKind::sectan_s, Rat(2), c0, cInf}), N});
        SeriesF wrs = closed_egf({EgfCase::c_rs,
                                  family_gkp({FamilyKind::sectan_rs, Rat(2), cInf, c0}), N});
        SeriesF we = closed_egf({EgfCase::c_e,
                                 family_gkp({FamilyKind::sectan_e, Rat(2), c0, -c0 - cInf}), N});
        CHECK(subst_egf(ws, r_swap0inf, s_swap0inf) == wrs);
        CHECK(subst_egf(ws, r_swap1inf, s_swap1inf) == we);
    }
}

TEST_CASE("Narayana EGF contiguity in the boundary parameters") {
    CHECK(narayana_egf_contiguity(Rat(1), Rat(-2), 8).ok);
    // n = 1 by hand: (2t-1)(c0 + cInf t) + 1 vs 2t(c0+1+cInf t) - (c0-1+(cInf+2)t)
    CHECK(narayana_egf_contiguity(Rat(2, 3), Rat(5), 1).ok);
    RatSampler rng(608);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(narayana_egf_contiguity(rng.rat(), rng.rat(), 6).ok);
}
