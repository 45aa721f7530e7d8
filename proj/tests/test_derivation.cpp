#include <doctest.h>

#include "gkp/derivation.hpp"
#include "gkp/families.hpp"
#include "gkp/rng.hpp"
#include "oracles.hpp"

using namespace gkp;

namespace {
// the [0,2|.;1,-2|.] derivation: the rule behind iterated secant derivatives
const GkpParams kSecTanRs{0, 2, 1, 1, -2, 0};
} // namespace

TEST_CASE("termwise derivation rules") {
    // D(x) with the reversed-Stirling secant-tangent exponents is x y
    MonoElem x = MonoElem::monomial(Rat(1), Rat(1), Rat(0));
    MonoElem dx = mono_derive(x, kSecTanRs);
    CHECK(dx == MonoElem::monomial(Rat(1), Rat(1), Rat(1)));

    // derivations kill constants
    MonoElem c = MonoElem::monomial(Rat(7), Rat(0), Rat(0));
    CHECK(mono_derive(c, kSecTanRs).is_zero());

    // power rule via the term exponent: D(x^2) = 2 x^2 y
    MonoElem x2 = MonoElem::monomial(Rat(1), Rat(2), Rat(0));
    CHECK(mono_derive(x2, kSecTanRs) == MonoElem::monomial(Rat(2), Rat(2), Rat(1)));
}

TEST_CASE("Leibniz rule on random elements") {
    RatSampler rng(701);
    for (int trial = 0; trial < 30; ++trial) {
        GkpParams p{rng.rat(), rng.rat(), rng.rat(), rng.rat(), rng.rat(), rng.rat()};
        MonoElem e1, e2;
        for (int i = 0; i < 3; ++i) {
            e1.add_term(rng.rat(), rng.rat(), rng.rat());
            e2.add_term(rng.rat(), rng.rat(), rng.rat());
        }
        MonoElem lhs = mono_derive(e1 * e2, p);
        MonoElem rhs = mono_derive(e1, p) * e2 + e1 * mono_derive(e2, p);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("iterated derivation generates the triangle") {
    // apex only at n = 0
    Triangle t0 = triangle_via_derivation(kSecTanRs, 0);
    CHECK(t0.entry(0, 0).is_one());

    // the secant-tangent rows count left peaks
    Triangle peaks = triangle_via_derivation(kSecTanRs, 6);
    for (long n = 0; n <= 6; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(peaks.entry(n, k) == Rat(oracles::count_left_peaks(n, k)));

    // random parameters agree with the recurrence
    RatSampler rng(702);
    int done = 0;
    while (done < 20) {
        GkpParams p{rng.rat(), rng.rat(), rng.rat(), rng.rat(), rng.rat(), rng.rat()};
        if (p.beta.is_zero() && p.betaP.is_zero()) continue;
        Triangle via_d = triangle_via_derivation(p, 8);
        CHECK(via_d == Triangle::from_recurrence(p, 8));
        ++done;
    }

    CHECK_THROWS_AS(triangle_via_derivation(GkpParams{1, 0, 1, 1, 0, 1}, 3), DomainError);
}

TEST_CASE("exponentiated derivation matches the substituted EGF") {
    CHECK(corollary_series_check(GkpParams{0, 1, 1, 1, -1, 0}, 6).ok);
    RatSampler rng(703);
    int done = 0;
    while (done < 10) {
        GkpParams p{rng.rat(), rng.rat(), rng.rat(), rng.rat(), rng.rat(), rng.rat()};
        if (p.beta.is_zero() && p.betaP.is_zero()) continue;
        CHECK(corollary_series_check(p, 6).ok);
        ++done;
    }
}

TEST_CASE("secant-tangent identities through the formal engine") {
    // repeated differentiation of sec: the left-peak triangle
    CHECK(sectan_identity_check(SectanKind::penult_b, Rat(1), Rat(0), 8).ok);
    // and of sec^2: the interior-peak triangle
    CHECK(sectan_identity_check(SectanKind::penult_b, Rat(2), Rat(0), 8).ok);
    // apex case
    CHECK(sectan_identity_check(SectanKind::penult_a, Rat(3), Rat(-1), 0).ok);

    RatSampler rng(704);
    for (SectanKind kind :
         {SectanKind::penult_a, SectanKind::penult_b, SectanKind::penult_c})
        for (int trial = 0; trial < 6; ++trial)
            CHECK(sectan_identity_check(kind, rng.rat(), rng.rat(), 8).ok);
}

TEST_CASE("iterated-operator specialization coherence") {
    CHECK(iterated_operator_check(GkpParams{0, 1, 1, 1, -1, 0}, 6).ok);
    RatSampler rng(705);
    int done = 0;
    while (done < 5) {
        GkpParams p{rng.rat(), rng.nonzero_rat(), rng.rat(),
                    rng.rat(), rng.nonzero_rat(), rng.rat()};
        CHECK(iterated_operator_check(p, 6).ok);
        ++done;
    }
    CHECK(iterated_operator_check(GkpParams{1, 0, 1, 0, 1, 1}, 4).skipped);
}
