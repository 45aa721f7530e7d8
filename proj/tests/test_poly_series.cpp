#include <doctest.h>

#include "gkp/poly.hpp"
#include "gkp/rng.hpp"
#include "gkp/series.hpp"

using namespace gkp;

namespace {

Poly random_poly(RatSampler& rng, long max_deg) {
    std::vector<Rat> c;
    long d = rng.int_in(0, max_deg);
    for (long i = 0; i <= d; ++i) c.push_back(rng.rat());
    return Poly(std::move(c));
}

RatFunc random_ratfunc(RatSampler& rng, long max_deg) {
    Poly den;
    do { den = random_poly(rng, max_deg); } while (den.is_zero());
    return RatFunc(random_poly(rng, max_deg), den);
}

template <class R>
Series<R> random_series(RatSampler& rng, long order, long max_deg) {
    std::vector<R> c;
    for (long i = 0; i < order; ++i) {
        if constexpr (std::is_same_v<R, Rat>) {
            (void)max_deg;
            c.push_back(rng.rat());
        } else if constexpr (std::is_same_v<R, Poly>) {
            c.push_back(random_poly(rng, max_deg));
        } else {
            c.push_back(random_ratfunc(rng, max_deg));
        }
    }
    return Series<R>(order, std::move(c));
}

} // namespace

TEST_CASE("polynomial canonical form strips trailing zeros") {
    Poly p(std::vector<Rat>{Rat(1), Rat(2), Rat(0), Rat(0)});
    CHECK(p.degree() == 1);
    CHECK(Poly().is_zero());
    CHECK((Poly{Rat(1), Rat(-1)} - Poly{Rat(1), Rat(-1)}).is_zero());
}

TEST_CASE("polynomial arithmetic basics") {
    Poly p{Rat(0), Rat(3), Rat(1)}; // t^2 + 3t
    CHECK(p.derive() == Poly{Rat(3), Rat(2)});
    CHECK(Poly{Rat(1), Rat(0), Rat(1)}.eval(Rat(2)) == Rat(5)); // t^2+1 at 2
    Poly t2m1{Rat(-1), Rat(0), Rat(1)};
    CHECK(t2m1.divexact(Poly{Rat(-1), Rat(1)}) == Poly{Rat(1), Rat(1)});
    CHECK_THROWS_AS(t2m1.divexact(Poly{Rat(1), Rat(1), Rat(1)}), DomainError);
    CHECK(Poly{Rat(1), Rat(1)}.pow(2) == Poly{Rat(1), Rat(2), Rat(1)});
    CHECK(Poly{Rat(0), Rat(1)}.compose(Poly{Rat(1), Rat(1)}) == Poly{Rat(1), Rat(1)});
}

TEST_CASE("ring laws hold on random polynomial triples") {
    RatSampler rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        Poly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("polynomial gcd and rational-function normalization") {
    Poly a = Poly{Rat(-1), Rat(1)} * Poly{Rat(2), Rat(1)};     // (t-1)(t+2)
    Poly b = Poly{Rat(-1), Rat(1)} * Poly{Rat(0), Rat(0), Rat(3)}; // (t-1) 3t^2
    CHECK(Poly::gcd(a, b) == Poly{Rat(-1), Rat(1)});

    RatFunc f(a, b);
    CHECK(f.den().leading().is_one());      // monic denominator
    CHECK(Poly::gcd(f.num(), f.den()).degree() == 0); // coprime
    CHECK(f == RatFunc(Poly{Rat(2, 3), Rat(1, 3)}, Poly{Rat(0), Rat(0), Rat(1)}));

    CHECK_THROWS_AS(RatFunc(a, Poly()), DomainError);
    CHECK((RatFunc::t() / RatFunc::t()).is_poly());
}

TEST_CASE("ring laws hold on random rational-function triples") {
    RatSampler rng(102);
    for (int trial = 0; trial < 100; ++trial) {
        RatFunc a = random_ratfunc(rng, 2), b = random_ratfunc(rng, 2), c = random_ratfunc(rng, 2);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("series arithmetic and truncation") {
    SeriesQ z = SeriesQ::z(5);
    SeriesQ one = SeriesQ::one(5);
    SeriesQ s = one + z; // 1 + z
    CHECK((s * s).coeff(2) == Rat(1));
    CHECK((s * s).coeff(1) == Rat(2));

    // mixing orders takes the minimum
    CHECK((SeriesQ::one(3) * SeriesQ::one(7)).order() == 3);

    // pow(1+z, 1/2, order 4) = 1 + z/2 - z^2/8 + z^3/16
    SeriesQ r = (SeriesQ::one(4) + SeriesQ::z(4)).pow(Rat(1, 2));
    CHECK(r.coeff(0) == Rat(1));
    CHECK(r.coeff(1) == Rat(1, 2));
    CHECK(r.coeff(2) == Rat(-1, 8));
    CHECK(r.coeff(3) == Rat(1, 16));

    CHECK(SeriesQ(6).exp() == SeriesQ::one(6)); // exp(0) = 1
    CHECK_THROWS_AS(SeriesQ::one(4).exp(), DomainError);
    CHECK_THROWS_AS((SeriesQ::one(4) + SeriesQ::one(4)).pow(Rat(1, 2)), DomainError);
    CHECK_THROWS_AS(SeriesQ(4).inverse(), DomainError);
}

TEST_CASE("series inverse is a two-sided inverse mod z^N") {
    RatSampler rng(103);
    for (int trial = 0; trial < 30; ++trial) {
        SeriesQ s = random_series<Rat>(rng, 7, 0);
        if (s.coeff(0).is_zero()) continue;
        CHECK(s * s.inverse() == SeriesQ::one(7));
    }
    for (int trial = 0; trial < 10; ++trial) {
        SeriesF s = random_series<RatFunc>(rng, 5, 2);
        if (is_zero(s.coeff(0))) continue;
        CHECK(s * s.inverse() == SeriesF::one(5));
    }
}

TEST_CASE("series exp/log-free power laws") {
    // pow(base, p) * pow(base, q) = pow(base, p + q) for random rational p, q
    RatSampler rng(104);
    for (int trial = 0; trial < 40; ++trial) {
        SeriesQ base = SeriesQ::one(6) + SeriesQ::z(6) * random_series<Rat>(rng, 6, 0);
        Rat p = rng.rat(), q = rng.rat();
        CHECK(base.pow(p) * base.pow(q) == base.pow(p + q));
    }
}

TEST_CASE("series ring laws over polynomial coefficients") {
    RatSampler rng(105);
    for (int trial = 0; trial < 30; ++trial) {
        SeriesP a = random_series<Poly>(rng, 5, 3);
        SeriesP b = random_series<Poly>(rng, 5, 3);
        SeriesP c = random_series<Poly>(rng, 5, 3);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("series composition") {
    // exp(z)^2 = exp(2z) via compose
    SeriesQ e = SeriesQ::z(8).exp();
    SeriesQ e2 = e.compose(SeriesQ::z(8).scaled(Rat(2)));
    CHECK(e * e == e2);
    CHECK_THROWS_AS(e.compose(SeriesQ::one(8)), DomainError);
}

TEST_CASE("sqrt squares back") {
    RatSampler rng(106);
    for (int trial = 0; trial < 20; ++trial) {
        SeriesQ base = SeriesQ::one(7) + SeriesQ::z(7) * random_series<Rat>(rng, 7, 0);
        SeriesQ r = base.sqrt();
        CHECK(r * r == base);
    }
}

TEST_CASE("log inverts exp") {
    RatSampler rng(107);
    for (int trial = 0; trial < 20; ++trial) {
        SeriesQ u = SeriesQ::z(7) * random_series<Rat>(rng, 7, 0);
        CHECK(u.exp().log() == u);
        SeriesQ base = SeriesQ::one(7) + SeriesQ::z(7) * random_series<Rat>(rng, 7, 0);
        CHECK(base.log().exp() == base);
    }
    CHECK_THROWS_AS(SeriesQ(5).log(), DomainError);
}
