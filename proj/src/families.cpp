#include "gkp/families.hpp"

#include <sstream>

#include "gkp/errors.hpp"
#include "gkp/factorials.hpp"
#include "gkp/transforms.hpp"

namespace gkp {

namespace {

std::string pos(long n, long k) {
    return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

CheckReport poly_equal(const Poly& lhs, const Poly& rhs, const std::string& what) {
    if (lhs == rhs) return CheckReport::pass();
    return CheckReport::fail(what + ": " + lhs.str("x") + " != " + rhs.str("x"));
}

/// (x - shift)^{n falling/rising, step} as a polynomial in x.
Poly factorial_poly(const Rat& shift, long n, const Rat& step, FactDir dir) {
    Poly x = Poly::t();
    Poly acc{Rat(1)};
    Rat offset = -shift;
    for (long i = 0; i < n; ++i) {
        acc *= x + Poly(offset);
        offset = (dir == FactDir::falling) ? offset - step : offset + step;
    }
    return acc;
}

} // namespace

GkpParams stirling_gkp(const StirlingParams& p) {
    return GkpParams{-p.a, p.b, p.r, Rat(0), Rat(0), Rat(1)};
}

GkpParams eulerian_gkp(const EulerianParams& p) {
    return GkpParams{-p.a, p.b, p.c0, p.a + p.b, -p.b, p.cInf};
}

Triangle stirling_triangle(const StirlingParams& p, long N) {
    return Triangle::from_recurrence(stirling_gkp(p), N);
}

Triangle eulerian_triangle(const EulerianParams& p, long N) {
    return Triangle::from_recurrence(eulerian_gkp(p), N);
}

Rat stirling_rank1(const StirlingParams& p, long n, long k) {
    if (p.b.is_zero())
        throw NotApplicableError(
            "the rank-1 Stirling formula needs b != 0; generate from the recurrence instead");
    if (k < 0 || k > n) return Rat(0);
    Rat acc(0);
    for (long j = 0; j <= k; ++j) {
        Rat term = binomial(k, j) * gen_factorial(p.b * Rat(j) + p.r, n, p.a, FactDir::falling);
        if ((k - j) % 2 != 0) term = -term;
        acc += term;
    }
    return acc / (pow_int(p.b, k) * factorial(k));
}

Rat eulerian_rank1(const EulerianParams& p, long n, long k) {
    if (p.b.is_zero())
        throw NotApplicableError(
            "the rank-1 Eulerian formula needs b != 0; generate from the recurrence instead");
    if (k < 0 || k > n) return Rat(0);
    Rat csum = p.c0 + p.cInf;
    Rat acc(0);
    for (long j = 0; j <= k; ++j) {
        Rat term = binomial(k, j) *
                   gen_factorial(p.b * Rat(n) + csum, k - j, p.b, FactDir::falling) *
                   gen_factorial(csum, j, p.b, FactDir::rising) *
                   gen_factorial(p.b * Rat(j) + p.c0, n, p.a, FactDir::falling);
        if ((k - j) % 2 != 0) term = -term;
        acc += term;
    }
    return acc / (pow_int(p.b, k) * factorial(k));
}

GkpParams family_gkp(const NamedFamily& f) {
    const Rat& b = f.b;
    Rat h = b / Rat(2);
    switch (f.kind) {
    case FamilyKind::narayana_s:  return {h, b, f.c0, -b, -b, f.cInf};
    case FamilyKind::narayana_rs: return {Rat(-2) * b, b, f.c0, Rat(3) * h, -b, f.cInf};
    case FamilyKind::narayana_e:  return {h, b, f.c0, Rat(3) * h, -b, f.cInf};
    case FamilyKind::sectan_s:    return {-h, b, f.c0, b, -b, f.cInf};
    case FamilyKind::sectan_rs:   return {Rat(0), b, f.c0, h, -b, f.cInf};
    case FamilyKind::sectan_e:    return {-h, b, f.c0, h, -b, f.cInf};
    }
    throw DomainError("unknown family kind");
}

Triangle family_triangle(const NamedFamily& f, long N) {
    return Triangle::from_recurrence(family_gkp(f), N);
}

const char* family_name(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::narayana_s:  return "narayana-s";
    case FamilyKind::narayana_rs: return "narayana-rs";
    case FamilyKind::narayana_e:  return "narayana-e";
    case FamilyKind::sectan_s:    return "sectan-s";
    case FamilyKind::sectan_rs:   return "sectan-rs";
    case FamilyKind::sectan_e:    return "sectan-e";
    }
    return "?";
}

FamilyKind family_by_name(const std::string& name) {
    for (FamilyKind k : {FamilyKind::narayana_s, FamilyKind::narayana_rs, FamilyKind::narayana_e,
                         FamilyKind::sectan_s, FamilyKind::sectan_rs, FamilyKind::sectan_e})
        if (name == family_name(k)) return k;
    throw DomainError("unknown family '" + name +
                      "' (expected narayana-s|narayana-rs|narayana-e|sectan-s|sectan-rs|sectan-e)");
}

// ---------------------------------------------------------------------------
// Connection-coefficient identities
// ---------------------------------------------------------------------------

CheckReport connection_check_stirling(const StirlingParams& p, long n) {
    Triangle tri = stirling_triangle(p, n);
    Poly lhs = factorial_poly(Rat(0), n, p.a, FactDir::falling);
    Poly rhs;
    for (long k = 0; k <= n; ++k)
        rhs += factorial_poly(p.r, k, p.b, FactDir::falling).scaled(tri.entry(n, k));
    return poly_equal(lhs, rhs, "Stirling connection identity at n=" + std::to_string(n));
}

CheckReport connection_check_worpitzky_general(const EulerianParams& p, long n) {
    Rat weight = gen_factorial(p.c0 + p.cInf, n, p.b, FactDir::rising);
    if (weight.is_zero())
        return CheckReport::skip("(c0+cInf)^{n rising, b} vanishes; the bifactorial basis "
                                 "interpretation needs it nonzero");
    Triangle tri = eulerian_triangle(p, n);
    Poly lhs = factorial_poly(Rat(0), n, p.a, FactDir::falling).scaled(weight);
    Poly rhs;
    for (long k = 0; k <= n; ++k)
        rhs += (factorial_poly(p.c0, k, p.b, FactDir::falling) *
                factorial_poly(-p.cInf, n - k, p.b, FactDir::rising))
                   .scaled(tri.entry(n, k));
    return poly_equal(lhs, rhs, "generalized Worpitzky identity at n=" + std::to_string(n));
}

CheckReport connection_check_worpitzky_single(const Rat& a, const Rat& b, const Rat& c0, long n) {
    EulerianParams p{a, b, c0, b - c0};
    Triangle tri = eulerian_triangle(p, n);
    Poly lhs = factorial_poly(Rat(0), n, a, FactDir::falling)
                   .scaled(factorial(n) * pow_int(b, n));
    Poly rhs;
    for (long k = 0; k <= n; ++k)
        rhs += factorial_poly(c0 - b * Rat(n - k), n, b, FactDir::falling)
                   .scaled(tri.entry(n, k));
    return poly_equal(lhs, rhs,
                      "single-progression Worpitzky identity at n=" + std::to_string(n));
}

CheckReport connection_check_symmetric(const Rat& b, const Rat& cInf, long n) {
    EulerianParams p{Rat(-1), b, b - cInf, cInf};
    Triangle tri = eulerian_triangle(p, n);
    // (b x + cInf)^{n falling} expanded in x
    Poly bx_c = Poly{cInf, b};
    Poly lhs{Rat(1)};
    for (long i = 0; i < n; ++i) lhs *= bx_c - Poly(Rat(i));
    Poly rhs;
    Rat nfac_inv = factorial(n).reciprocal();
    for (long k = 0; k <= n; ++k)
        rhs += factorial_poly(Rat(-k), n, Rat(1), FactDir::falling)
                   .scaled(tri.entry(n, k) * nfac_inv);
    return poly_equal(lhs, rhs, "symmetric factorial-basis identity at n=" + std::to_string(n));
}

CheckReport worpitzky_reindex_check(const Rat& a, const Rat& b, const Rat& c0, long n) {
    Rat cInf = b - c0;
    Triangle tri = eulerian_triangle(EulerianParams{a, b, c0, cInf}, n);
    // falling-factorial form, termwise, against the rising-factorial form
    for (long k = 0; k <= n; ++k) {
        Poly fall = factorial_poly(c0 - b * Rat(n - k), n, b, FactDir::falling);
        Poly rise = factorial_poly(-cInf + b * Rat(k), n, b, FactDir::rising);
        if (fall != rise)
            return CheckReport::fail("re-indexed expansion functions differ at k=" +
                                     std::to_string(k));
    }
    // and the two stated sums agree as polynomials
    Poly sum_fall, sum_rise;
    for (long k = 0; k <= n; ++k) {
        sum_fall += factorial_poly(c0 - b * Rat(n - k), n, b, FactDir::falling)
                        .scaled(tri.entry(n, k));
        sum_rise += factorial_poly(-cInf + b * Rat(k), n, b, FactDir::rising)
                        .scaled(tri.entry(n, k));
    }
    return poly_equal(sum_fall, sum_rise, "re-indexed Worpitzky sums at n=" + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Transform pairs
// ---------------------------------------------------------------------------

CheckReport transform_pair_ubt(const EulerianParams& p, long n) {
    Triangle e = eulerian_triangle(p, n);
    Triangle s = stirling_triangle(StirlingParams{-p.a, p.b, p.cInf}, n);
    Rat csum = p.c0 + p.cInf;
    auto weighted_s = [&](long j) {
        return gen_factorial(csum, n - j, p.b, FactDir::rising) * s.entry(n, n - j);
    };
    for (long k = 0; k <= n; ++k) {
        Rat fwd(0);
        for (long j = k; j <= n; ++j) {
            Rat term = binomial(j, k) * weighted_s(j);
            if ((j - k) % 2 != 0) term = -term;
            fwd += term;
        }
        if (fwd != e.entry(n, k))
            return CheckReport::fail("upper pair, forward direction fails at " + pos(n, k));
        Rat inv(0);
        for (long j = k; j <= n; ++j) inv += binomial(j, k) * e.entry(n, j);
        if (inv != weighted_s(k))
            return CheckReport::fail("upper pair, inverse direction fails at " + pos(n, k));
    }
    return CheckReport::pass();
}

CheckReport transform_pair_rephrased(const EulerianParams& p, long n) {
    Triangle e = eulerian_triangle(p, n);
    Rat csum = p.c0 + p.cInf;
    auto u = [&](long j) {
        return gen_factorial(csum, j, p.b, FactDir::rising) *
               gen_factorial(p.b * Rat(j) + p.c0, n, p.a, FactDir::falling);
    };
    auto v = [&](long j) { return pow_int(p.b, j) * factorial(j) * e.entry(n, j); };
    Rat A = p.b * Rat(n) + csum;
    for (long k = 0; k <= n; ++k) {
        Rat fwd(0), inv(0);
        for (long j = 0; j <= k; ++j) {
            Rat f = binomial(k, j) * gen_factorial(A, k - j, p.b, FactDir::falling) * u(j);
            if ((k - j) % 2 != 0) f = -f;
            fwd += f;
            inv += binomial(k, j) * gen_factorial(A, k - j, p.b, FactDir::rising) * v(j);
        }
        if (fwd != v(k))
            return CheckReport::fail("lower pair (Eulerian), forward fails at " + pos(n, k));
        if (inv != u(k))
            return CheckReport::fail("lower pair (Eulerian), inverse fails at " + pos(n, k));
    }
    return CheckReport::pass();
}

CheckReport transform_pair_lbt(const StirlingParams& p, long n) {
    Triangle s = stirling_triangle(p, n);
    auto u = [&](long j) { return gen_factorial(p.b * Rat(j) + p.r, n, p.a, FactDir::falling); };
    auto v = [&](long j) { return pow_int(p.b, j) * factorial(j) * s.entry(n, j); };
    for (long k = 0; k <= n; ++k) {
        Rat fwd(0), inv(0);
        for (long j = 0; j <= k; ++j) {
            Rat f = binomial(k, j) * u(j);
            if ((k - j) % 2 != 0) f = -f;
            fwd += f;
            inv += binomial(k, j) * v(j);
        }
        if (fwd != v(k))
            return CheckReport::fail("lower pair (Stirling), forward fails at " + pos(n, k));
        if (inv != u(k))
            return CheckReport::fail("lower pair (Stirling), inverse fails at " + pos(n, k));
    }
    return CheckReport::pass();
}

CheckReport ubt_closure_check(const StirlingParams& p, const Rat& delta, long n) {
    Triangle base = stirling_triangle(p, n);
    Triangle flipped = stirling_triangle(StirlingParams{p.a, -p.b, p.r + delta}, n);
    for (long k = 0; k <= n; ++k) {
        Rat lhs = gen_factorial(delta, k, p.b, FactDir::falling) * flipped.entry(n, k);
        Rat rhs(0);
        for (long j = k; j <= n; ++j)
            rhs += binomial(j, k) * gen_factorial(delta, j, p.b, FactDir::falling) *
                   base.entry(n, j);
        if (lhs != rhs)
            return CheckReport::fail("Stirling UBT-closure fails at " + pos(n, k));
    }
    return CheckReport::pass();
}

// ---------------------------------------------------------------------------
// Contiguity relations
// ---------------------------------------------------------------------------

CheckReport contiguity_check_s(int relation, const StirlingParams& p, long n, long k) {
    const Rat &a = p.a, &b = p.b, &r = p.r;
    long depth = n + 1;
    auto S = [&](const StirlingParams& q, long nn, long kk) -> Rat {
        if (nn < 0 || kk < 0 || kk > nn) return Rat(0);
        return stirling_triangle(q, depth).entry(nn, kk);
    };
    Rat lhs, rhs;
    switch (relation) {
    case 1:
        if (k < 0 || k > n) throw DomainError("relation 1 needs 0 <= k <= n");
        lhs = S({a, b, r + a}, n, k);
        rhs = S(p, n, k) + Rat(n) * a * S(p, n - 1, k);
        break;
    case 2:
        if (k < -1 || k > n) throw DomainError("relation 2 needs -1 <= k <= n");
        lhs = S({a, b, r + b}, n, k);
        rhs = S(p, n, k) + b * Rat(k + 1) * S(p, n, k + 1);
        break;
    case 3:
        if (k < 0 || k > n) throw DomainError("relation 3 needs 0 <= k <= n");
        lhs = S({-a, b, r}, n, k);
        rhs = S({a, b, r + a * Rat(n - 1)}, n, k);
        break;
    case 4:
        if (k < 0 || k > n) throw DomainError("relation 4 needs 0 <= k <= n");
        lhs = S({a, -b, r}, n, k);
        rhs = S({a, b, r - b * Rat(k)}, n, k);
        break;
    case 5:
        if (k < -1 || k > n) throw DomainError("relation 5 needs -1 <= k <= n");
        lhs = S({a, b, b - a}, n, k);
        rhs = S({a, b, Rat(0)}, n + 1, k + 1);
        break;
    default:
        throw DomainError("Stirling contiguity relation must be 1..5");
    }
    if (lhs == rhs) return CheckReport::pass();
    return CheckReport::fail("Stirling contiguity " + std::to_string(relation) + " fails at " +
                             pos(n, k) + ": " + lhs.str() + " != " + rhs.str());
}

CheckReport contiguity_check_e(int relation, const EulerianParams& p, long n, long k) {
    const Rat &a = p.a, &b = p.b, &c0 = p.c0, &cInf = p.cInf;
    long depth = n + 2;
    auto E = [&](const EulerianParams& q, long nn, long kk) -> Rat {
        if (nn < 0 || kk < 0 || kk > nn) return Rat(0);
        return eulerian_triangle(q, depth).entry(nn, kk);
    };
    Rat lhs, rhs;
    switch (relation) {
    case 1:
        if (k < 0 || k > n) throw DomainError("relation 1 needs 0 <= k <= n");
        lhs = E({a, b, c0 + a, cInf - a}, n, k);
        rhs = E(p, n, k) + Rat(n) * a * (E(p, n - 1, k) - E(p, n - 1, k - 1));
        break;
    case 2: {
        if (k < -1 || k > n) throw DomainError("relation 2 needs -1 <= k <= n");
        lhs = E({a, b, c0 + b, -c0}, n, k);
        Rat extra = gen_factorial(c0, n, a, FactDir::falling) * binomial(n + 1, k + 1);
        if (k % 2 != 0) extra = -extra;
        rhs = E({a, b, c0, b - c0}, n, k + 1) + extra;
        break;
    }
    case 3:
        if (k < -1 || k > n) throw DomainError("relation 3 needs -1 <= k <= n");
        lhs = cInf * E({a, b, b - a, cInf + a}, n, k);
        rhs = E({a, b, Rat(0), cInf}, n + 1, k + 1);
        break;
    case 4:
        if (k < 0 || k > n) throw DomainError("relation 4 needs 0 <= k <= n");
        lhs = c0 * E({a, b, c0 - a, a + b}, n, k);
        rhs = E({a, b, c0, Rat(0)}, n + 1, k);
        break;
    case 5: {
        if (k < -1 || k > n) throw DomainError("relation 5 needs -1 <= k <= n");
        const Rat& c = c0;
        EulerianParams shifted{a, b, c - a, a - c};
        lhs = c * (E(shifted, n, k + 1) - E(shifted, n, k));
        rhs = E({a, b, c, -c}, n + 1, k + 1);
        break;
    }
    default:
        throw DomainError("Eulerian contiguity relation must be 1..5");
    }
    if (lhs == rhs) return CheckReport::pass();
    return CheckReport::fail("Eulerian contiguity " + std::to_string(relation) + " fails at " +
                             pos(n, k) + ": " + lhs.str() + " != " + rhs.str());
}

// ---------------------------------------------------------------------------
// Riordan-array algebra
// ---------------------------------------------------------------------------

RiordanSpec::RiordanSpec(SeriesQ d_, SeriesQ h_) : d(std::move(d_)), h(std::move(h_)) {
    if (d.order() < 1 || d.coeff(0).is_zero())
        throw DomainError("Riordan d-series needs a nonzero constant term");
    if (h.order() < 2 || !h.coeff(0).is_zero() || h.coeff(1).is_zero())
        throw DomainError("Riordan h-series must have order exactly 1");
}

std::vector<std::vector<Rat>> riordan_matrix(const RiordanSpec& spec, long N) {
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(N) + 1);
    SeriesQ col = spec.d.truncated(N + 1);
    for (long k = 0; k <= N; ++k) {
        for (long n = k; n <= N; ++n) {
            rows[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1, Rat(0));
            rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                factorial(n) / factorial(k) * col.coeff(n);
        }
        col = col * spec.h.truncated(N + 1);
    }
    return rows;
}

RiordanSpec stirling_riordan_spec(const StirlingParams& p, long N) {
    long order = N + 1;
    SeriesQ z = SeriesQ::z(order);
    SeriesQ d, h;
    if (p.a.is_zero()) {
        d = z.scaled(p.r).exp();
        h = p.b.is_zero() ? z : (z.scaled(p.b).exp() - SeriesQ::one(order)).scaled(p.b.reciprocal());
    } else {
        SeriesQ base = SeriesQ::one(order) + z.scaled(p.a);
        d = base.pow(p.r / p.a);
        h = p.b.is_zero() ? base.log().scaled(p.a.reciprocal()) // b -> 0 limit of the bracket
                          : (base.pow(p.b / p.a) - SeriesQ::one(order)).scaled(p.b.reciprocal());
    }
    return RiordanSpec(std::move(d), std::move(h));
}

CheckReport riordan_product_check(const Rat& a, const Rat& b, const Rat& c,
                                  const Rat& r1, const Rat& r2, long N) {
    Triangle left = stirling_triangle({a, b, r1}, N);
    Triangle mid = stirling_triangle({b, c, r2}, N);
    Triangle prod = stirling_triangle({a, c, r1 + r2}, N);
    for (long n = 0; n <= N; ++n)
        for (long k = 0; k <= n; ++k) {
            Rat acc(0);
            for (long j = k; j <= n; ++j) acc += left.entry(n, j) * mid.entry(j, k);
            if (acc != prod.entry(n, k))
                return CheckReport::fail("Stirling matrix product fails at " + pos(n, k));
        }
    return CheckReport::pass();
}

CheckReport riordan_inverse_check(const Rat& a, const Rat& b, const Rat& r, long N) {
    Triangle fwd = stirling_triangle({a, b, r}, N);
    Triangle inv = stirling_triangle({b, a, -r}, N);
    for (long n = 0; n <= N; ++n)
        for (long k = 0; k <= n; ++k) {
            Rat acc(0);
            for (long j = k; j <= n; ++j) acc += fwd.entry(n, j) * inv.entry(j, k);
            if (acc != (n == k ? Rat(1) : Rat(0)))
                return CheckReport::fail("Stirling matrix inverse fails at " + pos(n, k));
        }
    return CheckReport::pass();
}

CheckReport riordan_convolution_check(const StirlingParams& p1, const Rat& r2,
                                      long n, long k1, long k2) {
    long k = k1 + k2;
    if (k > n) throw DomainError("convolution needs k1 + k2 <= n");
    Triangle t1 = stirling_triangle(p1, n);
    Triangle t2 = stirling_triangle({p1.a, p1.b, r2}, n);
    Triangle sum = stirling_triangle({p1.a, p1.b, p1.r + r2}, n);
    Rat lhs = factorial(k) / (factorial(k1) * factorial(k2)) * sum.entry(n, k);
    Rat rhs(0);
    for (long n1 = k1; n1 <= n - k2; ++n1) {
        long n2 = n - n1;
        rhs += factorial(n) / (factorial(n1) * factorial(n2)) * t1.entry(n1, k1) *
               t2.entry(n2, k2);
    }
    if (lhs == rhs) return CheckReport::pass();
    return CheckReport::fail("Stirling convolution fails at n=" + std::to_string(n) +
                             ", (k1,k2)=(" + std::to_string(k1) + "," + std::to_string(k2) + ")");
}

CheckReport riordan_asym_convolution_check(const StirlingParams& p1, const Rat& r2,
                                           long n, long k, long k2) {
    long n1 = n + k2;
    Triangle t1 = stirling_triangle(p1, n1);
    Triangle t2 = stirling_triangle({p1.b, p1.a, r2}, n1); // interchanged (a, b)
    Triangle sum = stirling_triangle({p1.a, p1.b, p1.r + r2}, n);
    Rat lhs = factorial(n1) / (factorial(n) * factorial(k2)) * sum.entry(n, k);
    Rat rhs(0);
    for (long n2 = k2; k + n2 <= n1; ++n2) {
        long kk1 = k + n2;
        rhs += factorial(kk1) / (factorial(k) * factorial(n2)) * t1.entry(n1, kk1) *
               t2.entry(n2, k2);
    }
    if (lhs == rhs) return CheckReport::pass();
    return CheckReport::fail("asymmetric Stirling convolution fails at (n,k,k2)=(" +
                             std::to_string(n) + "," + std::to_string(k) + "," +
                             std::to_string(k2) + ")");
}

// ---------------------------------------------------------------------------
// Connection matrices
// ---------------------------------------------------------------------------

ConnectionMatrix connection_matrix(long n, const Rat& b) {
    if (n < 0) throw DomainError("connection matrix needs n >= 0");
    ConnectionMatrix m{n, b, {}};
    m.entries.assign(static_cast<std::size_t>(n) + 1,
                     std::vector<Rat>(static_cast<std::size_t>(n) + 1, Rat(0)));
    Rat nfac_inv = factorial(n).reciprocal();
    for (long k = 0; k <= n; ++k) {
        EulerianParams p{Rat(-1), b, b - Rat(k), Rat(k)};
        if (b.is_zero()) {
            Triangle tri = eulerian_triangle(p, n);
            for (long j = 0; j <= n; ++j)
                m.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                    tri.entry(n, j) * nfac_inv;
        } else {
            for (long j = 0; j <= n; ++j)
                m.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                    eulerian_rank1(p, n, j) * nfac_inv;
        }
    }
    // defining identity: (b x + k)^{n falling} = sum_j A(k,j) (x + j)^{n falling}
    for (long k = 0; k <= n; ++k) {
        Poly lhs{Rat(1)};
        Poly bx_k = Poly{Rat(k), b};
        for (long i = 0; i < n; ++i) lhs *= bx_k - Poly(Rat(i));
        Poly rhs;
        for (long j = 0; j <= n; ++j)
            rhs += factorial_poly(Rat(-j), n, Rat(1), FactDir::falling)
                       .scaled(m.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
        if (lhs != rhs)
            throw InternalCheckError("connection matrix row k=" + std::to_string(k) +
                                     " fails its defining polynomial identity");
    }
    if (b.is_one()) {
        for (long k = 0; k <= n; ++k)
            for (long j = 0; j <= n; ++j)
                if (m.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] !=
                    (k == j ? Rat(1) : Rat(0)))
                    throw InternalCheckError("connection matrix at b = 1 is not the identity");
    }
    return m;
}

CheckReport connection_matrix_eigencheck(long n, const Rat& b) {
    ConnectionMatrix m = connection_matrix(n, b);
    // characteristic polynomial det(x I - A) by cofactor expansion over Poly
    long size = n + 1;
    std::vector<std::vector<Poly>> mat(static_cast<std::size_t>(size),
                                       std::vector<Poly>(static_cast<std::size_t>(size)));
    for (long i = 0; i < size; ++i)
        for (long j = 0; j < size; ++j) {
            Poly v(-m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            if (i == j) v += Poly::t();
            mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        }
    auto det = [](auto&& self, const std::vector<std::vector<Poly>>& a) -> Poly {
        long dim = static_cast<long>(a.size());
        if (dim == 1) return a[0][0];
        Poly acc;
        for (long c = 0; c < dim; ++c) {
            if (a[0][static_cast<std::size_t>(c)].is_zero()) continue;
            std::vector<std::vector<Poly>> minor;
            for (long i = 1; i < dim; ++i) {
                std::vector<Poly> row;
                for (long j = 0; j < dim; ++j)
                    if (j != c) row.push_back(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                minor.push_back(std::move(row));
            }
            Poly term = a[0][static_cast<std::size_t>(c)] * self(self, minor);
            acc += (c % 2 == 0) ? term : -term;
        }
        return acc;
    };
    Poly charpoly = det(det, mat);
    Poly expect{Rat(1)};
    Rat power(1);
    for (long j = 0; j <= n; ++j) {
        expect *= Poly{-power, Rat(1)};
        power *= b;
    }
    if (charpoly == expect) return CheckReport::pass();
    return CheckReport::fail("characteristic polynomial " + charpoly.str("x") +
                             " differs from the geometric-eigenvalue product " + expect.str("x"));
}

CheckReport connection_matrix_diff_check(long n, const Rat& b, long r_max) {
    ConnectionMatrix m = connection_matrix(n, b);
    for (long r = 0; r <= r_max; ++r) {
        for (long k = 0; k <= n; ++k) {
            // Delta_x^r [(b x + k)^{n falling}] via binomial expansion of the
            // forward difference, as a polynomial in x
            Poly lhs;
            for (long i = 0; i <= r; ++i) {
                Poly shifted{Rat(1)};
                Poly bx = Poly{b * Rat(i) + Rat(k), b};
                for (long q = 0; q < n; ++q) shifted *= bx - Poly(Rat(q));
                Rat w = binomial(r, i);
                if ((r - i) % 2 != 0) w = -w;
                lhs += shifted.scaled(w);
            }
            Poly rhs;
            Rat nr = falling(Rat(n), r);
            for (long j = 0; j <= n; ++j)
                rhs += factorial_poly(Rat(-j), n - r, Rat(1), FactDir::falling)
                           .scaled(m.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] * nr);
            if (lhs != rhs)
                return CheckReport::fail("difference-extension fails at r=" + std::to_string(r) +
                                         ", k=" + std::to_string(k));
        }
    }
    return CheckReport::pass();
}

// ---------------------------------------------------------------------------
// Jacobi identities
// ---------------------------------------------------------------------------

Poly jacobi_poly(long n, const Rat& A, const Rat& B) {
    if (n < 0) throw DomainError("Jacobi polynomial of negative degree");
    Poly tp1 = Poly{Rat(1, 2), Rat(1, 2)};  // (t+1)/2
    Poly tm1 = Poly{Rat(-1, 2), Rat(1, 2)}; // (t-1)/2
    Poly acc;
    for (long k = 0; k <= n; ++k)
        acc += (tm1.pow(k) * tp1.pow(n - k))
                   .scaled(binomial(Rat(n) + A, n - k) * binomial(Rat(n) + B, k));
    return acc;
}

CheckReport jacobi_recurrence_check(long n_max, const Rat& A, const Rat& B) {
    // standard three-term recurrence
    //   2n (n+A+B) (2n+A+B-2) P_n = (2n+A+B-1) [(2n+A+B)(2n+A+B-2) t + A^2-B^2] P_{n-1}
    //                               - 2 (n+A-1)(n+B-1)(2n+A+B) P_{n-2}
    for (long n = 2; n <= n_max; ++n) {
        Rat s = Rat(2 * n) + A + B;
        Rat lead = Rat(2 * n) * (Rat(n) + A + B) * (s - Rat(2));
        if (lead.is_zero())
            return CheckReport::skip("degenerate leading factor at n=" + std::to_string(n));
        Poly lhs = jacobi_poly(n, A, B).scaled(lead);
        Poly mid = Poly{A * A - B * B, s * (s - Rat(2))}.scaled(s - Rat(1));
        Poly rhs = mid * jacobi_poly(n - 1, A, B) -
                   jacobi_poly(n - 2, A, B)
                       .scaled(Rat(2) * (Rat(n) + A - Rat(1)) * (Rat(n) + B - Rat(1)) * s);
        if (lhs != rhs)
            return CheckReport::fail("Jacobi three-term recurrence fails at n=" +
                                     std::to_string(n));
    }
    return CheckReport::pass();
}

CheckReport jacobi_identity_check(const Rat& c0, long n) {
    Poly minus_t{Rat(0), Rat(-1)};
    // rows of E(-2,1; c0+1, -1) against n! P_n^{(c0+n, -c0-n)}(-t)
    Triangle inner = eulerian_triangle({Rat(-2), Rat(1), c0 + Rat(1), Rat(-1)}, n);
    for (long m = 0; m <= n; ++m) {
        Poly expect = jacobi_poly(m, c0 + Rat(m), -c0 - Rat(m)).compose(minus_t)
                          .scaled(factorial(m));
        if (inner.row_polynomial(m) != expect)
            return CheckReport::fail("Jacobi row identity fails at row " + std::to_string(m));
    }
    // rows of E(-2,1; c0, 0) one row up against c0 n! P_n^{(c0+n+1, -c0-n-1)}(-t)
    Triangle outer = eulerian_triangle({Rat(-2), Rat(1), c0, Rat(0)}, n + 1);
    for (long m = 0; m + 1 <= n + 1; ++m) {
        Poly expect = jacobi_poly(m, c0 + Rat(m + 1), -c0 - Rat(m + 1)).compose(minus_t)
                          .scaled(c0 * factorial(m));
        if (outer.row_polynomial(m + 1) != expect)
            return CheckReport::fail("shifted Jacobi row identity fails at row " +
                                     std::to_string(m + 1));
    }
    // coherence: the first triangle is the right-trim of the second when c0 != 0
    if (!c0.is_zero()) {
        Triangle trimmed = trim(outer, TrimSide::right);
        Triangle direct = eulerian_triangle({Rat(-2), Rat(1), c0 + Rat(2), Rat(-1)}, n);
        if (!(trimmed == direct))
            return CheckReport::fail("right-trim coherence of the Jacobi pair fails");
    }
    return CheckReport::pass();
}

// ---------------------------------------------------------------------------
// Conjecture
// ---------------------------------------------------------------------------

ConjectureReport conjecture_check(long p, int zeta, const Rat& c, long n, long k) {
    if (zeta != 0 && zeta != 1) throw DomainError("zeta must be 0 or 1");
    if (p < 0) throw DomainError("p must be a natural number");
    Rat m = Rat(2 * p + zeta);
    Rat lhs = eulerian_triangle({Rat(-1), Rat(2), c + m, m}, n).entry(n, k);

    Rat csum_num = gen_factorial(c + m, n, Rat(1), FactDir::rising);
    Rat csum_den = gen_factorial(c + m + Rat(zeta), p, Rat(2), FactDir::rising);
    Rat acc(0);
    for (long l = 0; l <= p; ++l) {
        long r = 2 * p + zeta - 2 * l;
        Rat bess_small = stirling_bessel2(Rat(0), 2 * p + zeta, 2 * p + zeta - l);
        Rat bess_big = stirling_bessel2(Rat(r), n, n - k);
        Rat weight = gen_factorial(c + Rat(1), p, Rat(2), FactDir::rising) /
                     gen_factorial(c + Rat(1), k + l, Rat(2), FactDir::rising);
        acc += weight * bess_small * bess_big;
    }
    Rat rhs = csum_num / csum_den * acc;
    if (lhs == rhs) return {true, ""};
    std::ostringstream os;
    os << "counterexample at p=" << p << ", zeta=" << zeta << ", c=" << c.str() << ", (n,k)=("
       << n << "," << k << "): recurrence gives " << lhs.str() << ", the Bessel sum gives "
       << rhs.str();
    return {false, os.str()};
}

// ---------------------------------------------------------------------------
// Assorted identities
// ---------------------------------------------------------------------------

CheckReport eulerian_reflection_check(const EulerianParams& p, long n) {
    Triangle lhs = eulerian_triangle(p, n);
    Triangle rhs = eulerian_triangle({-p.a, p.b, p.cInf, p.c0}, n);
    for (long k = 0; k <= n; ++k)
        if (lhs.entry(n, n - k) != rhs.entry(n, k))
            return CheckReport::fail("Eulerian reflection identity fails at " + pos(n, k));
    return CheckReport::pass();
}

CheckReport stirling_homogeneity_check(const StirlingParams& p, const Rat& lambda, long n) {
    Triangle base = stirling_triangle(p, n);
    Triangle scaled = stirling_triangle({lambda * p.a, lambda * p.b, lambda * p.r}, n);
    for (long nn = 0; nn <= n; ++nn)
        for (long k = 0; k <= nn; ++k)
            if (scaled.entry(nn, k) != pow_int(lambda, nn - k) * base.entry(nn, k))
                return CheckReport::fail("Stirling homogeneity fails at " + pos(nn, k));
    return CheckReport::pass();
}

CheckReport eulerian_homogeneity_check(const EulerianParams& p, const Rat& lambda, long n) {
    Triangle base = eulerian_triangle(p, n);
    Triangle scaled = eulerian_triangle(
        {lambda * p.a, lambda * p.b, lambda * p.c0, lambda * p.cInf}, n);
    for (long nn = 0; nn <= n; ++nn)
        for (long k = 0; k <= nn; ++k)
            if (scaled.entry(nn, k) != pow_int(lambda, nn) * base.entry(nn, k))
                return CheckReport::fail("Eulerian homogeneity fails at " + pos(nn, k));
    return CheckReport::pass();
}

CheckReport family_homogeneity_check(const NamedFamily& f, const Rat& lambda, long n) {
    Triangle base = family_triangle(f, n);
    Triangle scaled = family_triangle(
        {f.kind, lambda * f.b, lambda * f.c0, lambda * f.cInf}, n);
    for (long nn = 0; nn <= n; ++nn)
        for (long k = 0; k <= nn; ++k)
            if (scaled.entry(nn, k) != pow_int(lambda, nn) * base.entry(nn, k))
                return CheckReport::fail(std::string("homogeneity of ") + family_name(f.kind) +
                                         " fails at " + pos(nn, k));
    return CheckReport::pass();
}

CheckReport bessel_cross_identity_check(int r, long n_max) {
    if (r != 0 && r != 1) throw DomainError("the cross identity is stated for r in {0, 1}");
    Triangle first_kind = stirling_triangle({Rat(-2), Rat(-1), Rat(r)}, n_max + 1);
    Triangle second_kind = stirling_triangle({Rat(1), Rat(2), Rat(r)}, 2 * n_max);
    for (long n = 0; n <= n_max; ++n)
        for (long k = 0; k <= n; ++k)
            if (first_kind.entry(n + 1, k + 1) != second_kind.entry(2 * n - k, n))
                return CheckReport::fail("Bessel cross identity fails at " + pos(n, k));
    return CheckReport::pass();
}

CheckReport bessel_support_check(long r, long n_max) {
    Triangle tri = stirling_triangle({Rat(1), Rat(2), Rat(r)}, n_max);
    for (long n = 0; n <= n_max; ++n)
        for (long k = 0; k <= n; ++k) {
            bool expect_nonzero = 2 * (n - k) <= n + r;
            if (tri.entry(n, k).is_zero() == expect_nonzero)
                return CheckReport::fail("support of the second-kind Bessel triangle differs "
                                         "from the stated window at " + pos(n, k));
        }
    return CheckReport::pass();
}

} // namespace gkp
