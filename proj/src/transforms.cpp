#include "gkp/transforms.hpp"

#include <array>

#include "gkp/errors.hpp"
#include "gkp/factorials.hpp"

namespace gkp {

namespace {

void require_beta_antisymmetric(const GkpParams& p, const char* what) {
    if (p.beta.is_zero() || p.betaP != -p.beta)
        throw NotApplicableError(std::string(what) +
                                 " requires the normalization beta' = -beta != 0; parameters "
                                 "are " + p.str() + " (rescale with scale_params first)");
}

std::array<S3Elem, 6> make_elements() {
    Poly t = Poly::t();
    Poly one{Rat(1)};
    auto rf = [](const Poly& n, const Poly& d) { return RatFunc(n, d); };
    std::array<S3Elem, 6> e;
    e[0] = {S3Op::identity, {0, 1, 2}, rf(t, one), rf(one, one), "id", "(0)(1)(inf)"};
    e[1] = {S3Op::rt, {2, 1, 0}, rf(one, t), rf(t, one), "rt", "(0 inf)(1)"};
    e[2] = {S3Op::ubt, {1, 0, 2}, rf(one - t, one), rf(-one, one), "ubt", "(0 1)(inf)"};
    e[3] = {S3Op::rt_ubt_rt, {0, 2, 1}, rf(-t, one - t), rf(one - t, one),
            "rt-ubt-rt", "(1 inf)(0)"};
    e[4] = {S3Op::ubt_rt, {2, 0, 1}, rf(t - one, t), rf(-t, one), "ubt-rt", "(0 inf 1)"};
    e[5] = {S3Op::rt_ubt, {1, 2, 0}, rf(one, one - t), rf(t - one, one),
            "rt-ubt", "(0 1 inf)"};
    return e;
}

const std::array<S3Elem, 6>& elements() {
    static const std::array<S3Elem, 6> e = make_elements();
    return e;
}

} // namespace

const S3Elem& s3_element(S3Op op) {
    for (const S3Elem& e : elements())
        if (e.op == op) return e;
    throw DomainError("unknown transformation element");
}

const S3Elem& s3_element_by_name(const std::string& name) {
    for (const S3Elem& e : elements())
        if (e.name == name) return e;
    throw DomainError("unknown transformation element '" + name +
                      "' (expected id, rt, ubt, rt-ubt-rt, ubt-rt or rt-ubt)");
}

const S3Elem& s3_compose(const S3Elem& first, const S3Elem& second) {
    std::array<int, 3> perm{};
    for (int i = 0; i < 3; ++i) perm[i] = first.perm[second.perm[i]];
    for (const S3Elem& e : elements())
        if (e.perm == perm) return e;
    throw InternalCheckError("composition left the six-element group");
}

const S3Elem& s3_inverse(const S3Elem& e) {
    std::array<int, 3> perm{};
    for (int i = 0; i < 3; ++i) perm[e.perm[i]] = i;
    for (const S3Elem& x : elements())
        if (x.perm == perm) return x;
    throw InternalCheckError("inverse left the six-element group");
}

GkpParams s3_transform_params(const S3Elem& e, const GkpParams& p) {
    require_beta_antisymmetric(p, "parameter transform");
    const Rat &a = p.alpha, &b = p.beta, &g = p.gamma, &aP = p.alphaP, &gP = p.gammaP;
    switch (e.op) {
    case S3Op::identity:  return p;
    case S3Op::rt:        return {aP - b, b, gP, a + b, -b, g};
    case S3Op::ubt:       return {-a - aP, b, -g - gP, aP, -b, gP};
    case S3Op::rt_ubt_rt: return {a, b, g, b - a - aP, -b, -g - gP};
    case S3Op::ubt_rt:    return {aP - b, b, gP, b - a - aP, -b, -g - gP};
    case S3Op::rt_ubt:    return {-a - aP, b, -g - gP, a + b, -b, g};
    }
    throw DomainError("unknown transformation element");
}

Triangle s3_transform_rows(const S3Elem& e, const Triangle& tri, bool negate_s) {
    require_beta_antisymmetric(tri.params(), "row transform");
    long N = tri.max_n();
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) {
        std::vector<Rat> row(static_cast<std::size_t>(n) + 1, Rat(0));
        for (long k = 0; k <= n; ++k) {
            Rat v(0);
            switch (e.op) {
            case S3Op::identity:
                v = tri.entry(n, k);
                break;
            case S3Op::rt:
                v = tri.entry(n, n - k);
                break;
            case S3Op::ubt:
                for (long j = k; j <= n; ++j) v += binomial(j, k) * tri.entry(n, j);
                if ((n - k) % 2 != 0) v = -v;
                break;
            case S3Op::rt_ubt_rt:
                for (long j = 0; j <= k; ++j) v += binomial(n - j, n - k) * tri.entry(n, j);
                if (k % 2 != 0) v = -v;
                break;
            case S3Op::ubt_rt:
                for (long j = n - k; j <= n; ++j) v += binomial(j, n - k) * tri.entry(n, j);
                if (k % 2 != 0) v = -v;
                break;
            case S3Op::rt_ubt:
                for (long j = 0; j <= n - k; ++j) v += binomial(n - j, k) * tri.entry(n, j);
                if ((n - k) % 2 != 0) v = -v;
                break;
            }
            if (negate_s && n % 2 != 0) v = -v;
            row[static_cast<std::size_t>(k)] = v;
        }
        rows[static_cast<std::size_t>(n)] = std::move(row);
    }
    GkpParams q = s3_transform_params(e, tri.params());
    if (negate_s) q = GkpParams{-q.alpha, -q.beta, -q.gamma, -q.alphaP, -q.betaP, -q.gammaP};
    return Triangle(q, std::move(rows));
}

Tableau tableau_permute(const S3Elem& e, const Tableau& tab) {
    return Tableau(tab.r(e.perm[0]), tab.r(e.perm[1]), tab.r(e.perm[2]),
                   tab.g(e.perm[0]), tab.g(e.perm[1]), tab.g(e.perm[2]));
}

Triangle stanton_sprott(const Triangle& tri) {
    const GkpParams& p = tri.params();
    if (p.beta.is_zero() || p.betaP != p.beta)
        throw NotApplicableError(
            "the Stanton-Sprott involution requires beta' = beta != 0; parameters are " +
            p.str());
    long N = tri.max_n();
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) {
        std::vector<Rat> row(static_cast<std::size_t>(n) + 1, Rat(0));
        for (long k = 0; k <= n; ++k) {
            Rat v(0);
            for (long j = 0; j <= k; ++j) {
                Rat term = binomial(n - j, n - k) * tri.entry(n, j);
                if (j % 2 != 0) term = -term;
                v += term;
            }
            row[static_cast<std::size_t>(k)] = v;
        }
        rows[static_cast<std::size_t>(n)] = std::move(row);
    }
    GkpParams q{p.alpha, p.beta, p.gamma,
                -p.beta + p.alpha - p.alphaP, p.beta, p.gamma - p.gammaP};
    return Triangle(q, std::move(rows));
}

std::vector<Rat> generalized_lbt(const std::vector<Rat>& u, const Rat& A, const Rat& b,
                                 TransformDir dir) {
    std::vector<Rat> v(u.size(), Rat(0));
    for (long k = 0; k < static_cast<long>(u.size()); ++k) {
        Rat acc(0);
        for (long j = 0; j <= k; ++j) {
            Rat w = binomial(k, j);
            if (dir == TransformDir::forward) {
                w *= gen_factorial(A, k - j, b, FactDir::falling);
                if ((k - j) % 2 != 0) w = -w;
            } else {
                w *= gen_factorial(A, k - j, b, FactDir::rising);
            }
            acc += w * u[static_cast<std::size_t>(j)];
        }
        v[static_cast<std::size_t>(k)] = acc;
    }
    return v;
}

std::vector<Rat> classical_ubt(const std::vector<Rat>& u, TransformDir dir) {
    long n = static_cast<long>(u.size()) - 1;
    std::vector<Rat> v(u.size(), Rat(0));
    for (long k = 0; k <= n; ++k) {
        Rat acc(0);
        for (long j = k; j <= n; ++j) {
            Rat w = binomial(j, k) * u[static_cast<std::size_t>(j)];
            if (dir == TransformDir::forward && (j - k) % 2 != 0) w = -w;
            acc += w;
        }
        v[static_cast<std::size_t>(k)] = acc;
    }
    return v;
}

SeriesF lift_egf(const SeriesP& egf, const RatFunc& R, const RatFunc& S) {
    std::vector<RatFunc> c;
    c.reserve(egf.order());
    RatFunc s_pow(Rat(1));
    for (long n = 0; n < egf.order(); ++n) {
        c.push_back(eval_at(egf.coeff(n), R) * s_pow);
        s_pow *= S;
    }
    return SeriesF(egf.order(), std::move(c));
}

} // namespace gkp
