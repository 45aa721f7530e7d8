#include "gkp/triangle.hpp"

#include <sstream>

#include "gkp/errors.hpp"
#include "gkp/factorials.hpp"

namespace gkp {

namespace {

Rat upper_weight(const GkpParams& p, long n, long k) {
    // coefficient of T(n, k) in T(n+1, k): alpha n + beta k + gamma
    return p.alpha * Rat(n) + p.beta * Rat(k) + p.gamma;
}

Rat lower_weight(const GkpParams& p, long n, long k) {
    // coefficient of T(n, k) in T(n+1, k+1): alpha' n + beta' k + gamma'
    return p.alphaP * Rat(n) + p.betaP * Rat(k) + p.gammaP;
}

} // namespace

Triangle::Triangle(GkpParams params, std::vector<std::vector<Rat>> rows)
    : params_(std::move(params)), rows_(std::move(rows)) {
    if (rows_.empty() || rows_[0].size() != 1 || !rows_[0][0].is_one())
        throw DomainError("triangle must start with the apex row [1]");
    for (std::size_t n = 0; n < rows_.size(); ++n)
        if (rows_[n].size() != n + 1)
            throw DomainError("triangle row " + std::to_string(n) + " has wrong length");
}

Triangle Triangle::from_recurrence(const GkpParams& params, long N) {
    if (N < 0) throw DomainError("triangle depth must be non-negative");
    std::vector<std::vector<Rat>> rows;
    rows.reserve(static_cast<std::size_t>(N) + 1);
    rows.push_back({Rat(1)});
    for (long n = 0; n < N; ++n) {
        const auto& prev = rows.back();
        std::vector<Rat> row(static_cast<std::size_t>(n) + 2, Rat(0));
        for (long j = 0; j <= n + 1; ++j) {
            Rat v(0);
            if (j <= n) v += upper_weight(params, n, j) * prev[static_cast<std::size_t>(j)];
            if (j >= 1) v += lower_weight(params, n, j - 1) * prev[static_cast<std::size_t>(j - 1)];
            row[static_cast<std::size_t>(j)] = v;
        }
        rows.push_back(std::move(row));
    }
    return Triangle(params, std::move(rows));
}

const std::vector<Rat>& Triangle::row(long n) const {
    if (n < 0 || n > max_n())
        throw DomainError("triangle row " + std::to_string(n) + " out of range");
    return rows_[static_cast<std::size_t>(n)];
}

Rat Triangle::entry(long n, long k) const {
    if (n < 0 || n > max_n())
        throw DomainError("triangle entry row " + std::to_string(n) + " out of range");
    if (k < 0 || k > n) return Rat(0);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Poly Triangle::row_polynomial(long n) const {
    return Poly(std::vector<Rat>(row(n)));
}

std::optional<std::pair<long, long>>
recurrence_violation(const std::vector<std::vector<Rat>>& rows, const GkpParams& params) {
    auto at = [&](long n, long k) -> Rat {
        if (k < 0 || k > n) return Rat(0);
        return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    };
    if (rows.empty() || !at(0, 0).is_one()) return std::make_pair(0L, 0L);
    for (long n = 0; n + 1 < static_cast<long>(rows.size()); ++n) {
        for (long j = 0; j <= n + 1; ++j) {
            Rat expect = upper_weight(params, n, j) * at(n, j) +
                         (j >= 1 ? lower_weight(params, n, j - 1) * at(n, j - 1) : Rat(0));
            if (expect != at(n + 1, j)) return std::make_pair(n + 1, j);
        }
    }
    return std::nullopt;
}

Triangle trim(const Triangle& tri, TrimSide side) {
    const GkpParams& p = tri.params();
    long N = tri.max_n();
    if (N < 1) throw DomainError("trimming needs at least two generated rows");

    GkpParams q;
    std::vector<std::vector<Rat>> rows;
    rows.reserve(static_cast<std::size_t>(N));

    switch (side) {
    case TrimSide::left: {
        if (!p.gamma.is_zero() || p.gammaP.is_zero())
            throw NotApplicableError(
                "left trim requires gamma = 0 and gamma' != 0; parameters are " + p.str());
        q = GkpParams{p.alpha, p.beta, p.alpha + p.beta,
                      p.alphaP, p.betaP, p.alphaP + p.betaP + p.gammaP};
        Rat scale = p.gammaP.reciprocal();
        for (long n = 0; n < N; ++n) {
            std::vector<Rat> row(static_cast<std::size_t>(n) + 1);
            for (long k = 0; k <= n; ++k) row[static_cast<std::size_t>(k)] = scale * tri.entry(n + 1, k + 1);
            rows.push_back(std::move(row));
        }
        break;
    }
    case TrimSide::right: {
        if (!p.gammaP.is_zero() || p.gamma.is_zero())
            throw NotApplicableError(
                "right trim requires gamma' = 0 and gamma != 0; parameters are " + p.str());
        q = GkpParams{p.alpha, p.beta, p.alpha + p.gamma, p.alphaP, p.betaP, p.alphaP};
        Rat scale = p.gamma.reciprocal();
        for (long n = 0; n < N; ++n) {
            std::vector<Rat> row(static_cast<std::size_t>(n) + 1);
            for (long k = 0; k <= n; ++k) row[static_cast<std::size_t>(k)] = scale * tri.entry(n + 1, k);
            rows.push_back(std::move(row));
        }
        break;
    }
    case TrimSide::mid: {
        if (p.beta.is_zero() || p.betaP.is_zero())
            throw NotApplicableError("mid trim requires beta*beta' != 0; parameters are " +
                                     p.str());
        Rat A = p.gamma / p.beta;
        if (A.is_zero() || p.gammaP / p.betaP != A)
            throw NotApplicableError(
                "mid trim requires (gamma, gamma') = A (beta, beta') with A != 0; the two "
                "quotients are " + (p.gamma / p.beta).str() + " and " +
                (p.gammaP / p.betaP).str());
        q = GkpParams{p.alpha, p.beta, p.alpha + p.gamma,
                      p.alphaP, p.betaP, p.alphaP + p.betaP + p.gammaP};
        Poly divisor{A * p.beta, A * p.betaP};
        for (long n = 0; n < N; ++n) {
            Poly quotient = tri.row_polynomial(n + 1).divexact(divisor);
            std::vector<Rat> row(static_cast<std::size_t>(n) + 1, Rat(0));
            for (long k = 0; k <= quotient.degree(); ++k)
                row[static_cast<std::size_t>(k)] = quotient.coeff(k);
            rows.push_back(std::move(row));
        }
        break;
    }
    }

    Triangle out(q, std::move(rows));
    if (auto bad = recurrence_violation(out.rows(), q))
        throw InternalCheckError("trimmed triangle fails its own recurrence at (" +
                                 std::to_string(bad->first) + "," +
                                 std::to_string(bad->second) + ")");
    return out;
}

SeriesP egf_truncated(const Triangle& tri) {
    long order = tri.max_n() + 1;
    std::vector<Poly> c;
    c.reserve(static_cast<std::size_t>(order));
    for (long n = 0; n < order; ++n)
        c.push_back(tri.row_polynomial(n).scaled(factorial(n).reciprocal()));
    return SeriesP(order, std::move(c));
}

PdeReport verify_pde(const Triangle& tri) {
    const auto [A, B, C] = pde_coefficients(tri.params());
    SeriesP g = egf_truncated(tri);
    long N = g.order();
    PdeReport report;
    // Residual of [A(t) z - 1] dG/dz + B(t) dG/dt + C(t) G at z-order n:
    //   A n g_n - (n+1) g_{n+1} + B g_n' + C g_n,
    // simultaneously the differential recurrence on row polynomials.
    for (long n = 0; n + 2 <= N; ++n) {
        Poly gn = g.coeff(n);
        Poly residual = A * gn.scaled(Rat(n)) - g.coeff(n + 1).scaled(Rat(n + 1)) +
                        B * gn.derive() + C * gn;
        if (!residual.is_zero()) {
            report.ok = false;
            report.first_failure = n;
            report.detail = "PDE residual at z-order " + std::to_string(n) + ": " +
                            residual.str();
            return report;
        }
    }
    return report;
}

PdeReport verify_pde(const GkpParams& params, long N) {
    return verify_pde(Triangle::from_recurrence(params, N));
}

} // namespace gkp
