#include <algorithm>

#include "gkp/errors.hpp"
#include "gkp/factorials.hpp"
#include "gkp/families.hpp"
#include "gkp/hypergeometric.hpp"

namespace gkp {

Rat FormulaArgs::at(const std::string& name) const {
    auto it = rat.find(name);
    if (it == rat.end()) throw DomainError("missing formula argument '" + name + "'");
    return it->second;
}

Rat stirling_bessel2(const Rat& r, long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    return binomial(n, k) * factorial(k) * pow_int(Rat(2), k - n) *
           gauss_2f1_regularized(-r, Rat(k - n), Rat(2 * k - n + 1), Rat(2));
}

Rat stirling_bessel1(const Rat& r, long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    Rat series(0);
    for (long j = 0; j <= n - k; ++j)
        series += hyp_term({{r - Rat(1), Rat(k - n)}, {Rat(1), Rat(k - 2 * n)}}, j) *
                  pow_int(Rat(2), j);
    return binomial(n, k) * factorial(2 * n - k) / factorial(n) * pow_int(Rat(2), k - n) *
           series;
}

namespace {

Rat require_small_nat(const Rat& v, const char* name) {
    if (!v.is_nonnegative_integer())
        throw DomainError(std::string(name) + " must be a natural number, got " + v.str());
    return v;
}

// ---------------------------------------------------------------------------
// Individual formulas
// ---------------------------------------------------------------------------

Rat eval_s_simple(const FormulaArgs& args) {
    Rat a = args.at("a"), b = args.at("b"), r = args.at("r");
    long n = args.n, k = args.k;
    if (k < 0 || k > n) return Rat(0);
    if (b == a) // covers (0,0) and (1,1): C(n,k) r^{(n-k) falling, a}
        return binomial(n, k) * gen_factorial(r, n - k, a, FactDir::falling);
    if (a == Rat(-1) && b == Rat(1))
        return binomial(n, k) * falling(Rat(n) + r - Rat(1), n - k);
    throw NotApplicableError("no simple closed form registered for (a,b) = (" + a.str() + "," +
                             b.str() + "); supported: b = a and (a,b) = (-1,1)");
}

Rat eval_bessel2_r_sum(const FormulaArgs& args) {
    long r = require_small_nat(args.at("r"), "r").to_long();
    long n = args.n, k = args.k;
    if (k < 0 || k > n) return Rat(0);
    Rat sum(0);
    for (long l = 0; l <= r; ++l) sum += binomial(k + l, l) * binomial(n - k, r - l);
    return pow_int(Rat(2), k - n) / factorial(n - k) * binomial(Rat(n + r), r).reciprocal() *
           falling(Rat(n + r), 2 * (n - k)) * sum;
}

Rat eval_bessel2_rank0(const FormulaArgs& args) {
    long r = require_small_nat(args.at("r"), "r").to_long();
    long n = args.n, k = args.k;
    if (r > 2) throw DomainError("the rank-0 Bessel form is registered for r in {0, 1, 2}");
    if (k < 0 || k > n) return Rat(0);
    if (2 * k - n + r < 0) return Rat(0); // outside the support window
    Rat tail;
    switch (r) {
    case 0: tail = Rat(1); break;
    case 1: tail = Rat(n + 1); break;
    default: tail = Rat(n) * Rat(n + 1) + Rat(2 * (k + 1)); break;
    }
    return binomial(n, k) * factorial(k) / factorial(2 * k - n + r) * pow_int(Rat(2), k - n) *
           tail;
}

Rat eval_e_simple(const FormulaArgs& args) {
    Rat a = args.at("a"), b = args.at("b"), c0 = args.at("c0"), cInf = args.at("cInf");
    long n = args.n, k = args.k;
    if (k < 0 || k > n) return Rat(0);
    if (cInf == -c0) { // irrespective of b
        Rat v = binomial(n, k) * gen_factorial(c0, n, a, FactDir::falling);
        return k % 2 == 0 ? v : -v;
    }
    if (b == -a) // unified form; a = 0 gives the pure-power case
        return binomial(n, k) * gen_factorial(c0 + Rat(k) * (-a), n - k, -a, FactDir::rising) *
               gen_factorial(cInf, k, -a, FactDir::falling);
    throw NotApplicableError("no simple closed form registered for these Eulerian parameters; "
                             "supported: cInf = -c0, or b = -a");
}

Rat eval_e_single_progression(const FormulaArgs& args) {
    long p = require_small_nat(args.at("p"), "p").to_long();
    long zeta = require_small_nat(args.at("zeta"), "zeta").to_long();
    if (zeta > 1) throw DomainError("zeta must be 0 or 1");
    long n = args.n, k = args.k;
    if (k < 0 || k > n) return Rat(0);
    Rat acc = factorial(n) * binomial(n + 1, 2 * k + 2 * p + 1 - zeta);
    Rat sum(0);
    for (long l = 0; l < p; ++l) {
        Rat term = rising(Rat(2 - zeta + 2 * l), n) * binomial(n + 1, k + p - l);
        if (l % 2 != 0) term = -term;
        sum += term;
    }
    if ((k + p) % 2 != 0) sum = -sum;
    return acc - sum;
}

Rat eval_e_hypterm(const FormulaArgs& args) {
    Rat c0 = args.at("c0"), cInf = args.at("cInf");
    long n = args.n, k = args.k;
    if (k < 0 || k > n) return Rat(0);
    Rat half(1, 2), nh = Rat(-n) * half;
    if (cInf.is_zero())
        return rising(c0, n) *
               hyp_term({{nh, nh + half}, {Rat(1), c0 * half + half}}, k);
    if (cInf.is_one()) {
        Rat base = c0 - Rat(1); // the triangle at (base, 0) right-trims to this one
        return rising(c0, n) *
               hyp_term({{nh, nh - half}, {Rat(1), base * half + half}}, k);
    }
    throw NotApplicableError("hypergeometric-term Eulerian forms exist for cInf in {0, 1}");
}

Rat eval_e_midtrim_pair(const FormulaArgs& args) {
    Rat c = args.at("c");
    long n = args.n, k = args.k;
    if (k < 0 || k > n) return Rat(0);
    HypTermSpec spec{{Rat(-n + 1), Rat(-n) + c}, {Rat(1), c}};
    Rat first = hyp_term(spec, k);
    Rat second = k >= 1 ? hyp_term(spec, k - 1) : Rat(0);
    return rising(c - Rat(1), n) * (first - second);
}

Rat eval_narayana_fh(const FormulaArgs& args) {
    long n = args.n, k = args.k;
    if (k < 0 || k > n) return Rat(0);
    if (args.variant == "f-b") return binomial(n, k) * binomial(n + k, k);
    if (args.variant == "f-a") return binomial(n, k) * binomial(n + k + 2, k) / Rat(k + 1);
    if (args.variant == "h-b") return binomial(n, k) * binomial(n, k);
    if (args.variant == "h-a") return binomial(n, k) * binomial(n + 1, k) / Rat(k + 1);
    throw DomainError("narayana-fh variant must be f-b, f-a, h-b or h-a");
}

// ---------------------------------------------------------------------------
// One-parameter Narayana triangles with hypergeometric-term entries
// ---------------------------------------------------------------------------

const std::vector<NarayanaT2Entry>& t2_entries() {
    static const std::vector<NarayanaT2Entry> entries = {
        {"bi-a", FamilyKind::narayana_s, 'a', true, true},
        {"bi-b", FamilyKind::narayana_s, 'b', true, true},
        {"bi-c", FamilyKind::narayana_s, 'c', true, false},
        {"bii-a", FamilyKind::narayana_rs, 'a', true, true},
        {"bii-b", FamilyKind::narayana_rs, 'b', true, true},
        {"bii-c", FamilyKind::narayana_rs, 'c', false, true},
        {"biii-a", FamilyKind::narayana_e, 'a', true, true},
        {"biii-b", FamilyKind::narayana_e, 'b', true, true},
    };
    return entries;
}

} // namespace

const std::vector<NarayanaT2Entry>& narayana_t2_entries() { return t2_entries(); }

NamedFamily narayana_t2_family(const NarayanaT2Entry& entry, const Rat& c) {
    Rat c0, cInf;
    switch (entry.kind) {
    case FamilyKind::narayana_s:
        if (entry.restriction == 'a') { c0 = c; cInf = Rat(-2) * c; }
        else if (entry.restriction == 'b') { c0 = c; cInf = Rat(-2); }
        else { c0 = c - Rat(1); cInf = Rat(0); }
        break;
    case FamilyKind::narayana_rs:
        if (entry.restriction == 'a') { c0 = Rat(-2) * c; cInf = c; }
        else if (entry.restriction == 'b') { c0 = Rat(-2); cInf = c; }
        else { c0 = Rat(0); cInf = c - Rat(1); }
        break;
    case FamilyKind::narayana_e:
        if (entry.restriction == 'a') { c0 = c; cInf = c; }
        else if (entry.restriction == 'b') { c0 = c; cInf = Rat(2) - c; }
        else { c0 = c - Rat(1); cInf = Rat(1) - c; }
        break;
    default:
        throw DomainError("not a Narayana family kind");
    }
    return NamedFamily{entry.kind, Rat(2), c0, cInf};
}

Rat narayana_t2_eval(const NarayanaT2Entry& entry, const std::string& form, const Rat& c,
                     long n, long k) {
    bool reversed = form == "reversed";
    if (!reversed && form != "direct")
        throw DomainError("form must be 'direct' or 'reversed'");
    if ((reversed && !entry.has_reversed) || (!reversed && !entry.has_direct))
        throw NotApplicableError("entry " + entry.label + " has no " + form +
                                 " hypergeometric-term representation");
    if (k < 0 || k > n) return Rat(0);
    long idx = reversed ? n - k : k;
    Rat half(1, 2), nn(-n);

    // Stirling-type data (the reversed-Stirling entries reuse it mirrored)
    auto stirling_like = [&](char restriction, long index) -> Rat {
        switch (restriction) {
        case 'a':
            return rising(c, n) *
                   hyp_term({{nn, Rat(n) + c}, {Rat(1), half + c * half}}, index);
        case 'b':
            return rising(c, n) * hyp_term({{nn, Rat(n + 1)}, {Rat(1), c}}, index);
        default:
            return rising(c - Rat(1), n) *
                   hyp_term({{Rat(-n + 1), Rat(n)}, {Rat(1), c}}, index);
        }
    };
    auto rs_like = [&](char restriction, long index) -> Rat {
        if (restriction == 'a')
            return gen_factorial(Rat(-2) * c, n, Rat(4), FactDir::falling) *
                   hyp_term({{nn, nn + half - c * half}, {Rat(1), Rat(-2 * n + 1) - c}}, index);
        return gen_factorial(Rat(-2), n, Rat(4), FactDir::falling) *
               hyp_term({{nn, nn + Rat(1) - c}, {Rat(1), Rat(-2 * n)}}, index);
    };

    switch (entry.kind) {
    case FamilyKind::narayana_s:
        return reversed ? rs_like(entry.restriction, idx) : stirling_like(entry.restriction, idx);
    case FamilyKind::narayana_rs:
        return reversed ? stirling_like(entry.restriction, idx) : rs_like(entry.restriction, idx);
    case FamilyKind::narayana_e:
        if (entry.restriction == 'a')
            return rising(c, n) *
                   hyp_term({{nn, nn + half - c * half}, {Rat(1), half + c * half}}, idx);
        if (entry.restriction == 'b') {
            if (!reversed)
                return rising(c, n) *
                       hyp_term({{nn, nn - Rat(1) + c}, {Rat(1), c}}, idx);
            return rising(Rat(2) - c, n) *
                   hyp_term({{nn, nn + Rat(1) - c}, {Rat(1), Rat(2) - c}}, idx);
        }
        throw NotApplicableError("the Eulerian (c) restriction has no single-term form; use "
                                 "the mid-trim pair formula");
    default:
        throw DomainError("not a Narayana family kind");
    }
}

// ---------------------------------------------------------------------------
// OEIS-normalized triangles
// ---------------------------------------------------------------------------

const std::vector<OeisRow>& oeis_rows() {
    static const std::vector<OeisRow> rows = {
        {"bi-a-1", "A063007", FamilyKind::narayana_s, 'a', 1},
        {"bi-a-2", "A053124", FamilyKind::narayana_s, 'a', 2},
        {"bi-a-3", "A033282", FamilyKind::narayana_s, 'a', 3},
        {"bi-b-0", "A086810", FamilyKind::narayana_s, 'b', 0},
        {"bi-b-1", "A063007", FamilyKind::narayana_s, 'b', 1},
        {"bi-b-2", "A088617", FamilyKind::narayana_s, 'b', 2},
        {"bii-a-1", "A104684", FamilyKind::narayana_rs, 'a', 1},
        {"bii-a-2", "A053125", FamilyKind::narayana_rs, 'a', 2},
        {"bii-a-3", "A126216", FamilyKind::narayana_rs, 'a', 3},
        {"bii-b-0", "A133336", FamilyKind::narayana_rs, 'b', 0},
        {"bii-b-1", "A104684", FamilyKind::narayana_rs, 'b', 1},
        {"bii-b-2", "A060693", FamilyKind::narayana_rs, 'b', 2},
        {"biii-a-1", "A008459", FamilyKind::narayana_e, 'a', 1},
        {"biii-a-2", "A091044", FamilyKind::narayana_e, 'a', 2},
        {"biii-a-3", "A001263", FamilyKind::narayana_e, 'a', 3},
        {"biii-b-0", "A090181", FamilyKind::narayana_e, 'b', 0},
        {"biii-b-1", "A008459", FamilyKind::narayana_e, 'b', 1},
        {"biii-b-2", "A131198", FamilyKind::narayana_e, 'b', 2},
    };
    return rows;
}

namespace {

Rat oeis_norm_base(const OeisRow& row) {
    if (row.restriction == 'a') {
        if (row.c == 3) return Rat(3);
        return Rat(1);
    }
    return row.c == 1 ? Rat(1) : Rat(2);
}

const NarayanaT2Entry& t2_entry_for(const OeisRow& row) {
    for (const NarayanaT2Entry& e : t2_entries())
        if (e.kind == row.kind && e.restriction == row.restriction) return e;
    throw InternalCheckError("no hypergeometric entry for an OEIS row");
}

} // namespace

Rat oeis_normalized_entry(const OeisRow& row, long n, long k) {
    Triangle tri = family_triangle(narayana_t2_family(t2_entry_for(row), Rat(row.c)), n);
    Rat v = tri.entry(n, k) / rising(oeis_norm_base(row), n);
    if (row.kind == FamilyKind::narayana_s && k % 2 != 0) v = -v;
    if (row.kind == FamilyKind::narayana_rs && (n - k) % 2 != 0) v = -v;
    return v;
}

Poly oeis_row_polynomial_closed(const OeisRow& row, long n) {
    // row polynomial as pre * 2F1(A, B; C | arg) with arg one of
    // t, -t, 1/t, -1/t (the reciprocal shapes reverse coefficient order)
    Rat A(-n), B, C;
    enum class Shape { t_pos, t_neg, rev_pos, rev_neg } shape;
    Rat pre(1);
    bool eulerian = row.kind == FamilyKind::narayana_e;

    switch (row.c) {
    case 0:
        B = Rat(-n + 1);
        if (eulerian) { // plain Narayana shifted: 2F1(-n,-n+1;2 | 1/t)
            C = Rat(2);
        } else {
            C = Rat(-2 * n);
            pre = gen_factorial(Rat(2), n, Rat(4), FactDir::rising) / rising(Rat(2), n);
        }
        break;
    case 1:
        B = eulerian ? Rat(-n) : Rat(n + 1);
        C = Rat(1);
        break;
    case 2:
        if (row.restriction == 'a') {
            B = eulerian ? Rat(-n) - Rat(1, 2) : Rat(n + 2);
            C = Rat(3, 2);
            pre = Rat(n + 1);
        } else {
            B = eulerian ? Rat(-n + 1) : Rat(n + 1);
            C = Rat(2);
        }
        break;
    default: // c = 3, restriction (a) only
        B = eulerian ? Rat(-n - 1) : Rat(n + 3);
        C = Rat(2);
        break;
    }

    switch (row.kind) {
    case FamilyKind::narayana_s:
        shape = (row.c == 0) ? Shape::rev_neg : Shape::t_neg;
        break;
    case FamilyKind::narayana_rs:
        // c = 0: argument -t, the reflected partner of the c = 0 row of the
        // Stirling section (argument +t disagrees with the recurrence)
        shape = (row.c == 0) ? Shape::t_neg : Shape::rev_neg;
        break;
    default:
        shape = (row.c == 0) ? Shape::rev_pos : Shape::t_pos;
        break;
    }

    Poly poly;
    for (long j = 0; j <= n; ++j) {
        Rat coeff = hyp_term({{A, B}, {Rat(1), C}}, j);
        if ((shape == Shape::t_neg || shape == Shape::rev_neg) && j % 2 != 0) coeff = -coeff;
        long deg = (shape == Shape::rev_pos || shape == Shape::rev_neg) ? n - j : j;
        poly += Poly::monomial(coeff, deg);
    }
    return poly.scaled(pre);
}

CheckReport oeis_row_check(const OeisRow& row, long n_max) {
    const NarayanaT2Entry& entry = t2_entry_for(row);
    Triangle tri = family_triangle(narayana_t2_family(entry, Rat(row.c)), n_max);
    Rat norm_base = oeis_norm_base(row);
    // at c = 0 the direct Stirling/Eulerian forms are singular (their lower
    // parameter is 0); the reversed representation covers those rows
    std::string form = "direct";
    if (!entry.has_direct || (row.c == 0 && row.kind != FamilyKind::narayana_rs))
        form = "reversed";
    for (long n = 0; n <= n_max; ++n) {
        Poly closed = oeis_row_polynomial_closed(row, n);
        Poly from_tri;
        Rat norm = rising(norm_base, n).reciprocal();
        for (long k = 0; k <= n; ++k) {
            Rat v = tri.entry(n, k) * norm;
            if (row.kind == FamilyKind::narayana_s && k % 2 != 0) v = -v;
            if (row.kind == FamilyKind::narayana_rs && (n - k) % 2 != 0) v = -v;
            from_tri += Poly::monomial(v, k);
            // spot-check the triangle entry against the hypergeometric term
            Rat hyp_val = narayana_t2_eval(entry, form, Rat(row.c), n, k);
            if (hyp_val != tri.entry(n, k))
                return CheckReport::fail(row.label + ": hypergeometric term differs from the "
                                         "recurrence at n=" + std::to_string(n) +
                                         ", k=" + std::to_string(k));
        }
        if (closed != from_tri)
            return CheckReport::fail(row.label + " (" + row.anum +
                                     "): row polynomial mismatch at n=" + std::to_string(n) +
                                     ": closed " + closed.str() + " vs " + from_tri.str());
    }
    return CheckReport::pass();
}

// ---------------------------------------------------------------------------
// The registry
// ---------------------------------------------------------------------------

namespace {

Rat reference_stirling(const StirlingParams& p, long n, long k) {
    return stirling_triangle(p, n).entry(n, k);
}

Rat reference_eulerian(const EulerianParams& p, long n, long k) {
    return eulerian_triangle(p, n).entry(n, k);
}

std::vector<RegistryEntry> make_registry() {
    std::vector<RegistryEntry> reg;

    reg.push_back({"s-simple",
                   "rank-0 generalized Stirling values: b = a gives C(n,k) r^{(n-k) falling, a}; "
                   "(a,b) = (-1,1) gives the r-Lah form",
                   {"a", "b", "r"},
                   {},
                   eval_s_simple,
                   [](const FormulaArgs& a) {
                       return reference_stirling({a.at("a"), a.at("b"), a.at("r")}, a.n, a.k);
                   }});

    reg.push_back({"s-bessel2",
                   "second-kind r-Bessel numbers S(1,2;r) via the compensated 2F1(2) form",
                   {"r"},
                   {},
                   [](const FormulaArgs& a) { return stirling_bessel2(a.at("r"), a.n, a.k); },
                   [](const FormulaArgs& a) {
                       return reference_stirling({Rat(1), Rat(2), a.at("r")}, a.n, a.k);
                   }});

    reg.push_back({"s-bessel1",
                   "first-kind r-Bessel numbers S(-2,-1;r) via the terminating 2F1(2) form",
                   {"r"},
                   {},
                   [](const FormulaArgs& a) { return stirling_bessel1(a.at("r"), a.n, a.k); },
                   [](const FormulaArgs& a) {
                       return reference_stirling({Rat(-2), Rat(-1), a.at("r")}, a.n, a.k);
                   }});

    reg.push_back({"bessel2-r-sum",
                   "second-kind r-Bessel numbers, natural r, by the bounded double-binomial sum",
                   {"r"},
                   {},
                   eval_bessel2_r_sum,
                   [](const FormulaArgs& a) {
                       return reference_stirling({Rat(1), Rat(2), a.at("r")}, a.n, a.k);
                   }});

    reg.push_back({"bessel2-r-rank0",
                   "second-kind r-Bessel numbers for r in {0,1,2}, summation-free",
                   {"r"},
                   {},
                   eval_bessel2_rank0,
                   [](const FormulaArgs& a) {
                       return reference_stirling({Rat(1), Rat(2), a.at("r")}, a.n, a.k);
                   }});

    reg.push_back({"e-simple",
                   "rank-0 generalized Eulerian values: cInf = -c0, or b = -a",
                   {"a", "b", "c0", "cInf"},
                   {},
                   eval_e_simple,
                   [](const FormulaArgs& a) {
                       return reference_eulerian(
                           {a.at("a"), a.at("b"), a.at("c0"), a.at("cInf")}, a.n, a.k);
                   }});

    reg.push_back({"e-single-progression",
                   "E(-1,2; 2-zeta+2p, zeta-2p) by the bounded binomial sum",
                   {"p", "zeta"},
                   {},
                   eval_e_single_progression,
                   [](const FormulaArgs& a) {
                       long p = require_small_nat(a.at("p"), "p").to_long();
                       long zeta = require_small_nat(a.at("zeta"), "zeta").to_long();
                       return reference_eulerian({Rat(-1), Rat(2), Rat(2 - zeta + 2 * p),
                                                  Rat(zeta - 2 * p)},
                                                 a.n, a.k);
                   }});

    reg.push_back({"e-hypterm",
                   "E(-1,2;c0,0) and E(-1,2;c0,1) as single hypergeometric terms",
                   {"c0", "cInf"},
                   {},
                   eval_e_hypterm,
                   [](const FormulaArgs& a) {
                       return reference_eulerian({Rat(-1), Rat(2), a.at("c0"), a.at("cInf")},
                                                 a.n, a.k);
                   }});

    reg.push_back({"e-midtrim-pair",
                   "the mid-trimmed Eulerian Narayana triangle N^E(2;c-1,1-c) as a difference "
                   "of two hypergeometric terms",
                   {"c"},
                   {},
                   eval_e_midtrim_pair,
                   [](const FormulaArgs& a) {
                       Rat c = a.at("c");
                       return Triangle::from_recurrence(
                                  family_gkp({FamilyKind::narayana_e, Rat(2), c - Rat(1),
                                              Rat(1) - c}),
                                  a.n)
                           .entry(a.n, a.k);
                   }});

    reg.push_back({"narayana-t2",
                   "one-parameter generalized Narayana triangles as hypergeometric terms; "
                   "variant = entry label + ':direct' or ':reversed'",
                   {"c"},
                   [] {
                       std::vector<std::string> v;
                       for (const auto& e : t2_entries()) {
                           if (e.has_direct) v.push_back(e.label + ":direct");
                           if (e.has_reversed) v.push_back(e.label + ":reversed");
                       }
                       return v;
                   }(),
                   [](const FormulaArgs& a) {
                       auto colon = a.variant.find(':');
                       if (colon == std::string::npos)
                           throw DomainError("variant must look like 'bi-a:direct'");
                       std::string label = a.variant.substr(0, colon);
                       std::string form = a.variant.substr(colon + 1);
                       for (const auto& e : t2_entries())
                           if (e.label == label)
                               return narayana_t2_eval(e, form, a.at("c"), a.n, a.k);
                       throw DomainError("unknown Narayana entry '" + label + "'");
                   },
                   [](const FormulaArgs& a) {
                       auto colon = a.variant.find(':');
                       std::string label = a.variant.substr(0, colon);
                       for (const auto& e : t2_entries())
                           if (e.label == label)
                               return family_triangle(narayana_t2_family(e, a.at("c")), a.n)
                                   .entry(a.n, a.k);
                       throw DomainError("unknown Narayana entry '" + label + "'");
                   }});

    reg.push_back({"oeis",
                   "OEIS-normalized Narayana triangles; variant = row label (see oeis_rows)",
                   {},
                   [] {
                       std::vector<std::string> v;
                       for (const auto& r : oeis_rows()) v.push_back(r.label);
                       return v;
                   }(),
                   [](const FormulaArgs& a) {
                       for (const auto& r : oeis_rows())
                           if (r.label == a.variant) return oeis_normalized_entry(r, a.n, a.k);
                       throw DomainError("unknown OEIS row '" + a.variant + "'");
                   },
                   [](const FormulaArgs& a) {
                       // the closed row polynomial is the independent reference
                       for (const auto& r : oeis_rows())
                           if (r.label == a.variant)
                               return oeis_row_polynomial_closed(r, a.n).coeff(a.k);
                       throw DomainError("unknown OEIS row '" + a.variant + "'");
                   }});

    reg.push_back({"narayana-fh",
                   "f- and h-vector rows of the dual associahedron complexes: variants f-b, "
                   "f-a (divided Narayana forms) and h-b, h-a (squared-binomial and Narayana "
                   "forms)",
                   {},
                   {"f-b", "f-a", "h-b", "h-a"},
                   eval_narayana_fh,
                   [](const FormulaArgs& a) {
                       NamedFamily fam{FamilyKind::narayana_s, Rat(2), Rat(1), Rat(-2)};
                       Rat norm_base(1);
                       bool sign_k = true;
                       if (a.variant == "f-a") {
                           fam = {FamilyKind::narayana_s, Rat(2), Rat(3), Rat(-6)};
                           norm_base = Rat(3);
                       } else if (a.variant == "h-b") {
                           fam = {FamilyKind::narayana_e, Rat(2), Rat(1), Rat(1)};
                           sign_k = false;
                       } else if (a.variant == "h-a") {
                           fam = {FamilyKind::narayana_e, Rat(2), Rat(3), Rat(3)};
                           norm_base = Rat(3);
                           sign_k = false;
                       } else if (a.variant != "f-b") {
                           throw DomainError("narayana-fh variant must be f-b, f-a, h-b or h-a");
                       }
                       Rat v = family_triangle(fam, a.n).entry(a.n, a.k) /
                               rising(norm_base, a.n);
                       if (sign_k && a.k % 2 != 0) v = -v;
                       return v;
                   }});

    return reg;
}

} // namespace

const std::vector<RegistryEntry>& formula_registry() {
    static const std::vector<RegistryEntry> reg = make_registry();
    return reg;
}

const RegistryEntry& registry_entry(const std::string& id) {
    for (const RegistryEntry& e : formula_registry())
        if (e.id == id) return e;
    throw DomainError("no registered closed form named '" + id + "'");
}

Rat closed_form_eval(const std::string& id, const FormulaArgs& args) {
    return registry_entry(id).eval(args);
}

} // namespace gkp
