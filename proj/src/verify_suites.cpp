#include "gkp/verify_suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gkp/characteristics.hpp"
#include "gkp/derivation.hpp"
#include "gkp/errors.hpp"
#include "gkp/families.hpp"
#include "gkp/rng.hpp"
#include "gkp/transforms.hpp"

namespace gkp {

namespace {

using Suite = std::function<std::vector<SuiteResult>(const VerifyOptions&)>;

void push(std::vector<SuiteResult>& out, const std::string& id, const CheckReport& r) {
    out.push_back({id, r.ok, false, r.skipped ? "skipped: " + r.detail : r.detail});
}

GkpParams random_params(RatSampler& rng) {
    return GkpParams{rng.rat(), rng.rat(), rng.rat(), rng.rat(), rng.rat(), rng.rat()};
}

GkpParams random_normalized(RatSampler& rng) {
    Rat beta = rng.nonzero_rat();
    return GkpParams{rng.rat(), beta, rng.rat(), rng.rat(), -beta, rng.rat()};
}

std::vector<SuiteResult> suite_pde(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    RatSampler rng(opt.seed);
    long depth = std::max<long>(opt.depth, 4);
    for (long i = 0; i < opt.samples; ++i) {
        PdeReport r = verify_pde(random_params(rng), depth);
        out.push_back({"pde/random-" + std::to_string(i), r.ok, false, r.detail});
    }
    int idx = 0;
    for (FamilyKind kind :
         {FamilyKind::narayana_s, FamilyKind::narayana_rs, FamilyKind::narayana_e,
          FamilyKind::sectan_s, FamilyKind::sectan_rs, FamilyKind::sectan_e}) {
        NamedFamily f{kind, rng.nonzero_rat(), rng.rat(), rng.rat()};
        PdeReport r = verify_pde(family_gkp(f), depth);
        out.push_back({std::string("pde/family-") + family_name(kind), r.ok, false, r.detail});
        ++idx;
    }
    return out;
}

std::vector<SuiteResult> suite_s3_group(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    RatSampler rng(opt.seed);
    // Cayley closure and inverses
    bool cayley = true;
    for (S3Op a : kAllS3Ops)
        for (S3Op b : kAllS3Ops) {
            const S3Elem& c = s3_compose(s3_element(a), s3_element(b));
            for (int i = 0; i < 3; ++i)
                cayley = cayley && c.perm[i] == s3_element(a).perm[s3_element(b).perm[i]];
        }
    out.push_back({"s3/cayley-closure", cayley, false, ""});
    out.push_back({"s3/rt-involution",
                   s3_compose(s3_element(S3Op::rt), s3_element(S3Op::rt)).op == S3Op::identity,
                   false, ""});
    out.push_back({"s3/ubt-involution",
                   s3_compose(s3_element(S3Op::ubt), s3_element(S3Op::ubt)).op == S3Op::identity,
                   false, ""});

    long depth = std::min<long>(opt.depth, 10);
    bool coherent = true, tabs = true;
    std::string detail;
    for (long i = 0; i < opt.samples && coherent; ++i) {
        GkpParams p = random_normalized(rng);
        Triangle tri = Triangle::from_recurrence(p, depth);
        for (S3Op op : kAllS3Ops) {
            const S3Elem& e = s3_element(op);
            Triangle moved = s3_transform_rows(e, tri);
            if (!(moved == Triangle::from_recurrence(moved.params(), depth))) {
                coherent = false;
                detail = "row/parameter coherence fails for " + e.name + " at " + p.str();
            }
            if (!(to_tableau(s3_transform_params(e, p)) == tableau_permute(e, to_tableau(p))))
                tabs = false;
        }
    }
    out.push_back({"s3/row-parameter-coherence", coherent, false, detail});
    out.push_back({"s3/tableau-permutation", tabs, false, ""});
    return out;
}

std::vector<SuiteResult> suite_rank1(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    RatSampler rng(opt.seed);
    long depth = opt.depth;
    for (long i = 0; i < opt.samples; ++i) {
        StirlingParams sp{rng.rat(), rng.nonzero_rat(), rng.rat()};
        Triangle tri = stirling_triangle(sp, depth);
        bool ok = true;
        for (long n = 0; n <= depth && ok; ++n)
            for (long k = 0; k <= n && ok; ++k)
                ok = stirling_rank1(sp, n, k) == tri.entry(n, k);
        out.push_back({"rank1/stirling-" + std::to_string(i), ok, false, ""});

        EulerianParams ep{rng.rat(), rng.nonzero_rat(), rng.rat(), rng.rat()};
        Triangle etr = eulerian_triangle(ep, depth);
        ok = true;
        for (long n = 0; n <= depth && ok; ++n)
            for (long k = 0; k <= n && ok; ++k)
                ok = eulerian_rank1(ep, n, k) == etr.entry(n, k);
        out.push_back({"rank1/eulerian-" + std::to_string(i), ok, false, ""});

        push(out, "rank1/ubt-pair-" + std::to_string(i),
             transform_pair_ubt(ep, std::min<long>(depth, 10)));
        push(out, "rank1/lower-pair-eulerian-" + std::to_string(i),
             transform_pair_rephrased(ep, std::min<long>(depth, 10)));
        push(out, "rank1/lower-pair-stirling-" + std::to_string(i),
             transform_pair_lbt(sp, std::min<long>(depth, 10)));
    }
    return out;
}

std::vector<SuiteResult> suite_worpitzky(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    RatSampler rng(opt.seed);
    long n_max = std::min<long>(opt.depth, 8);
    push(out, "worpitzky/classical", connection_check_worpitzky_general({0, 1, 1, 0}, 5));
    push(out, "worpitzky/type-b", connection_check_worpitzky_general({0, 2, 1, 1}, 5));
    for (long i = 0; i < opt.samples; ++i) {
        StirlingParams sp{rng.rat(), rng.rat(), rng.rat()};
        push(out, "worpitzky/stirling-" + std::to_string(i),
             connection_check_stirling(sp, n_max));
        EulerianParams ep{rng.rat(), rng.nonzero_rat(), rng.rat(), rng.rat()};
        push(out, "worpitzky/general-" + std::to_string(i),
             connection_check_worpitzky_general(ep, n_max));
        push(out, "worpitzky/single-" + std::to_string(i),
             connection_check_worpitzky_single(rng.rat(), rng.rat(), rng.rat(), n_max));
        push(out, "worpitzky/symmetric-" + std::to_string(i),
             connection_check_symmetric(rng.rat(), rng.rat(), n_max));
        push(out, "worpitzky/reindex-" + std::to_string(i),
             worpitzky_reindex_check(rng.rat(), rng.rat(), rng.rat(), std::min<long>(n_max, 6)));
    }
    return out;
}

std::vector<SuiteResult> suite_riordan(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    RatSampler rng(opt.seed);
    long depth = opt.depth;
    push(out, "riordan/subset-cycle-inversion", riordan_inverse_check(Rat(0), Rat(1), Rat(0), depth));
    for (long i = 0; i < opt.samples; ++i) {
        Rat a = rng.rat(), b = rng.rat(), c = rng.rat(), r1 = rng.rat(), r2 = rng.rat();
        push(out, "riordan/product-" + std::to_string(i),
             riordan_product_check(a, b, c, r1, r2, std::min<long>(depth, 9)));
        push(out, "riordan/inverse-" + std::to_string(i),
             riordan_inverse_check(a, b, r1, std::min<long>(depth, 9)));
        long k1 = rng.int_in(0, 3), k2 = rng.int_in(0, 3);
        push(out, "riordan/convolution-" + std::to_string(i),
             riordan_convolution_check({a, b, r1}, r2, rng.int_in(k1 + k2, 8), k1, k2));
        push(out, "riordan/asym-convolution-" + std::to_string(i),
             riordan_asym_convolution_check({a, b, r1}, r2, rng.int_in(2, 6), rng.int_in(0, 2),
                                            rng.int_in(0, 2)));
    }
    return out;
}

std::vector<SuiteResult> suite_contiguity(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    RatSampler rng(opt.seed);
    for (int rel = 1; rel <= 5; ++rel) {
        bool s_ok = true, e_ok = true;
        std::string s_detail, e_detail;
        for (long i = 0; i < opt.samples; ++i) {
            StirlingParams sp{rng.rat(), rng.rat(), rng.rat()};
            EulerianParams ep{rng.rat(), rng.rat(), rng.rat(), rng.rat()};
            long n = rng.int_in(0, 7);
            long lo_s = (rel == 2 || rel == 5) ? -1 : 0;
            long lo_e = (rel == 2 || rel == 3 || rel == 5) ? -1 : 0;
            for (long k = lo_s; k <= n; ++k) {
                CheckReport r = contiguity_check_s(rel, sp, n, k);
                if (!r.ok) { s_ok = false; s_detail = r.detail; }
            }
            for (long k = lo_e; k <= n; ++k) {
                CheckReport r = contiguity_check_e(rel, ep, n, k);
                if (!r.ok) { e_ok = false; e_detail = r.detail; }
            }
        }
        out.push_back({"contiguity/stirling-" + std::to_string(rel), s_ok, false, s_detail});
        out.push_back({"contiguity/eulerian-" + std::to_string(rel), e_ok, false, e_detail});
    }
    // closure of the family under upper binomial transforms
    bool closure = true;
    for (long i = 0; i < opt.samples && closure; ++i)
        closure = ubt_closure_check({rng.rat(), rng.nonzero_rat(), rng.rat()}, rng.rat(), 8).ok;
    out.push_back({"contiguity/ubt-closure", closure, false, ""});
    return out;
}

std::vector<SuiteResult> suite_closed_forms(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    RatSampler rng(opt.seed);
    long n_max = std::min<long>(opt.depth, 10);
    auto sweep = [&](const std::string& id, const std::string& entry, FormulaArgs base) {
        const RegistryEntry& reg = registry_entry(entry);
        bool ok = true;
        std::string detail;
        for (long n = 0; n <= n_max && ok; ++n)
            for (long k = 0; k <= n && ok; ++k) {
                base.n = n;
                base.k = k;
                if (reg.eval(base) != reg.reference(base)) {
                    ok = false;
                    detail = entry + " mismatch at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k);
                }
            }
        out.push_back({id, ok, false, detail});
    };

    for (const Rat& r : {Rat(0), Rat(1), Rat(2), Rat(3), rng.rat(), rng.rat()}) {
        std::string tag = r.str();
        sweep("closed/s-simple-00-r=" + tag, "s-simple",
              {{{"a", Rat(0)}, {"b", Rat(0)}, {"r", r}}, 0, 0, ""});
        sweep("closed/s-simple-11-r=" + tag, "s-simple",
              {{{"a", Rat(1)}, {"b", Rat(1)}, {"r", r}}, 0, 0, ""});
        sweep("closed/s-simple-lah-r=" + tag, "s-simple",
              {{{"a", Rat(-1)}, {"b", Rat(1)}, {"r", r}}, 0, 0, ""});
        sweep("closed/s-bessel2-r=" + tag, "s-bessel2", {{{"r", r}}, 0, 0, ""});
        sweep("closed/s-bessel1-r=" + tag, "s-bessel1", {{{"r", r}}, 0, 0, ""});
    }
    for (long r = 0; r <= 3; ++r) {
        sweep("closed/bessel2-sum-r=" + std::to_string(r), "bessel2-r-sum",
              {{{"r", Rat(r)}}, 0, 0, ""});
        if (r <= 2)
            sweep("closed/bessel2-rank0-r=" + std::to_string(r), "bessel2-r-rank0",
                  {{{"r", Rat(r)}}, 0, 0, ""});
    }
    for (long i = 0; i < 2; ++i) {
        Rat c0 = rng.rat(), cInf = rng.rat(), a = rng.rat();
        sweep("closed/e-simple-antisym-" + std::to_string(i), "e-simple",
              {{{"a", a}, {"b", -a}, {"c0", c0}, {"cInf", cInf}}, 0, 0, ""});
        sweep("closed/e-simple-balanced-" + std::to_string(i), "e-simple",
              {{{"a", a}, {"b", rng.rat()}, {"c0", c0}, {"cInf", -c0}}, 0, 0, ""});
    }
    for (long p = 0; p <= 2; ++p)
        for (long zeta = 0; zeta <= 1; ++zeta)
            sweep("closed/e-single-progression-p=" + std::to_string(p) + "-z=" +
                      std::to_string(zeta),
                  "e-single-progression", {{{"p", Rat(p)}, {"zeta", Rat(zeta)}}, 0, 0, ""});
    for (const Rat& c0 : {Rat(1), Rat(3), Rat(7, 2)}) {
        sweep("closed/e-hypterm-c0=" + c0.str() + "-ci=0", "e-hypterm",
              {{{"c0", c0}, {"cInf", Rat(0)}}, 0, 0, ""});
        sweep("closed/e-hypterm-c0=" + c0.str() + "-ci=1", "e-hypterm",
              {{{"c0", c0}, {"cInf", Rat(1)}}, 0, 0, ""});
    }
    sweep("closed/e-midtrim-pair", "e-midtrim-pair", {{{"c", Rat(5, 2)}}, 0, 0, ""});
    for (const char* v : {"f-b", "f-a", "h-b", "h-a"})
        sweep(std::string("closed/narayana-fh-") + v, "narayana-fh", {{}, 0, 0, v});
    for (const NarayanaT2Entry& e : narayana_t2_entries()) {
        std::vector<std::pair<std::string, Rat>> picks;
        for (long c = 0; c <= 3; ++c) picks.emplace_back(std::to_string(c), Rat(c));
        picks.emplace_back("rnd1", rng.rat() + Rat(1, 7));
        picks.emplace_back("rnd2", rng.rat() + Rat(2, 11));
        for (const auto& [tag, c] : picks)
            for (const std::string& form : {std::string("direct"), std::string("reversed")}) {
                if (form == "direct" && !e.has_direct) continue;
                if (form == "reversed" && !e.has_reversed) continue;
                // admissibility: a representation whose lower hypergeometric
                // parameter hits a non-positive integer at this c is skipped
                bool singular = false;
                if (c.is_integer()) {
                    long ci = c.to_long();
                    bool eulerian = e.kind == FamilyKind::narayana_e;
                    // lower parameter c (Stirling shapes, restrictions b/c)
                    bool stirling_shape =
                        !eulerian && ((e.kind == FamilyKind::narayana_s) == (form == "direct"));
                    if (stirling_shape && e.restriction != 'a' && ci <= 0) singular = true;
                    // lower parameter (1+c)/2 (restriction a shapes)
                    if ((stirling_shape || eulerian) && e.restriction == 'a' && ci < 0 &&
                        (1 + ci) % 2 == 0)
                        singular = true;
                    // Eulerian (b): lower parameter c direct, 2 - c reversed
                    if (eulerian && e.restriction == 'b') {
                        if (form == "direct" && ci <= 0) singular = true;
                        if (form == "reversed" && ci >= 2) singular = true;
                    }
                }
                if (singular) continue;
                sweep("closed/narayana-t2-" + e.label + "-" + form + "-c=" + tag,
                      "narayana-t2", {{{"c", c}}, 0, 0, e.label + ":" + form});
            }
    }
    return out;
}

std::vector<SuiteResult> suite_egf_all(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    RatSampler rng(opt.seed);
    long order = 8;
    long samples = opt.samples;

    auto run = [&](const std::string& id, EgfCase c, const GkpParams& p) {
        try {
            push(out, id, closed_egf_matches_recurrence({c, p, order}));
        } catch (const MathError& e) {
            out.push_back({id, false, false, e.what()});
        }
    };

    for (long i = 0; i < samples; ++i) {
        run("egf/a1-" + std::to_string(i),
            EgfCase::a1,
            {rng.nonzero_rat(), rng.nonzero_rat(), rng.rat(), Rat(0), rng.nonzero_rat(), rng.rat()});
        run("egf/a1-limit-" + std::to_string(i), EgfCase::a1_limit,
            {Rat(0), rng.nonzero_rat(), rng.rat(), Rat(0), rng.nonzero_rat(), rng.rat()});
        {
            Rat beta = rng.nonzero_rat(), betaP = rng.nonzero_rat(), alphaP;
            do { alphaP = rng.rat(); } while (alphaP == -betaP);
            run("egf/a2-" + std::to_string(i), EgfCase::a2,
                {-beta, beta, rng.rat(), alphaP, betaP, rng.rat()});
            run("egf/a2-limit-" + std::to_string(i), EgfCase::a2_limit,
                {-beta, beta, rng.rat(), -betaP, betaP, rng.rat()});
            run("egf/a3-" + std::to_string(i), EgfCase::a3,
                {beta * (alphaP / betaP + Rat(1)), beta, rng.rat(), alphaP, betaP, rng.rat()});
            run("egf/a3-limit-" + std::to_string(i), EgfCase::a3_limit,
                {Rat(0), beta, rng.rat(), -betaP, betaP, rng.rat()});
        }
        run("egf/s-elem-" + std::to_string(i), EgfCase::s_elem,
            {rng.rat(), rng.nonzero_rat(), rng.rat(), Rat(0), Rat(1), Rat(1)});
        {
            Rat b = rng.nonzero_rat(), c0 = rng.rat();
            run("egf/e-general-" + std::to_string(i), EgfCase::e_speck,
                eulerian_gkp({rng.nonzero_rat(), b, rng.rat(), rng.rat()}));
            run("egf/e-exponential-" + std::to_string(i), EgfCase::e_speck2,
                eulerian_gkp({Rat(0), b, rng.rat(), rng.rat()}));
            run("egf/e-single-progression-" + std::to_string(i), EgfCase::e_reducedspeck,
                eulerian_gkp({i % 2 == 0 ? rng.nonzero_rat() : Rat(0), b, c0, b - c0}));
        }
        // vertical (column) EGFs
        {
            StirlingParams sp{rng.rat(), rng.nonzero_rat(), rng.rat()};
            bool ok = true;
            for (long k = 0; k <= 4 && ok; ++k) ok = vertical_egf_check(sp, k, 12).ok;
            out.push_back({"egf/s-vertical-" + std::to_string(i), ok, false, ""});
        }
        // named families, generic and b != 2
        struct FamCase { EgfCase id; FamilyKind kind; };
        for (const FamCase& fc : {FamCase{EgfCase::b_s, FamilyKind::narayana_s},
                                  FamCase{EgfCase::b_rs, FamilyKind::narayana_rs},
                                  FamCase{EgfCase::b_e, FamilyKind::narayana_e},
                                  FamCase{EgfCase::c_s, FamilyKind::sectan_s},
                                  FamCase{EgfCase::c_rs, FamilyKind::sectan_rs},
                                  FamCase{EgfCase::c_e, FamilyKind::sectan_e}}) {
            Rat b = (i % 3 == 0) ? rng.nonzero_rat() : Rat(2);
            run(std::string("egf/") + egf_case_name(fc.id) + "-" + std::to_string(i), fc.id,
                family_gkp({fc.kind, b, rng.rat(), rng.rat()}));
        }
        // restricted Narayana forms
        {
            Rat c = rng.rat();
            run("egf/b-s-ra-" + std::to_string(i), EgfCase::b_s_ra,
                family_gkp({FamilyKind::narayana_s, Rat(2), c, Rat(-2) * c}));
            run("egf/b-s-rb-" + std::to_string(i), EgfCase::b_s_rb,
                family_gkp({FamilyKind::narayana_s, Rat(2), c, Rat(-2)}));
            run("egf/b-s-rc-" + std::to_string(i), EgfCase::b_s_rc,
                family_gkp({FamilyKind::narayana_s, Rat(2), c, Rat(0)}));
            run("egf/b-rs-ra-" + std::to_string(i), EgfCase::b_rs_ra,
                family_gkp({FamilyKind::narayana_rs, Rat(2), Rat(-2) * c, c}));
            run("egf/b-rs-rb-" + std::to_string(i), EgfCase::b_rs_rb,
                family_gkp({FamilyKind::narayana_rs, Rat(2), Rat(-2), c}));
            run("egf/b-rs-rc-" + std::to_string(i), EgfCase::b_rs_rc,
                family_gkp({FamilyKind::narayana_rs, Rat(2), Rat(0), c}));
            run("egf/b-e-ra-" + std::to_string(i), EgfCase::b_e_ra,
                family_gkp({FamilyKind::narayana_e, Rat(2), c, c}));
            run("egf/b-e-rb-" + std::to_string(i), EgfCase::b_e_rb,
                family_gkp({FamilyKind::narayana_e, Rat(2), c, Rat(2) - c}));
            run("egf/b-e-rc-" + std::to_string(i), EgfCase::b_e_rc,
                family_gkp({FamilyKind::narayana_e, Rat(2), c, -c}));
        }
    }
    run("egf/c-sec", EgfCase::c_sec1, GkpParams{0, 2, 1, 1, -2, 0});
    run("egf/c-sec-squared", EgfCase::c_sec2, GkpParams{0, 2, 2, 1, -2, 0});

    // the implicit hypergeometric construction (bi-order follows the depth knob)
    long bi = std::max<long>(4, std::min<long>(opt.depth, 10));
    push(out, "egf/implicit-generic",
         implicit_egf_matches_recurrence(
             Tableau(Rat(1, 3), Rat(5, 12), Rat(1, 4), Rat(1), Rat(-2), Rat(1)), bi, bi));
    int done = 0;
    while (done < 2) {
        Rat r0 = rng.rat(), r1 = rng.rat();
        if (r0.is_nonpositive_integer()) continue;
        Rat g0 = rng.rat(), g1 = rng.rat();
        Tableau tab(r0, r1, Rat(1) - r0 - r1, g0, g1, -g0 - g1);
        push(out, "egf/implicit-random-" + std::to_string(done),
             implicit_egf_matches_recurrence(tab, bi, bi));
        ++done;
    }
    return out;
}

std::vector<SuiteResult> suite_derivation(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    RatSampler rng(opt.seed);
    long n = std::min<long>(opt.depth, 8);
    long done = 0;
    while (done < opt.samples) {
        GkpParams p = random_params(rng);
        if (p.beta.is_zero() && p.betaP.is_zero()) continue;
        bool ok = triangle_via_derivation(p, n) == Triangle::from_recurrence(p, n);
        out.push_back({"derivation/engine-" + std::to_string(done), ok, false, ""});
        push(out, "derivation/exponentiated-" + std::to_string(done),
             corollary_series_check(p, std::min<long>(n, 6)));
        ++done;
    }
    int idx = 0;
    for (SectanKind kind : {SectanKind::penult_a, SectanKind::penult_b, SectanKind::penult_c}) {
        for (const auto& [c0, ci] : std::vector<std::pair<Rat, Rat>>{
                 {Rat(1), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(1)}, {rng.rat(), rng.rat()}})
            push(out,
                 "derivation/sectan-" + std::to_string(idx) + "-c0=" + c0.str() + "-ci=" +
                     ci.str(),
                 sectan_identity_check(kind, c0, ci, n));
        ++idx;
    }
    for (long i = 0; i < 5; ++i) {
        GkpParams p{rng.rat(), rng.nonzero_rat(), rng.rat(),
                    rng.rat(), rng.nonzero_rat(), rng.rat()};
        push(out, "derivation/iterated-operator-" + std::to_string(i),
             iterated_operator_check(p, 6));
    }
    return out;
}

std::vector<SuiteResult> suite_conjecture(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    long n_max = std::min<long>(opt.depth, 8);
    for (long p = 0; p <= 2; ++p)
        for (int zeta = 0; zeta <= 1; ++zeta)
            for (const Rat& c : {Rat(1), Rat(3, 2), Rat(2)}) {
                bool holds = true;
                std::string detail;
                for (long n = 0; n <= n_max && holds; ++n)
                    for (long k = 0; k <= n && holds; ++k) {
                        ConjectureReport r = conjecture_check(p, zeta, c, n, k);
                        if (!r.holds) {
                            holds = false;
                            detail = r.detail;
                        }
                    }
                out.push_back({"conjecture/p=" + std::to_string(p) + "-z=" +
                                   std::to_string(zeta) + "-c=" + c.str(),
                               true, !holds,
                               holds ? "no counterexample found" : "FINDING: " + detail});
            }
    return out;
}

std::vector<SuiteResult> suite_oeis(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    long n_max = std::min<long>(opt.depth, 8);
    for (const OeisRow& row : oeis_rows())
        push(out, "oeis/" + row.label + "-" + row.anum, oeis_row_check(row, n_max));
    return out;
}

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> table = {
        {"pde", suite_pde},
        {"s3_group", suite_s3_group},
        {"rank1", suite_rank1},
        {"worpitzky", suite_worpitzky},
        {"riordan", suite_riordan},
        {"contiguity", suite_contiguity},
        {"closed_forms", suite_closed_forms},
        {"egf_all", suite_egf_all},
        {"derivation", suite_derivation},
        {"conjecture", suite_conjecture},
        {"oeis", suite_oeis},
    };
    return table;
}

} // namespace

std::vector<SuiteResult> run_suite(const std::string& name, const VerifyOptions& options) {
    auto it = suites().find(name);
    if (it == suites().end())
        throw DomainError("unknown verification suite '" + name + "'");
    std::vector<SuiteResult> results = it->second(options);
    std::sort(results.begin(), results.end(),
              [](const SuiteResult& a, const SuiteResult& b) { return a.id < b.id; });
    return results;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : suites()) v.push_back(name);
        return v;
    }();
    return names;
}

} // namespace gkp
