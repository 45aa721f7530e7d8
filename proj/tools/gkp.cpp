// Command-line front end: generation, transformation, and verification of
// triangular-recurrence number triangles over exact rationals.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gkp/characteristics.hpp"
#include "gkp/derivation.hpp"
#include "gkp/errors.hpp"
#include "gkp/families.hpp"
#include "gkp/io.hpp"
#include "gkp/transforms.hpp"
#include "gkp/verify_suites.hpp"

namespace {

using namespace gkp;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw DomainError("cannot open output file '" + out_path + "'");
    os << text;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> vals;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        vals.push_back(Rat::parse(text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return vals;
}

Triangle triangle_from_options(const std::string& params_text, const std::string& family,
                               const std::string& family_args, long n) {
    if (!params_text.empty() && !family.empty())
        throw DomainError("give either --params or --family, not both");
    if (!params_text.empty())
        return Triangle::from_recurrence(parse_params(params_text), n);
    if (family.empty()) throw DomainError("one of --params or --family is required");
    std::vector<Rat> args = parse_rat_list(family_args);
    if (args.size() != 3)
        throw DomainError("--args must carry b,c0,cInf for family '" + family + "'");
    return family_triangle({family_by_name(family), args[0], args[1], args[2]}, n);
}

int cmd_gen(const std::string& params_text, const std::string& family,
            const std::string& family_args, long n, const std::string& format,
            const std::string& normalize, bool abs_flag, const std::string& out_path) {
    Triangle tri = triangle_from_options(params_text, family, family_args, n);
    Normalization norm = Normalization::parse(normalize, abs_flag);
    write_output(triangle_to_format(tri, format, norm), out_path);
    return 0;
}

int cmd_transform(const std::string& params_text, const std::string& in_path,
                  const std::string& elem, long n, const std::string& format,
                  const std::string& out_path) {
    std::optional<Triangle> tri;
    if (!in_path.empty()) {
        std::ifstream is(in_path, std::ios::binary);
        if (!is) throw DomainError("cannot open input file '" + in_path + "'");
        std::stringstream buffer;
        buffer << is.rdbuf();
        tri = triangle_from_json(buffer.str());
    } else if (!params_text.empty()) {
        tri = Triangle::from_recurrence(parse_params(params_text), n);
    } else {
        throw DomainError("transform needs --params or --in <file.json>");
    }

    const S3Elem& e = s3_element_by_name(elem);
    Triangle moved = e.op == S3Op::identity ? *tri : s3_transform_rows(e, *tri);
    Normalization none;
    write_output(triangle_to_format(moved, format, none), out_path);
    if (format != "json") {
        const GkpParams& q = moved.params();
        std::cerr << "transformed parameters: " << q.str() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& options) {
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names.push_back(suite);
    bool all_pass = true;
    long findings = 0;
    for (const std::string& name : names) {
        for (const SuiteResult& r : run_suite(name, options)) {
            const char* tag = r.pass ? (r.finding ? "FIND" : "ok  ") : "FAIL";
            std::cout << "[" << tag << "] " << r.id;
            if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
            std::cout << "\n";
            all_pass = all_pass && r.pass;
            if (r.finding) ++findings;
        }
    }
    if (findings > 0)
        std::cout << findings << " finding(s) reported against unproved statements\n";
    return all_pass ? 0 : 1;
}

int cmd_egf(const std::string& params_text, long order) {
    Triangle tri = Triangle::from_recurrence(parse_params(params_text), order - 1);
    SeriesP egf = egf_truncated(tri);
    for (long i = 0; i < egf.order(); ++i)
        std::cout << "z^" << i << ": " << egf.coeff(i).str() << "\n";
    return 0;
}

int cmd_closed_form(const std::string& id, const std::vector<std::string>& arg_list,
                    long n, long k, const std::string& variant, bool list) {
    if (list) {
        for (const RegistryEntry& e : formula_registry()) {
            std::cout << e.id << ": " << e.description << "\n";
            if (!e.rat_args.empty()) {
                std::cout << "  args:";
                for (const std::string& a : e.rat_args) std::cout << " " << a;
                std::cout << "\n";
            }
            if (!e.variants.empty()) {
                std::cout << "  variants:";
                for (const std::string& v : e.variants) std::cout << " " << v;
                std::cout << "\n";
            }
        }
        return 0;
    }
    FormulaArgs args;
    args.n = n;
    args.k = k;
    args.variant = variant;
    for (const std::string& kv : arg_list) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw DomainError("formula arguments look like name=value, got '" + kv + "'");
        args.rat[kv.substr(0, eq)] = Rat::parse(kv.substr(eq + 1));
    }
    const RegistryEntry& entry = registry_entry(id);
    Rat value = entry.eval(args);
    Rat reference = entry.reference(args);
    std::cout << value.str() << "\n";
    if (value != reference) {
        std::cerr << "closed form disagrees with its recurrence cross-check (" << reference.str()
                  << ")\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic triangular-recurrence toolkit"};
    app.require_subcommand(1);

    // gen
    std::string params_text, family, family_args, format = "csv", normalize = "none";
    std::string out_path;
    bool abs_flag = false;
    long n = 12;
    CLI::App* gen = app.add_subcommand("gen", "generate a triangle");
    gen->add_option("--params", params_text, "six rationals a,b,g,a',b',g'");
    gen->add_option("--family", family,
                    "named family: narayana-s|narayana-rs|narayana-e|sectan-s|sectan-rs|sectan-e");
    gen->add_option("--args", family_args, "family arguments b,c0,cInf");
    gen->add_option("--n", n, "number of rows to generate (0..n)");
    gen->add_option("--format", format, "csv|json|bfile");
    gen->add_option("--normalize", normalize, "none|factorial|rising:<c>");
    gen->add_flag("--abs", abs_flag, "strip signs on export");
    gen->add_option("--out", out_path, "output path (default: stdout)");

    // transform
    std::string elem = "id", in_path;
    CLI::App* transform = app.add_subcommand("transform", "apply a group element to a triangle");
    transform->add_option("--params", params_text, "six rationals a,b,g,a',b',g'");
    transform->add_option("--in", in_path, "input triangle (json format of gen)");
    transform->add_option("--elem", elem, "id|rt|ubt|rt-ubt-rt|ubt-rt|rt-ubt");
    transform->add_option("--n", n, "rows when generating from --params");
    transform->add_option("--format", format, "csv|json|bfile");
    transform->add_option("--out", out_path, "output path (default: stdout)");

    // verify
    std::string suite;
    VerifyOptions options;
    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--n", options.depth, "depth bound");
    verify->add_option("--samples", options.samples, "random parameter sets per property");
    verify->add_option("--seed", options.seed, "RNG seed (runs are bit-reproducible)");

    // egf
    long order = 8;
    CLI::App* egf = app.add_subcommand("egf", "print truncated EGF coefficients");
    egf->add_option("--params", params_text, "six rationals a,b,g,a',b',g'")->required();
    egf->add_option("--order", order, "truncation order (exclusive)");

    // closed-form
    std::string formula_id, variant;
    std::vector<std::string> arg_list;
    long kk = 0;
    bool list_registry = false;
    CLI::App* closed = app.add_subcommand("closed-form", "evaluate a registered closed form");
    closed->add_option("--id", formula_id, "registry identifier");
    closed->add_option("--arg", arg_list, "named rational argument name=value (repeatable)");
    closed->add_option("--n", n, "row index");
    closed->add_option("--k", kk, "column index");
    closed->add_option("--variant", variant, "entry variant, when the formula has variants");
    closed->add_flag("--list", list_registry, "list the registry and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(params_text, family, family_args, n, format, normalize, abs_flag,
                           out_path);
        if (transform->parsed())
            return cmd_transform(params_text, in_path, elem, n, format, out_path);
        if (verify->parsed()) return cmd_verify(suite, options);
        if (egf->parsed()) return cmd_egf(params_text, order);
        if (closed->parsed())
            return cmd_closed_form(formula_id, arg_list, n, kk, variant, list_registry);
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
