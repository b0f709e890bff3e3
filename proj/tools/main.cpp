// gammakit: pole-expansion approximations of the gamma function.
// Subcommands: coeffs (generate coefficient records / table columns),
// solve-r (calibrate the shift parameter), eval (evaluate Gamma_N at a
// point), sweep (relative-error sweeps to CSV).

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gammakit/analysis.hpp"
#include "gammakit/coeff_io.hpp"

using namespace gammakit;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct ExpansionOptions {
    std::string method = "lanczos";
    int n = 8;
    std::string r_text;        // explicit r as a decimal literal
    std::string zbar_text;     // finite calibration point
    std::string r_target;      // "inf"
    std::string nodes_text;    // comma list for --method nodes
    int range_end = 170;
    std::string coeff_file;
};

void add_expansion_flags(CLI::App* cmd, ExpansionOptions& opt, bool with_coeff_file) {
    cmd->add_option("--method", opt.method,
                    "spouge|lanczos|nodes|svd|chebyshev|geometric|stirling")
        ->default_str("lanczos");
    cmd->add_option("--n", opt.n, "number of pole terms N")->default_val(8);
    cmd->add_option("--r", opt.r_text, "explicit shift parameter r (decimal)");
    cmd->add_option("--zbar", opt.zbar_text, "calibrate r so Gamma_N is exact at zbar");
    cmd->add_option("--r-target", opt.r_target, "'inf' calibrates c_inf = sqrt(2 pi)");
    cmd->add_option("--nodes", opt.nodes_text, "comma list of interpolation nodes (method=nodes)");
    cmd->add_option("--range-end", opt.range_end, "last least-squares sample (method=svd)")
        ->default_val(170);
    if (with_coeff_file)
        cmd->add_option("--coeff-file", opt.coeff_file, "load a coefficient record instead");
}

SchemeSpec scheme_from(const ExpansionOptions& opt, PrecisionContext ctx) {
    SchemeSpec scheme;
    scheme.method = method_from_name(opt.method);
    scheme.svd_range_end = opt.range_end;
    if (scheme.method == Method::nodes) {
        if (opt.nodes_text.empty())
            throw argument_error("--method nodes requires --nodes");
        std::vector<BigReal> pts;
        std::stringstream ss(opt.nodes_text);
        std::string item;
        while (std::getline(ss, item, ','))
            pts.push_back(BigReal::from_string(item, ctx));
        scheme.custom_nodes = NodeSet(std::move(pts), NodeSet::Generator::custom);
    } else if (!opt.nodes_text.empty()) {
        throw argument_error("--nodes only applies to --method nodes");
    }
    return scheme;
}

PoleExpansion make_expansion(const ExpansionOptions& opt, const ReferenceOracle& oracle,
                             PrecisionContext ctx) {
    if (!opt.coeff_file.empty()) return load_coefficients_file(opt.coeff_file);

    const bool has_r = !opt.r_text.empty();
    const bool has_zbar = !opt.zbar_text.empty();
    const bool has_inf = !opt.r_target.empty();
    if (has_inf && opt.r_target != "inf")
        throw argument_error("--r-target only accepts 'inf' (use --zbar for finite targets)");

    SchemeSpec scheme = scheme_from(opt, ctx);
    if (scheme.method == Method::stirling) {
        if (has_zbar || has_inf) throw argument_error("the stirling scheme has a fixed r = 8");
        if (has_r && opt.r_text != "8") throw argument_error("the stirling scheme has r = 8");
        if (opt.n != 8) throw argument_error("the stirling scheme has N = 8");
        return stirling_pole_expansion(ctx);
    }

    if (static_cast<int>(has_r) + static_cast<int>(has_zbar) + static_cast<int>(has_inf) != 1)
        throw argument_error("give exactly one of --r, --zbar, --r-target inf");

    if (has_r)
        return build_expansion(scheme, opt.n, BigReal::from_string(opt.r_text, ctx), oracle, ctx);
    RTarget target = has_inf ? RTarget::infinity()
                             : RTarget::finite(BigReal::from_string(opt.zbar_text, ctx));
    return build_expansion_for_target(scheme, opt.n, target, oracle, ctx);
}

std::complex<double> parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw argument_error("empty complex literal");

    // forms: a, bi, a+bi, a-bi, with i/-i/+i shorthands
    auto parse_num = [](const std::string& t, bool imag_unit) -> double {
        if (imag_unit && (t.empty() || t == "+")) return 1.0;
        if (imag_unit && t == "-") return -1.0;
        size_t used = 0;
        double v = std::stod(t, &used);
        if (used != t.size()) throw argument_error("bad number in complex literal");
        return v;
    };

    try {
        if (s.back() == 'i') {
            std::string body = s.substr(0, s.size() - 1);
            // split at the last +/- that is not an exponent sign and not leading
            for (size_t pos = body.size(); pos-- > 1;) {
                char c = body[pos];
                if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
                    return {parse_num(body.substr(0, pos), false),
                            parse_num(body.substr(pos), true)};
                }
            }
            return {0.0, parse_num(body, true)};
        }
        return {parse_num(s, false), 0.0};
    } catch (const std::exception&) {
        throw argument_error("cannot parse complex literal '" + raw + "' (expected a+bi)");
    }
}

std::string fraction_text(long m) {
    if (m > 20) return "";
    unsigned long long fac = 1;
    for (long k = 2; k <= m; ++k) fac *= static_cast<unsigned long long>(k);
    return std::string(m % 2 == 0 ? "" : "-") + "1/" + std::to_string(fac);
}

void print_paper_table(const PoleExpansion& e, std::ostream& out) {
    char buf[64];
    out << "method " << method_name(e.method) << ", N = " << e.n_poles << "\n";
    std::snprintf(buf, sizeof buf, "%.8f", e.r.to_double());
    out << "r      " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.4e", e.c_inf.to_double());
    out << "c_inf  " << buf << "\n";
    for (int n = 0; n < e.n_poles; ++n) {
        std::snprintf(buf, sizeof buf, "%.4e", e.c[static_cast<size_t>(n)].to_double());
        out << "c_" << (n + 1) << "    " << buf << "\n";  // printed labels are 1-based
    }
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw argument_error("cannot open output file '" + path + "'");
    return file;
}

int cmd_coeffs(const ExpansionOptions& opt, int digits, bool paper_table,
               const std::string& out_path) {
    PrecisionContext ctx{digits};
    ReferenceOracle oracle(30, 30, ctx);
    PoleExpansion e = make_expansion(opt, oracle, ctx);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    if (paper_table)
        print_paper_table(e, out);
    else
        write_coefficients(e, out);
    return 0;
}

int cmd_solve_r(const ExpansionOptions& opt, int digits, bool table) {
    PrecisionContext ctx{digits};
    ReferenceOracle oracle(30, 30, ctx);
    SchemeSpec scheme = scheme_from(opt, ctx);
    char buf[32];

    if (table) {
        // the spouge grid (columns as generated; the published table's
        // "r(1.0)"/"r(2.0)" headers correspond to zbar = 15 and 20) and the
        // integer-node grid with the extra r(inf) column
        const double zbars[] = {0.5, 15.0, 20.0, 50.0, 100.0};
        const bool with_inf = scheme.method != Method::spouge;
        std::cout << "N";
        for (double zb : zbars) std::printf("      r(%.1f)", zb);
        if (with_inf) std::printf("      r(inf)");
        std::cout << "\n";
        for (int n = 1; n <= 10; ++n) {
            std::printf("%-2d", n);
            for (double zb : zbars) {
                BigReal r = solve_r_finite(scheme, n, BigReal::from_double(zb, ctx), oracle, ctx);
                std::printf("  %11.8f", r.to_double());
            }
            if (with_inf)
                std::printf("  %11.8f", solve_r_infinity(scheme, n, oracle, ctx).to_double());
            std::cout << "\n";
        }
        return 0;
    }

    const bool has_zbar = !opt.zbar_text.empty();
    const bool has_inf = !opt.r_target.empty();
    if (has_inf && opt.r_target != "inf")
        throw argument_error("--r-target only accepts 'inf'");
    if (static_cast<int>(has_zbar) + static_cast<int>(has_inf) != 1)
        throw argument_error("give exactly one of --zbar, --r-target inf");
    BigReal r = has_inf
                    ? solve_r_infinity(scheme, opt.n, oracle, ctx)
                    : solve_r_finite(scheme, opt.n, BigReal::from_string(opt.zbar_text, ctx),
                                     oracle, ctx);
    std::snprintf(buf, sizeof buf, "%.8f", r.to_double());
    std::cout << buf << "\n";
    return 0;
}

int cmd_eval(const ExpansionOptions& opt, int digits, const std::string& z_text) {
    PrecisionContext ctx{digits};
    ReferenceOracle oracle(30, 30, ctx);
    PoleExpansion e = make_expansion(opt, oracle, ctx);
    GammaApproximation g = GammaApproximation::from_expansion(e);
    std::complex<double> z = parse_complex(z_text);

    EvalOutcome out = evaluate(g, z);
    char buf[96];
    if (auto* v = std::get_if<std::complex<double>>(&out)) {
        if (v->imag() == 0.0)
            std::snprintf(buf, sizeof buf, "gamma = %.17g", v->real());
        else
            std::snprintf(buf, sizeof buf, "gamma = %.17g %+.17gi", v->real(), v->imag());
        std::cout << buf << "\n";
    } else if (auto* p = std::get_if<PoleHit>(&out)) {
        std::string frac = fraction_text(p->index);
        std::snprintf(buf, sizeof buf, "pole at z = -%ld, residue %s (%.17g)", p->index,
                      frac.empty() ? "~0" : frac.c_str(), p->residue);
        std::cout << buf << "\n";
    } else {
        auto& o = std::get<Overflow>(out);
        std::snprintf(buf, sizeof buf, "out of double range; log_gamma = %.17g %+.17gi",
                      o.log_gamma.real(), o.log_gamma.imag());
        std::cout << buf << "\n";
    }
    return 0;
}

int cmd_sweep(const ExpansionOptions& opt, int digits, const std::string& axis_name, double lo,
              double hi, int count, bool linear, const std::string& out_path,
              const std::string& compare_method) {
    PrecisionContext ctx{std::max(digits, 30)};
    ReferenceOracle oracle(30, 30, ctx);
    PrecisionContext actx{digits};

    SweepAxis axis;
    if (axis_name == "real")
        axis = SweepAxis::real_line;
    else if (axis_name == "critical")
        axis = SweepAxis::critical_line;
    else
        throw argument_error("--axis must be 'real' or 'critical'");

    PoleExpansion e = make_expansion(opt, oracle, ctx);
    SweepResult result = sweep(e, axis, lo, hi, count, !linear, oracle, actx);

    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw argument_error("cannot open output file '" + out_path + "'");
        write_csv(result, file);
    } else {
        write_csv(result, std::cout);
    }

    auto report_max = [](const SweepResult& sr, const std::string& label) {
        double worst = -1, at = 0;
        for (const auto& s : sr.samples)
            if (s.rel_err > worst) {
                worst = s.rel_err;
                at = s.coord;
            }
        std::printf("%s: max rel err %.6e at coord %.17g\n", label.c_str(), worst, at);
        return worst;
    };
    double base_max = report_max(result, result.expansion_label);

    if (!compare_method.empty()) {
        ExpansionOptions other = opt;
        other.method = compare_method;
        other.coeff_file.clear();
        PoleExpansion e2 = make_expansion(other, oracle, ctx);
        SweepResult r2 = sweep(e2, axis, lo, hi, count, !linear, oracle, actx);
        double other_max = report_max(r2, r2.expansion_label);
        std::printf("max-error ratio (%s / %s) = %.2f\n", r2.expansion_label.c_str(),
                    result.expansion_label.c_str(), other_max / base_max);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pole-expansion gamma approximations: coefficients, calibration, evaluation, error sweeps"};
    app.require_subcommand(1);

    ExpansionOptions copt, sopt, eopt, wopt;
    int digits_coeffs = 50, digits_solve = 50, digits_eval = 50, digits_sweep = 40;
    bool paper_table = false, table = false, linear = false;
    std::string out_path, z_text, sweep_out, axis_name = "real", compare_method;
    double lo = 0.5, hi = 100.0;
    int count = 400;

    CLI::App* coeffs = app.add_subcommand("coeffs", "generate a coefficient record");
    add_expansion_flags(coeffs, copt, false);
    coeffs->add_option("--digits", digits_coeffs, "working precision (decimal digits)")->default_val(50);
    coeffs->add_flag("--paper-table", paper_table, "print r, c_inf, c_1..c_N at 5 significant digits");
    coeffs->add_option("--out", out_path, "write to a file instead of stdout");

    CLI::App* solver = app.add_subcommand("solve-r", "calibrate the shift parameter r");
    add_expansion_flags(solver, sopt, false);
    solver->add_option("--digits", digits_solve, "working precision")->default_val(50);
    solver->add_flag("--table", table, "print the full N = 1..10 calibration grid");

    CLI::App* eval = app.add_subcommand("eval", "evaluate Gamma_N at a complex point");
    add_expansion_flags(eval, eopt, true);
    eval->add_option("--digits", digits_eval, "working precision for generation")->default_val(50);
    eval->add_option("--z", z_text, "complex point, e.g. 5, -3, 1.5+2i")->required();

    CLI::App* swp = app.add_subcommand("sweep", "relative-error sweep to CSV");
    add_expansion_flags(swp, wopt, true);
    swp->add_option("--digits", digits_sweep, "analysis precision")->default_val(40);
    swp->add_option("--axis", axis_name, "real (z = x) or critical (z = 1/2 + iy)")->default_str("real");
    swp->add_option("--lo", lo, "axis start")->required();
    swp->add_option("--hi", hi, "axis end")->required();
    swp->add_option("--count", count, "number of samples")->default_val(400);
    swp->add_flag("--linear", linear, "linear spacing (default: logarithmic)");
    swp->add_option("--out", sweep_out, "CSV output path (default: stdout)");
    swp->add_option("--compare", compare_method, "also sweep a second method and report the ratio");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (coeffs->parsed()) return cmd_coeffs(copt, digits_coeffs, paper_table, out_path);
        if (solver->parsed()) return cmd_solve_r(sopt, digits_solve, table);
        if (eval->parsed()) return cmd_eval(eopt, digits_eval, z_text);
        if (swp->parsed())
            return cmd_sweep(wopt, digits_sweep, axis_name, lo, hi, count, linear, sweep_out,
                             compare_method);
    } catch (const no_root_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const conditioning_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
