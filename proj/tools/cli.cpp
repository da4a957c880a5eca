#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "torusconv/basis_change.hpp"
#include "torusconv/conv_polynomials.hpp"
#include "torusconv/convolution.hpp"
#include "torusconv/verify.hpp"

namespace torusconv::cli
{

namespace
{

using nlohmann::json;

constexpr int max_coeff_order = 40;
constexpr int max_zero_order = 60;

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Globals
{
    double tau_re = 0.0;
    double tau_im = 1.0;
    int quad_points = 256;
    double series_tol = 1e-16;
    std::uint64_t seed = default_seed;
    std::string format;
    std::string out;

    TorusParams params() const { return TorusParams::make({tau_re, tau_im}, quad_points, series_tol); }
};

class usage_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

json rational_triple(const BigRational &r, int dz_power)
{
    json j;
    const BigInteger &n = r.get_num();
    const BigInteger &d = r.get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
        j["num"] = n.get_si();
        j["den"] = d.get_si();
    } else {
        j["num"] = n.get_str();
        j["den"] = d.get_str();
    }
    j["dz_power"] = dz_power;
    return j;
}

// ------------------------------------------------------------------ eval

struct EvalOptions
{
    std::string fn;
    std::vector<std::string> xs;
    std::string y;
    int n = -1;
    std::string f;
    std::string g;
    std::vector<double> grid_re;
    std::vector<double> grid_im;
};

PeriodicFunction named_function(const std::string &name, const std::shared_ptr<const Weierstrass> &w)
{
    if (name == "Z") {
        return functions::eisenstein_zeta(w);
    }
    if (name == "Zprime") {
        return functions::eisenstein_zeta_prime(w);
    }
    if (name == "wp") {
        return functions::weierstrass_p(w);
    }
    if (name == "wp_prime") {
        return functions::weierstrass_p_prime(w);
    }
    if (name == "one") {
        return functions::constant(1.0);
    }
    if (name.size() > 1 && name[0] == 'g' &&
        std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        return functions::kernel(w, std::stoi(name.substr(1)));
    }
    throw usage_error("unknown convolution factor '" + name + "' (Z, Zprime, wp, wp_prime, one, g<k>)");
}

std::function<cplx(cplx)> build_evaluator(const EvalOptions &o, const TorusParams &params)
{
    auto w = std::make_shared<const Weierstrass>(params);
    auto need_n = [&o](int lo, int hi) {
        if (o.n < lo || o.n > hi) {
            throw usage_error("--fn " + o.fn + " needs --n in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                              "]");
        }
    };
    if (o.fn == "theta") {
        return [w](cplx x) { return w->theta().theta(x); };
    }
    if (o.fn == "Z") {
        return [w](cplx x) { return w->zeta_e(x); };
    }
    if (o.fn == "zeta") {
        return [w](cplx x) { return w->zeta_w(x); };
    }
    if (o.fn == "wp") {
        return [w](cplx x) { return w->wp(x); };
    }
    if (o.fn == "wp_prime") {
        return [w](cplx x) { return w->wp_prime(x); };
    }
    if (o.fn == "F") {
        if (o.y.empty()) {
            throw usage_error("--fn F needs --y");
        }
        const cplx y = parse_complex(o.y);
        return [w, y](cplx x) { return w->theta().eisenstein_kronecker(x, y); };
    }
    if (o.fn == "g") {
        need_n(0, w->theta().max_kernel_order());
        const int n = o.n;
        return [w, n](cplx x) { return w->theta().g_kernel(n, x); };
    }
    if (o.fn == "zconv" || o.fn == "wpconv") {
        auto basis = std::make_shared<const BasisEvaluator>(w);
        if (o.fn == "zconv") {
            need_n(0, basis->n_max());
            const int n = o.n;
            return [basis, n](cplx x) { return basis->z_conv_pow(n, x); };
        }
        need_n(1, basis->n_max());
        const int n = o.n;
        return [basis, n](cplx x) { return basis->wp_conv_pow(n, x); };
    }
    if (o.fn == "A") {
        need_n(0, 30);
        auto basis = std::make_shared<const BasisEvaluator>(w);
        const int n = o.n;
        return [basis, n](cplx x) { return basis->A_fn(n, x); };
    }
    if (o.fn == "conv") {
        if (o.f.empty() || o.g.empty()) {
            throw usage_error("--fn conv needs --f and --g");
        }
        const PeriodicFunction f = named_function(o.f, w);
        const PeriodicFunction g = named_function(o.g, w);
        return [f, g, params](cplx x) { return conv_plus(f, g, x, params); };
    }
    throw usage_error("unknown --fn '" + o.fn + "'");
}

std::vector<double> grid_axis(const std::vector<double> &axis, const char *flag)
{
    if (axis.size() != 3 || !(axis[2] >= 1.0) || axis[2] != std::floor(axis[2])) {
        throw usage_error(std::string(flag) + " takes LO HI COUNT");
    }
    const int count = static_cast<int>(axis[2]);
    std::vector<double> out;
    for (int i = 0; i < count; ++i) {
        out.push_back(count == 1 ? axis[0] : axis[0] + (axis[1] - axis[0]) * i / (count - 1));
    }
    return out;
}

struct Row
{
    cplx x;
    std::optional<cplx> value;
    std::string status = "ok";
};

int cmd_eval(const Globals &gl, const EvalOptions &o, std::ostream &out)
{
    const TorusParams params = gl.params();
    const auto f = build_evaluator(o, params);

    std::vector<cplx> points;
    for (const auto &s : o.xs) {
        points.push_back(parse_complex(s));
    }
    const bool grid = !o.grid_re.empty() || !o.grid_im.empty();
    if (grid) {
        const auto re = grid_axis(o.grid_re.empty() ? std::vector<double>{0.0, 0.0, 1.0} : o.grid_re, "--grid-re");
        const auto im = grid_axis(o.grid_im.empty() ? std::vector<double>{0.0, 0.0, 1.0} : o.grid_im, "--grid-im");
        for (double b : im) {
            for (double a : re) {
                points.emplace_back(a, b);
            }
        }
    }
    if (points.empty()) {
        throw usage_error("eval needs --x or a grid");
    }

    std::vector<Row> rows;
    for (const cplx x : points) {
        Row r{x, std::nullopt};
        try {
            r.value = f(x);
        } catch (const pole_proximity_error &) {
            r.status = "pole";
        } catch (const strip_violation_error &) {
            r.status = "strip";
        } catch (const std::domain_error &) {
            r.status = "domain";
        }
        rows.push_back(r);
    }

    const std::string format = gl.format.empty() ? (grid ? "csv" : "text") : gl.format;
    if (format == "json") {
        json arr = json::array();
        for (const auto &r : rows) {
            json j{{"x", {r.x.real(), r.x.imag()}}, {"status", r.status}};
            j["value"] = r.value ? json{r.value->real(), r.value->imag()} : json(nullptr);
            arr.push_back(j);
        }
        out << json{{"fn", o.fn}, {"values", arr}}.dump(2) << "\n";
    } else if (format == "csv") {
        out << "re(x),im(x),re(f),im(f),status\n";
        for (const auto &r : rows) {
            out << num(r.x.real()) << "," << num(r.x.imag()) << ",";
            if (r.value) {
                out << num(r.value->real()) << "," << num(r.value->imag());
            } else {
                out << "nan,nan";
            }
            out << "," << r.status << "\n";
        }
    } else {
        for (const auto &r : rows) {
            if (r.value) {
                out << num(r.value->real()) << " " << num(r.value->imag()) << "\n";
            } else {
                out << "error: " << r.status << "\n";
            }
        }
    }
    return 0;
}

// ------------------------------------------------------------------ coeffs

int cmd_coeffs(const Globals &gl, const std::string &matrix, const std::string &poly, int n, std::ostream &out)
{
    if ((matrix.empty()) == (poly.empty())) {
        throw usage_error("coeffs needs exactly one of --matrix c|C or --poly p");
    }
    if (n < 0 || n > max_coeff_order) {
        throw std::out_of_range("coeffs: --n must lie in [0, " + std::to_string(max_coeff_order) + "]");
    }
    const std::string format = gl.format.empty() ? "json" : gl.format;
    std::vector<std::pair<int, GradedRational>> entries;
    std::string kind;
    if (!poly.empty()) {
        if (poly != "p") {
            throw usage_error("--poly accepts only p");
        }
        if (n < 1) {
            throw std::out_of_range("coeffs: p_n needs n >= 1");
        }
        kind = "p";
        const PnPolynomial p = p_poly(n);
        for (int k = 0; k <= n; ++k) {
            entries.emplace_back(k, GradedRational(p.poly.coeff(k), 0));
        }
    } else {
        if (matrix != "c" && matrix != "C") {
            throw usage_error("--matrix accepts c or C");
        }
        kind = matrix;
        const CoeffMatrix m = matrix == "c" ? CoeffMatrix::c_matrix(n) : CoeffMatrix::C_matrix(n);
        for (int k = 0; k <= n; ++k) {
            entries.emplace_back(k, m.at(n, k));
        }
    }

    if (format == "json") {
        json arr = json::array();
        for (const auto &[k, v] : entries) {
            const json t = rational_triple(v.coeff, kind == "p" ? 0 : n - k);
            arr.push_back(json{{"k", k}, {"num", t["num"]}, {"den", t["den"]}, {"dz_power", t["dz_power"]}});
        }
        json j{{"kind", kind}, {"n", n}};
        j[kind == "p" ? "coefficients" : "entries"] = arr;
        out << j.dump(2) << "\n";
    } else {
        out << "k,num,den,dz_power\n";
        for (const auto &[k, v] : entries) {
            const int power = kind == "p" ? 0 : n - k;
            out << k << "," << v.coeff.get_num().get_str() << "," << v.coeff.get_den().get_str() << "," << power
                << "\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------------ zeros

int cmd_zeros(const Globals &gl, int n, int bins, std::ostream &out)
{
    if (n < 1 || n > max_zero_order) {
        throw std::out_of_range("zeros: --n must lie in [1, " + std::to_string(max_zero_order) + "]");
    }
    const std::vector<double> zeros = p_zeros(n);
    const std::vector<double> interior =
        zeros.size() > 2 ? std::vector<double>(zeros.begin() + 1, zeros.end() - 1) : std::vector<double>{};
    const auto hist = zero_histogram(interior, bins);
    const std::string format = gl.format.empty() ? "csv" : gl.format;
    if (format == "json") {
        json h = json::array();
        for (const auto &b : hist) {
            h.push_back({{"lo", b.lo}, {"hi", b.hi}, {"empirical", b.empirical}, {"rho", b.rho}});
        }
        json j{{"n", n}, {"roots", zeros}, {"histogram", h}};
        j["ks"] = interior.empty() ? json(nullptr) : json(ks_distance(interior));
        out << j.dump(2) << "\n";
    } else {
        out << "index,root\n";
        for (std::size_t i = 0; i < zeros.size(); ++i) {
            out << i << "," << num(zeros[i]) << "\n";
        }
        out << "\nbin_lo,bin_hi,empirical_density,rho_density\n";
        for (const auto &b : hist) {
            out << num(b.lo) << "," << num(b.hi) << "," << num(b.empirical) << "," << num(b.rho) << "\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const Globals &gl, const std::string &suite, bool wall_time, std::ostream &out)
{
    const VerifyReport r = run_suite(suite, gl.params(), gl.seed);
    const std::string format = gl.format.empty() ? "json" : gl.format;
    if (format == "json") {
        out << to_json(r, wall_time).dump(2) << "\n";
    } else {
        out << "id,criterion,residual,tolerance,pass,report_only,verdict\n";
        for (const auto &c : r.checks) {
            out << c.id << "," << c.criterion << "," << (c.residual ? num(*c.residual) : "") << ","
                << (c.tolerance ? num(*c.tolerance) : "") << "," << (c.pass ? "true" : "false") << ","
                << (c.report_only ? "true" : "false") << ",\"" << c.verdict << "\"\n";
        }
    }
    return r.pass ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Quasi-elliptic functions on the complex torus", "torusconv"};
    app.require_subcommand(1);

    Globals gl;
    app.add_option("--tau-re", gl.tau_re, "Re(tau)")->capture_default_str();
    app.add_option("--tau-im", gl.tau_im, "Im(tau), at least 0.5")->capture_default_str();
    app.add_option("--quad-points", gl.quad_points, "trapezoid and ring nodes")->capture_default_str();
    app.add_option("--series-tol", gl.series_tol, "q-series truncation tolerance")->capture_default_str();
    app.add_option("--seed", gl.seed, "seed for sampled verification points")->capture_default_str();
    app.add_option("--format", gl.format, "json or csv (text for single-point eval)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", gl.out, "write output to FILE");

    EvalOptions eo;
    auto *eval = app.add_subcommand("eval", "evaluate a function at points or on a grid");
    eval->add_option("--fn", eo.fn, "theta|Z|zeta|wp|wp_prime|F|g|zconv|wpconv|conv|A")->required();
    eval->add_option("--x", eo.xs, "evaluation point(s), e.g. 0.3+0.2i");
    eval->add_option("--y", eo.y, "second argument of F");
    eval->add_option("--n", eo.n, "order for g, zconv, wpconv, A");
    eval->add_option("--f", eo.f, "first convolution factor");
    eval->add_option("--g", eo.g, "second convolution factor");
    eval->add_option("--grid-re", eo.grid_re, "LO HI COUNT")->expected(3);
    eval->add_option("--grid-im", eo.grid_im, "LO HI COUNT")->expected(3);

    std::string matrix;
    std::string poly;
    int coeff_n = 0;
    auto *coeffs = app.add_subcommand("coeffs", "exact transition coefficients or p_n");
    coeffs->add_option("--matrix", matrix, "c or C");
    coeffs->add_option("--poly", poly, "p");
    coeffs->add_option("--n", coeff_n, "row index")->required();

    int zeros_n = 0;
    int bins = 20;
    auto *zeros = app.add_subcommand("zeros", "zeros of p_n and their density histogram");
    zeros->add_option("--n", zeros_n, "polynomial index")->required();
    zeros->add_option("--bins", bins, "histogram bins")->capture_default_str();

    std::string suite;
    bool no_wall_time = false;
    auto *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(verify_suite_names()));
    verify->add_flag("--no-wall-time", no_wall_time, "omit wall_time from the report");

    // global flags may follow the subcommand
    for (auto *sub : {eval, coeffs, zeros, verify}) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    std::ofstream file;
    std::ostream *sink = &out;
    if (!gl.out.empty()) {
        file.open(gl.out);
        if (!file) {
            err << "error: cannot open " << gl.out << "\n";
            return 2;
        }
        sink = &file;
    }

    try {
        if (*eval) {
            return cmd_eval(gl, eo, *sink);
        }
        if (*coeffs) {
            return cmd_coeffs(gl, matrix, poly, coeff_n, *sink);
        }
        if (*zeros) {
            return cmd_zeros(gl, zeros_n, bins, *sink);
        }
        return cmd_verify(gl, suite, !no_wall_time, *sink);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace torusconv::cli
