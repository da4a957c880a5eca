#include "torusconv/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace torusconv
{

namespace
{

// Distance from im to the nearest line Im = base + k * period.
double distance_to_lines(double im, double base, double period)
{
    const double t = (im - base) / period;
    return std::abs(t - std::round(t)) * period;
}

std::string describe(double im)
{
    std::ostringstream os;
    os << im;
    return os.str();
}

void require_line(const PeriodicFunction &f, double im, const TorusParams &params, const char *op)
{
    const double clearance = f.line_clearance(im, params.tau());
    if (clearance < params.contour_guard()) {
        throw strip_violation_error(std::string(op) + ": contour for " + f.name() + " at Im = " + describe(im) +
                                    " is within the guard distance of a singular line");
    }
}

// mean_j f(t_j + i y) over t_j = j / n (optionally offset by a real shift)
std::vector<cplx> sample_line(const PeriodicFunction &f, double re0, double sign, double im, int n)
{
    std::vector<cplx> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double t = static_cast<double>(j) / n;
        out[static_cast<std::size_t>(j)] = f(cplx(re0 + sign * t, im));
    }
    return out;
}

double nearest_translate_distance(cplx point, cplx location, const TorusParams &params)
{
    const double d = lattice_distance(point - location, params);
    return d < params.pole_guard() ? params.shortest_period() : d;
}

} // namespace

PeriodicFunction::PeriodicFunction(std::string name, ComplexFunction evaluator, std::vector<Strip> strips,
                                   std::vector<PoleEntry> poles)
    : name_(std::move(name)), evaluator_(std::move(evaluator)), strips_(std::move(strips)), poles_(std::move(poles))
{
    if (!evaluator_) {
        throw std::invalid_argument("PeriodicFunction: empty evaluator");
    }
    if (strips_.empty()) {
        throw std::invalid_argument("PeriodicFunction: at least one strip is required");
    }
    for (const auto &p : poles_) {
        if (p.max_order < 1) {
            throw std::invalid_argument("PeriodicFunction: pole orders must be positive");
        }
    }
}

cplx PeriodicFunction::operator()(cplx x) const
{
    if (!valid_at(x.imag())) {
        throw strip_violation_error(name_ + ": Im(x) = " + describe(x.imag()) + " outside the valid strips");
    }
    return evaluator_(x);
}

bool PeriodicFunction::valid_at(double im) const
{
    return std::any_of(strips_.begin(), strips_.end(), [im](const Strip &s) { return s.contains(im); });
}

int PeriodicFunction::max_pole_order() const
{
    int o = 0;
    for (const auto &p : poles_) {
        o = std::max(o, p.max_order);
    }
    return o;
}

bool PeriodicFunction::is_special(cplx tau) const
{
    return std::all_of(poles_.begin(), poles_.end(),
                       [tau](const PoleEntry &p) { return lattice_distance(p.location, tau) < 1e-12; });
}

double PeriodicFunction::line_clearance(double im, cplx tau) const
{
    double best = -1.0;
    for (const auto &s : strips_) {
        if (s.contains(im)) {
            best = std::max(best, std::min(im - s.lo, s.hi - im));
        }
    }
    if (best < 0.0) {
        return best;
    }
    for (const auto &p : poles_) {
        best = std::min(best, distance_to_lines(im, p.location.imag(), tau.imag()));
    }
    return best;
}

namespace functions
{

PeriodicFunction constant(cplx value)
{
    std::ostringstream os;
    os << value;
    return PeriodicFunction("const" + os.str(), [value](cplx) { return value; }, {Strip::whole_plane()}, {});
}

PeriodicFunction eisenstein_zeta(std::shared_ptr<const Weierstrass> w)
{
    return PeriodicFunction("Z", [w](cplx x) { return w->zeta_e(x); }, {Strip::whole_plane()}, {{0.0, 1}});
}

PeriodicFunction eisenstein_zeta_prime(std::shared_ptr<const Weierstrass> w)
{
    return PeriodicFunction("Z'", [w](cplx x) { return w->zeta_e_prime(x); }, {Strip::whole_plane()}, {{0.0, 2}});
}

PeriodicFunction weierstrass_p(std::shared_ptr<const Weierstrass> w)
{
    return PeriodicFunction("wp", [w](cplx x) { return w->wp(x); }, {Strip::whole_plane()}, {{0.0, 2}});
}

PeriodicFunction weierstrass_p_prime(std::shared_ptr<const Weierstrass> w)
{
    return PeriodicFunction("wp'", [w](cplx x) { return w->wp_prime(x); }, {Strip::whole_plane()}, {{0.0, 3}});
}

PeriodicFunction kernel(std::shared_ptr<const Weierstrass> w, int n)
{
    if (n < 0 || n > w->theta().max_kernel_order()) {
        throw std::out_of_range("functions::kernel: order out of range");
    }
    std::vector<PoleEntry> poles;
    if (n >= 1) {
        poles.push_back({0.0, 1});
    }
    return PeriodicFunction("g" + std::to_string(n), [w, n](cplx x) { return w->theta().g_kernel(n, x); },
                            {Strip::whole_plane()}, std::move(poles));
}

PeriodicFunction translate(const PeriodicFunction &f, cplx shift, const TorusParams &params)
{
    std::vector<Strip> strips;
    for (const auto &s : f.strips()) {
        strips.push_back({s.lo - shift.imag(), s.hi - shift.imag()});
    }
    std::vector<PoleEntry> poles;
    for (const auto &p : f.poles()) {
        poles.push_back({reduce_mod_lattice(p.location - shift, params.tau()), p.max_order});
    }
    const ComplexFunction inner = f.evaluator();
    return PeriodicFunction(f.name() + "(.+shift)", [inner, shift](cplx x) { return inner(x + shift); },
                            std::move(strips), std::move(poles));
}

PeriodicFunction difference(const PeriodicFunction &f, const TorusParams &params)
{
    const double h = params.tau().imag();
    std::vector<Strip> strips;
    for (const auto &a : f.strips()) {
        for (const auto &b : f.strips()) {
            const Strip s{std::max(a.lo, b.lo - h), std::min(a.hi, b.hi - h)};
            if (s.lo < s.hi) {
                strips.push_back(s);
            }
        }
    }
    if (strips.empty()) {
        throw strip_violation_error("difference: no strip where both f(x) and f(x + tau) are valid");
    }
    const ComplexFunction inner = f.evaluator();
    const cplx tau = params.tau();
    return PeriodicFunction("Delta " + f.name(), [inner, tau](cplx x) { return inner(x + tau) - inner(x); },
                            std::move(strips), f.poles());
}

PeriodicFunction derivative(const PeriodicFunction &f, const TorusParams &params)
{
    std::vector<PoleEntry> poles;
    for (const auto &p : f.poles()) {
        poles.push_back({p.location, p.max_order + 1});
    }
    const PeriodicFunction copy = f;
    const TorusParams pr = params;
    auto eval = [copy, pr](cplx x) {
        double radius = 0.25 * std::min(1.0, pr.tau().imag());
        for (const auto &p : copy.poles()) {
            radius = std::min(radius, 0.5 * lattice_distance(x - p.location, pr));
        }
        double edge = std::numeric_limits<double>::infinity();
        for (const auto &s : copy.strips()) {
            if (s.contains(x.imag())) {
                edge = std::min(x.imag() - s.lo, s.hi - x.imag());
            }
        }
        radius = std::min(radius, 0.5 * edge);
        if (!(radius > pr.pole_guard())) {
            throw pole_proximity_error("derivative: too close to a pole or strip edge");
        }
        return cauchy_derivative(copy.evaluator(), x, 1, radius, 64);
    };
    return PeriodicFunction(f.name() + "'", eval, f.strips(), std::move(poles));
}

PeriodicFunction convolved(const PeriodicFunction &f, const PeriodicFunction &g, const TorusParams &params)
{
    const PeriodicFunction fc = f;
    const PeriodicFunction gc = g;
    const TorusParams pr = params;
    return PeriodicFunction("(" + f.name() + " conv " + g.name() + ")",
                            [fc, gc, pr](cplx x) { return conv_plus(fc, gc, x, pr); },
                            {Strip{0.0, 2.0 * params.tau().imag()}}, pole_ledger_conv(f, g, params));
}

} // namespace functions

cplx conv_plus_split(const PeriodicFunction &f, const PeriodicFunction &g, cplx x, double g_height,
                     const TorusParams &params)
{
    const double f_height = x.imag() - g_height;
    if (!(f_height > 0.0 && g_height > 0.0)) {
        throw strip_violation_error("conv_plus: both contour heights must lie above the real axis");
    }
    require_line(f, f_height, params, "conv_plus");
    require_line(g, g_height, params, "conv_plus");

    const int n = params.quad_points();
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const double t = static_cast<double>(j) / n;
        acc += f(cplx(x.real() - t, f_height)) * g(cplx(t, g_height));
    }
    return acc / static_cast<double>(n);
}

cplx conv_plus(const PeriodicFunction &f, const PeriodicFunction &g, cplx x, const TorusParams &params)
{
    if (!(x.imag() > 0.0 && x.imag() < 2.0 * params.tau().imag())) {
        throw strip_violation_error("conv_plus: need 0 < Im(x) < 2 Im(tau), got Im(x) = " + describe(x.imag()));
    }
    return conv_plus_split(f, g, x, 0.5 * x.imag(), params);
}

cplx conv_nfold(const std::vector<PeriodicFunction> &fs, cplx x, const TorusParams &params)
{
    const std::size_t count = fs.size();
    if (count < 2) {
        throw std::invalid_argument("conv_nfold: need at least two factors");
    }
    const double h = params.tau().imag();
    if (!(x.imag() > 0.0 && x.imag() < static_cast<double>(count) * h)) {
        throw strip_violation_error("conv_nfold: need 0 < Im(x) < n Im(tau)");
    }
    const double height = x.imag() / static_cast<double>(count);
    for (const auto &f : fs) {
        require_line(f, height, params, "conv_nfold");
    }

    const int n = params.quad_points();
    const auto un = static_cast<std::size_t>(n);
    // acc[j] ~ (f_1 conv ... conv f_k)(t_j + i k height), t_j = j/n
    std::vector<cplx> acc = sample_line(fs[0], 0.0, 1.0, height, n);
    for (std::size_t k = 1; k + 1 < count; ++k) {
        const std::vector<cplx> next = sample_line(fs[k], 0.0, 1.0, height, n);
        std::vector<cplx> out(un, 0.0);
        for (std::size_t j = 0; j < un; ++j) {
            cplx s = 0.0;
            for (std::size_t i = 0; i < un; ++i) {
                s += acc[i] * next[(j + un - i) % un];
            }
            out[j] = s / static_cast<double>(n);
        }
        acc = std::move(out);
    }
    // last factor at x - t_j - i (n-1) height, i.e. at Re(x) - t_j on the line Im = height
    const std::vector<cplx> last = sample_line(fs[count - 1], x.real(), -1.0, height, n);
    cplx total = 0.0;
    for (std::size_t j = 0; j < un; ++j) {
        total += acc[j] * last[j];
    }
    return total / static_cast<double>(n);
}

cplx conv_star(const PeriodicFunction &f, const PeriodicFunction &g, cplx x, const TorusParams &params)
{
    const double h = params.tau().imag();
    if (!f.is_special(params.tau()) || !g.is_special(params.tau())) {
        throw std::invalid_argument("conv_star: both factors must have poles on the lattice only");
    }
    if (!(std::abs(x.imag()) < 0.5 * h)) {
        throw strip_violation_error("conv_star: need |Im(x)| < Im(tau)/2");
    }
    const double top = std::min(0.0, x.imag());
    const double bottom = std::max(-h, x.imag() - h);
    const double g_height = 0.5 * (top + bottom);
    const double f_height = x.imag() - g_height;
    require_line(f, f_height, params, "conv_star");
    require_line(g, g_height, params, "conv_star");

    const int n = params.quad_points();
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const double t = static_cast<double>(j) / n;
        acc += f(cplx(x.real() - t, f_height)) * g(cplx(t, g_height));
    }
    return acc / static_cast<double>(n);
}

cplx product_rule_residue_term(const PeriodicFunction &f, const PeriodicFunction &g, cplx x,
                               const TorusParams &params)
{
    const cplx tau = params.tau();
    double radius = 0.5 * params.shortest_period();
    for (const auto &p : f.poles()) {
        radius = std::min(radius, 0.5 * nearest_translate_distance(tau, p.location, params));
    }
    // g(x + tau - z) is singular where z is in x + tau - b + Lambda
    for (const auto &p : g.poles()) {
        radius = std::min(radius, 0.5 * lattice_distance(p.location - x, params));
    }
    if (!(radius > params.pole_guard())) {
        throw pole_proximity_error("product_rule: x too close to a pole of the integrand");
    }
    const ComplexFunction fe = f.evaluator();
    const ComplexFunction ge = g.evaluator();
    auto integrand = [&fe, &ge, x, tau](cplx z) { return fe(z) * ge(x + tau - z); };
    return contour_residue(integrand, tau, radius, 128);
}

double product_rule_residual(const PeriodicFunction &f, const PeriodicFunction &g, cplx x,
                             const TorusParams &params)
{
    const cplx tau = params.tau();
    if (!(x.imag() > 0.0 && x.imag() < tau.imag())) {
        throw strip_violation_error("product_rule_residual: need 0 < Im(x) < Im(tau)");
    }
    const cplx lhs = conv_plus(f, g, x + tau, params) - conv_plus(f, g, x, params);
    const PeriodicFunction df = functions::difference(f, params);
    const cplx rhs = conv_plus(df, g, x, params) + two_pi_i * product_rule_residue_term(f, g, x, params);
    return std::abs(lhs - rhs);
}

std::vector<PoleEntry> pole_ledger_conv(const PeriodicFunction &f, const PeriodicFunction &g,
                                        const TorusParams &params)
{
    std::vector<PoleEntry> out;
    for (const auto &a : f.poles()) {
        for (const auto &b : g.poles()) {
            const cplx loc = reduce_mod_lattice(a.location + b.location, params.tau());
            const int order = std::max(1, a.max_order + b.max_order - 1);
            auto it = std::find_if(out.begin(), out.end(), [&](const PoleEntry &e) {
                return lattice_distance(e.location - loc, params) < 1e-12;
            });
            if (it == out.end()) {
                out.push_back({loc, order});
            } else {
                it->max_order = std::max(it->max_order, order);
            }
        }
    }
    return out;
}

} // namespace torusconv
