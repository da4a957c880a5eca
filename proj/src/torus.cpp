#include "torusconv/torus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace torusconv
{

cplx nome(cplx tau)
{
    if (!(tau.imag() > 0.0)) {
        throw std::domain_error("nome: Im(tau) must be positive");
    }
    return std::exp(two_pi_i * tau);
}

TorusParams TorusParams::make(cplx tau, int quad_points, double series_tol,
                              std::optional<double> ring_radius, double pole_guard)
{
    if (!(tau.imag() >= min_im_tau)) {
        throw std::domain_error("TorusParams: Im(tau) must be at least 0.5");
    }
    if (quad_points < 8) {
        throw std::invalid_argument("TorusParams: quad_points must be at least 8");
    }
    if (!(series_tol > 0.0) || !(series_tol < 1e-6)) {
        throw std::invalid_argument("TorusParams: series_tol must lie in (0, 1e-6)");
    }
    if (!(pole_guard > 0.0)) {
        throw std::invalid_argument("TorusParams: pole_guard must be positive");
    }

    TorusParams p;
    // Re(tau) only matters modulo 1; keep it in [-1/2, 1/2) for lattice geometry.
    p.tau_ = {tau.real() - std::floor(tau.real() + 0.5), tau.imag()};
    p.q_ = nome(p.tau_);
    p.delta_z_ = -two_pi_i;
    p.quad_points_ = quad_points;
    p.series_tol_ = series_tol;
    p.pole_guard_ = pole_guard;

    const double disc = std::min(1.0, p.tau_.imag());
    const double radius = ring_radius.value_or(0.4 * disc);
    if (!(radius > 0.0) || !(radius < disc)) {
        throw std::invalid_argument("TorusParams: ring_radius must lie in (0, min(1, Im tau))");
    }
    p.ring_radius_ = radius;

    double shortest = 1.0;
    for (long m = 1; m <= 2; ++m) {
        for (long n = -3; n <= 3; ++n) {
            shortest = std::min(shortest, std::abs(static_cast<double>(n) + static_cast<double>(m) * p.tau_));
        }
    }
    p.shortest_period_ = shortest;
    return p;
}

LatticePoint nearest_lattice_point(cplx x, cplx tau)
{
    const long m0 = std::lround(x.imag() / tau.imag());
    LatticePoint best{};
    double best_d = std::numeric_limits<double>::infinity();
    for (long m = m0 - 1; m <= m0 + 1; ++m) {
        const cplx shifted = x - static_cast<double>(m) * tau;
        const long n0 = std::lround(shifted.real());
        for (long n = n0 - 1; n <= n0 + 1; ++n) {
            const double d = std::abs(shifted - static_cast<double>(n));
            if (d < best_d) {
                best_d = d;
                best = {m, n};
            }
        }
    }
    return best;
}

double lattice_distance(cplx x, cplx tau)
{
    return std::abs(x - nearest_lattice_point(x, tau).embed(tau));
}

double lattice_distance(cplx x, const TorusParams &params)
{
    return lattice_distance(x, params.tau());
}

cplx reduce_real_period(cplx x)
{
    double re = x.real() - std::floor(x.real());
    if (re >= 1.0) {
        re = 0.0;
    }
    return {re, x.imag()};
}

cplx reduce_mod_lattice(cplx x, cplx tau)
{
    const double m = std::floor(x.imag() / tau.imag());
    cplx y = x - m * tau;
    if (y.imag() >= tau.imag()) {
        y -= tau;
    }
    return reduce_real_period(y);
}

namespace
{

std::string strip_spaces(const std::string &text)
{
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        }
    }
    return out;
}

double parse_real(const std::string &s, const std::string &whole)
{
    if (s.empty() || s == "+") {
        return 1.0;
    }
    if (s == "-") {
        return -1.0;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("cannot parse complex number '" + whole + "'");
    }
    if (used != s.size()) {
        throw std::invalid_argument("cannot parse complex number '" + whole + "'");
    }
    return v;
}

} // namespace

cplx parse_complex(const std::string &text)
{
    const std::string s = strip_spaces(text);
    if (s.empty()) {
        throw std::invalid_argument("empty complex number");
    }
    const char last = s.back();
    if (last != 'i' && last != 'j' && last != 'I' && last != 'J') {
        return {parse_real(s, text), 0.0};
    }
    const std::string body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        return {0.0, parse_real(body, text)};
    }
    if (split == 0 || body.substr(0, split).empty()) {
        return {0.0, parse_real(body, text)};
    }
    return {parse_real(body.substr(0, split), text), parse_real(body.substr(split), text)};
}

} // namespace torusconv
