#include "torusconv/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace torusconv
{

namespace
{

struct CircleSamples
{
    std::vector<cplx> offsets; // x_j - center
    std::vector<cplx> values;
};

CircleSamples sample_circle(const ComplexFunction &f, cplx center, double radius, int nodes)
{
    CircleSamples s;
    s.offsets.resize(static_cast<std::size_t>(nodes));
    s.values.resize(static_cast<std::size_t>(nodes));
    for (int j = 0; j < nodes; ++j) {
        const cplx w = std::polar(radius, 2.0 * pi * j / nodes);
        s.offsets[static_cast<std::size_t>(j)] = w;
        s.values[static_cast<std::size_t>(j)] = f(center + w);
    }
    return s;
}

// mean_j f_j w_j^power over every stride-th node
cplx weighted_mean(const CircleSamples &s, int power, int stride)
{
    cplx acc = 0.0;
    int count = 0;
    for (std::size_t j = 0; j < s.values.size(); j += static_cast<std::size_t>(stride)) {
        acc += s.values[j] * std::pow(s.offsets[j], power);
        ++count;
    }
    return acc / static_cast<double>(count);
}

} // namespace

LaurentData extract_laurent(const ComplexFunction &f, cplx center, int max_order, double radius,
                            const LaurentOptions &options)
{
    if (!(radius > 0.0)) {
        throw std::domain_error("extract_laurent: radius collapsed (poles too close)");
    }
    if (options.nodes < 8) {
        throw std::invalid_argument("extract_laurent: need at least 8 nodes");
    }
    const CircleSamples s = sample_circle(f, center, radius, options.nodes);

    LaurentData out;
    out.center = center;
    out.radius = radius;
    double change = 0.0;
    double scale = 0.0;
    for (int l = 1; l <= max_order; ++l) {
        const cplx full = weighted_mean(s, l, 1);
        const cplx half = weighted_mean(s, l, 2);
        out.singular[l] = full;
        change = std::max(change, std::abs(full - half) / std::pow(radius, l));
        scale = std::max(scale, std::abs(full) / std::pow(radius, l));
    }
    for (int k = 0; k < options.regular_orders; ++k) {
        const cplx full = weighted_mean(s, -k, 1);
        const cplx half = weighted_mean(s, -k, 2);
        out.regular.push_back(full);
        change = std::max(change, std::abs(full - half) * std::pow(radius, k));
        scale = std::max(scale, std::abs(full) * std::pow(radius, k));
    }
    out.halving_change = change;
    if (options.halving_tol > 0.0 && change > options.halving_tol * std::max(1.0, scale)) {
        throw convergence_error("extract_laurent: coefficients not converged under node halving (change " +
                                std::to_string(change) + ")");
    }
    return out;
}

cplx contour_residue(const ComplexFunction &f, cplx center, double radius, int nodes)
{
    const CircleSamples s = sample_circle(f, center, radius, nodes);
    return weighted_mean(s, 1, 1);
}

cplx cauchy_derivative(const ComplexFunction &f, cplx x, int order, double radius, int nodes)
{
    if (order < 0) {
        throw std::invalid_argument("cauchy_derivative: negative order");
    }
    if (!(radius > 0.0)) {
        throw std::domain_error("cauchy_derivative: non-positive radius");
    }
    const CircleSamples s = sample_circle(f, x, radius, nodes);
    double fact = 1.0;
    for (int k = 2; k <= order; ++k) {
        fact *= k;
    }
    return fact * weighted_mean(s, -order, 1);
}

double lattice_laurent_radius(cplx center, const TorusParams &params)
{
    const LatticePoint nearest = nearest_lattice_point(center, params.tau());
    const cplx own = nearest.embed(params.tau());
    double d = std::abs(center - own) > params.pole_guard() ? std::abs(center - own) : params.shortest_period();
    // other lattice points around the nearest one
    for (long dm = -1; dm <= 1; ++dm) {
        for (long dn = -1; dn <= 1; ++dn) {
            if (dm == 0 && dn == 0) {
                continue;
            }
            const cplx p = own + static_cast<double>(dn) + static_cast<double>(dm) * params.tau();
            d = std::min(d, std::abs(center - p));
        }
    }
    return 0.5 * d;
}

} // namespace torusconv
