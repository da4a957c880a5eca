#include "torusconv/theta.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace torusconv
{

namespace
{

// Smallest N with |q|^N * bound < tol.
int factors_needed(double abs_q, double bound, double tol)
{
    const double n = std::log(tol / bound) / std::log(abs_q);
    return std::max(1, static_cast<int>(std::ceil(n)) + 1);
}

} // namespace

ThetaEvaluator::ThetaEvaluator(const TorusParams &params, int max_kernel_order)
    : params_(params), max_kernel_order_(max_kernel_order)
{
    if (max_kernel_order < 0) {
        throw std::invalid_argument("ThetaEvaluator: max_kernel_order must be non-negative");
    }
    const cplx tau = params_.tau();
    const cplx q = params_.q();
    q_eighth_ = std::exp(two_pi_i * tau / 8.0);
    truncation_order_ = factors_needed(std::abs(q), std::exp(4.0 * pi * tau.imag()), params_.series_tol());

    cplx prod = 1.0;
    cplx qn = 1.0;
    for (int n = 1; n <= factors_needed(std::abs(q), 1.0, params_.series_tol()); ++n) {
        qn *= q;
        const cplx f = 1.0 - qn;
        prod *= f * f * f;
    }
    theta_prime_zero_ = two_pi_i * q_eighth_ * prod;

    const int nodes = params_.quad_points();
    const double r = params_.ring_radius();
    ring_nodes_.resize(static_cast<std::size_t>(nodes));
    ring_weights_.resize(static_cast<std::size_t>(nodes));
    for (int j = 0; j < nodes; ++j) {
        const cplx y = std::polar(r, 2.0 * pi * j / nodes);
        ring_nodes_[static_cast<std::size_t>(j)] = y;
        ring_weights_[static_cast<std::size_t>(j)] = theta_prime_zero_ / theta(y);
    }
}

cplx ThetaEvaluator::theta(cplx x) const
{
    const cplx q = params_.q();
    const cplx half = std::exp(cplx(0.0, pi) * x);
    const cplx z = half * half;
    const double bound = std::max({1.0, std::abs(z), 1.0 / std::abs(z)});
    const int terms = factors_needed(std::abs(q), bound, params_.series_tol());

    cplx prod = q_eighth_ * (half - 1.0 / half);
    cplx qn = 1.0;
    for (int n = 1; n <= terms; ++n) {
        qn *= q;
        prod *= (1.0 - qn) * (1.0 - qn * z) * (1.0 - qn / z);
    }
    return prod;
}

cplx ThetaEvaluator::eisenstein_kronecker(cplx x, cplx y) const
{
    const double guard = params_.pole_guard();
    if (lattice_distance(x, params_) < guard || lattice_distance(y, params_) < guard) {
        throw pole_proximity_error("eisenstein_kronecker: argument on a lattice point");
    }
    return theta_prime_zero_ * theta(x + y) / (theta(x) * theta(y));
}

void ThetaEvaluator::check_order(int n_max) const
{
    if (n_max < 0 || n_max > max_kernel_order_) {
        throw std::out_of_range("g_kernel: order " + std::to_string(n_max) + " outside [0, " +
                                std::to_string(max_kernel_order_) + "]");
    }
}

std::vector<cplx> ThetaEvaluator::ring_coefficients(int n_max, cplx x) const
{
    if (lattice_distance(x, params_) < params_.pole_guard()) {
        throw pole_proximity_error("g_kernel: x is on a lattice point");
    }
    const cplx theta_x = theta(x);
    const std::size_t nodes = ring_nodes_.size();
    std::vector<cplx> acc(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (std::size_t j = 0; j < nodes; ++j) {
        const cplx y = ring_nodes_[j];
        // y F(x,y) = sum_n g^(n)(x) y^n
        cplx term = y * ring_weights_[j] * theta(x + y) / theta_x;
        const cplx inv_y = 1.0 / y;
        for (int n = 0; n <= n_max; ++n) {
            acc[static_cast<std::size_t>(n)] += term;
            term *= inv_y;
        }
    }
    for (auto &a : acc) {
        a /= static_cast<double>(nodes);
    }
    return acc;
}

std::vector<cplx> ThetaEvaluator::g_kernels_unreduced(int n_max, cplx x) const
{
    check_order(n_max);
    return ring_coefficients(n_max, reduce_real_period(x));
}

std::vector<cplx> ThetaEvaluator::g_kernels(int n_max, cplx x) const
{
    check_order(n_max);
    const cplx tau = params_.tau();
    const long m = std::lround(x.imag() / tau.imag());
    const cplx x0 = reduce_real_period(x - static_cast<double>(m) * tau);
    std::vector<cplx> base = ring_coefficients(n_max, x0);
    if (m == 0) {
        return base;
    }
    // shift[k] = (m dZ)^k / k!
    const cplx step = static_cast<double>(m) * params_.delta_z();
    std::vector<cplx> shift(static_cast<std::size_t>(n_max) + 1);
    shift[0] = 1.0;
    for (int k = 1; k <= n_max; ++k) {
        shift[static_cast<std::size_t>(k)] = shift[static_cast<std::size_t>(k - 1)] * step / static_cast<double>(k);
    }
    std::vector<cplx> out(base.size(), 0.0);
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            out[static_cast<std::size_t>(n)] += shift[static_cast<std::size_t>(k)] * base[static_cast<std::size_t>(n - k)];
        }
    }
    return out;
}

cplx ThetaEvaluator::g_kernel(int n, cplx x) const
{
    check_order(n);
    return g_kernels(n, x)[static_cast<std::size_t>(n)];
}

} // namespace torusconv
