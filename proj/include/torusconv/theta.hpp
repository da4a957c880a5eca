#ifndef TORUSCONV_THETA_HPP
#define TORUSCONV_THETA_HPP

#include <vector>

#include "torusconv/torus.hpp"

namespace torusconv
{

/// Odd Jacobi theta function in product form
///
///   theta(x) = q^(1/8) (z^(1/2) - z^(-1/2)) prod_{n>=1} (1-q^n)(1-q^n z)(1-q^n/z),  z = e^(2 pi i x),
///
/// together with the Eisenstein-Kronecker function
/// F(x,y) = theta'(0) theta(x+y) / (theta(x) theta(y)) and its y-expansion
/// F(x,y) = (1/y) sum_n g^(n)(x) y^n.
///
/// The product is truncated once |q^n| max(|z|, 1/|z|) drops below
/// series_tol, so any Im(x) is accepted; accuracy is validated for
/// |Im x| <= 2 Im(tau).
class ThetaEvaluator
{
public:
    static constexpr int default_max_kernel_order = 16;

    explicit ThetaEvaluator(const TorusParams &params, int max_kernel_order = default_max_kernel_order);

    const TorusParams &params() const { return params_; }
    int max_kernel_order() const { return max_kernel_order_; }
    /// Largest number of product factors retained at |Im x| <= 2 Im(tau).
    int truncation_order() const { return truncation_order_; }

    cplx theta(cplx x) const;
    cplx theta_prime_zero() const { return theta_prime_zero_; }

    /// Throws pole_proximity_error when x or y is within the pole guard of the lattice.
    cplx eisenstein_kronecker(cplx x, cplx y) const;

    /// g^(n)(x) for a single order.
    cplx g_kernel(int n, cplx x) const;

    /// [g^(0)(x), ..., g^(n_max)(x)] from one ring quadrature.
    ///
    /// The ring is evaluated at x0 = x - m tau with |Im x0| <= Im(tau)/2 and
    /// carried back with g^(n)(x0 + m tau) = sum_k (m dZ)^k / k! g^(n-k)(x0).
    std::vector<cplx> g_kernels(int n_max, cplx x) const;

    /// Same ring quadrature, evaluated directly at x without the shift.
    std::vector<cplx> g_kernels_unreduced(int n_max, cplx x) const;

private:
    std::vector<cplx> ring_coefficients(int n_max, cplx x) const;
    void check_order(int n_max) const;

    TorusParams params_;
    int max_kernel_order_;
    int truncation_order_ = 0;
    cplx q_eighth_{};
    cplx theta_prime_zero_{};
    std::vector<cplx> ring_nodes_;
    // theta'(0) / theta(y_j) on the ring, independent of x.
    std::vector<cplx> ring_weights_;
};

} // namespace torusconv

#endif
