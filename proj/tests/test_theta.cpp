#include "doctest.h"

#include "support.hpp"
#include "torusconv/laurent.hpp"
#include "torusconv/theta.hpp"
#include "torusconv/weierstrass.hpp"

using namespace torusconv;

namespace
{

const TorusParams &params()
{
    static const TorusParams p = TorusParams::make({0.0, 1.0});
    return p;
}

const Weierstrass &wei()
{
    static const Weierstrass w(params());
    return w;
}

} // namespace

TEST_CASE("theta: zero, oddness and real period")
{
    const ThetaEvaluator &th = wei().theta();
    CHECK(std::abs(th.theta(0.0)) < 1e-15);
    testsupport::Gen g(101);
    for (int i = 0; i < 20; ++i) {
        const cplx x = g.point(params(), -0.45, 0.45);
        CHECK(std::abs(th.theta(-x) + th.theta(x)) < 1e-13 * (1.0 + std::abs(th.theta(x))));
        CHECK(std::abs(th.theta(x + 1.0) + th.theta(x)) < 1e-13 * (1.0 + std::abs(th.theta(x))));
    }
}

TEST_CASE("theta'(0) against a central difference")
{
    const ThetaEvaluator &th = wei().theta();
    const double h = 1e-5;
    const cplx fd = (th.theta(h) - th.theta(-h)) / (2.0 * h);
    CHECK(std::abs(th.theta_prime_zero()) > 0.0);
    CHECK(std::abs(fd - th.theta_prime_zero()) / std::abs(th.theta_prime_zero()) < 1e-9);
}

TEST_CASE("F: symmetry, quasi-period and residue")
{
    const ThetaEvaluator &th = wei().theta();
    const cplx tau = params().tau();
    testsupport::Gen g(102);
    for (int i = 0; i < 20; ++i) {
        const cplx x = g.point(params(), -0.4, 0.4, 0.2);
        const cplx y = g.point(params(), -0.4, 0.4, 0.2);
        if (lattice_distance(x + y, params()) < 0.2) {
            continue;
        }
        const cplx f = th.eisenstein_kronecker(x, y);
        CHECK(std::abs(f - th.eisenstein_kronecker(y, x)) < 1e-10 * (1.0 + std::abs(f)));
        const cplx shifted = th.eisenstein_kronecker(x + tau, y);
        CHECK(std::abs(shifted - f * std::exp(cplx(0.0, -2.0 * pi) * y)) < 1e-9 * (1.0 + std::abs(f)));
    }
    const cplx y(0.27, 0.11);
    const cplx res = contour_residue([&](cplx x) { return th.eisenstein_kronecker(x, y); }, 0.0, 0.1);
    CHECK(std::abs(res - 1.0) < 1e-9);
}

TEST_CASE("F near a pole is refused")
{
    const ThetaEvaluator &th = wei().theta();
    CHECK_THROWS_AS(th.eisenstein_kronecker(0.0, 0.3), pole_proximity_error);
    CHECK_THROWS_AS(th.g_kernel(th.max_kernel_order() + 1, cplx(0.3, 0.2)), std::out_of_range);
}

TEST_CASE("kernels: low orders and g2 in terms of Z and wp")
{
    const ThetaEvaluator &th = wei().theta();
    testsupport::Gen g(103);
    for (int i = 0; i < 20; ++i) {
        const cplx x = g.point(params(), 0.05, 0.95);
        const cplx z = wei().zeta_e(x);
        CHECK(std::abs(th.g_kernel(0, x) - 1.0) < 1e-12);
        CHECK(std::abs(th.g_kernel(1, x) - z) < 1e-10 * (1.0 + std::abs(z)));
        const cplx g2 = 0.5 * z * z - 0.5 * wei().wp(x);
        CHECK(std::abs(th.g_kernel(2, x) - g2) < 1e-9 * (1.0 + std::abs(g2)));
    }
}

TEST_CASE("kernels: g3 in terms of Z, wp and wp'")
{
    const ThetaEvaluator &th = wei().theta();
    testsupport::Gen g(104);
    for (int i = 0; i < 20; ++i) {
        const cplx x = g.point(params(), 0.05, 0.95);
        const cplx z = wei().zeta_e(x);
        const cplx p = wei().wp(x);
        const cplx g3 = z * z * z / 6.0 - 0.5 * p * z - wei().wp_prime(x) / 6.0;
        CHECK(std::abs(th.g_kernel(3, x) - g3) < 1e-8 * (1.0 + std::abs(g3)));
    }
}

TEST_CASE("kernels: difference recurrence")
{
    const ThetaEvaluator &th = wei().theta();
    const cplx dz = params().delta_z();
    testsupport::Gen g(105);
    for (int i = 0; i < 10; ++i) {
        const cplx x = g.point(params(), 0.05, 0.95);
        const auto lo = th.g_kernels(8, x);
        const auto hi = th.g_kernels(8, x + params().tau());
        for (int n = 1; n <= 8; ++n) {
            cplx rhs = 0.0;
            cplx term = 1.0;
            for (int k = 1; k <= n; ++k) {
                term *= dz / static_cast<double>(k);
                rhs += term * lo[static_cast<std::size_t>(n - k)];
            }
            CHECK(std::abs(hi[static_cast<std::size_t>(n)] - lo[static_cast<std::size_t>(n)] - rhs) <
                  1e-8 * (1.0 + std::abs(rhs)));
        }
    }
}

TEST_CASE("kernels: residues at m tau")
{
    const ThetaEvaluator &th = wei().theta();
    const cplx dz = params().delta_z();
    const cplx tau = params().tau();
    for (int n = 1; n <= 4; ++n) {
        for (int m = 0; m <= 3; ++m) {
            const cplx c = static_cast<double>(m) * tau;
            const cplx res = contour_residue(
                [&](cplx x) { return th.g_kernels_unreduced(n, x)[static_cast<std::size_t>(n)]; }, c, 0.1);
            cplx want = 1.0;
            for (int k = 1; k < n; ++k) {
                want *= static_cast<double>(m) * dz / static_cast<double>(k);
            }
            CHECK(std::abs(res - want) < 1e-7 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("kernels: finite on the real axis except order one")
{
    const ThetaEvaluator &th = wei().theta();
    for (double x : {0.001, 0.25, 0.5, 0.999}) {
        for (int n = 2; n <= 6; ++n) {
            CHECK(std::isfinite(std::abs(th.g_kernel(n, x))));
        }
    }
}
