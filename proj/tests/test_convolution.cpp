#include "doctest.h"

#include "support.hpp"
#include "torusconv/basis_change.hpp"
#include "torusconv/convolution.hpp"

using namespace torusconv;

namespace
{

const TorusParams &params()
{
    static const TorusParams p = TorusParams::make({0.0, 1.0});
    return p;
}

std::shared_ptr<const Weierstrass> wei()
{
    static const auto w = std::make_shared<const Weierstrass>(params());
    return w;
}

const cplx dz{0.0, -2.0 * pi};

} // namespace

TEST_CASE("constants")
{
    const auto one = functions::constant(1.0);
    const auto z = functions::eisenstein_zeta(wei());
    CHECK(std::abs(conv_plus(one, one, cplx(0.3, 0.7), params()) - 1.0) < 1e-12);
    for (double im : {0.3, 0.9, 1.6}) {
        CHECK(std::abs(conv_plus(one, z, cplx(0.2, im), params()) - dz / 2.0) < 1e-9);
    }
}

TEST_CASE("Z conv Z in terms of kernels")
{
    const auto z = functions::eisenstein_zeta(wei());
    const ThetaEvaluator &th = wei()->theta();
    testsupport::Gen g(301);
    for (int i = 0; i < 20; ++i) {
        cplx x = g.point(params(), 0.1, 1.9);
        if (z.line_clearance(0.5 * x.imag(), params().tau()) < params().contour_guard()) {
            continue;
        }
        const cplx want = -th.g_kernel(2, x) + dz * th.g_kernel(1, x) - dz * dz / 6.0;
        CHECK(std::abs(conv_plus(z, z, x, params()) - want) < 1e-8 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("commutativity and the nfold route")
{
    const auto z = functions::eisenstein_zeta(wei());
    const auto p = functions::weierstrass_p(wei());
    const cplx x(0.37, 0.6);
    CHECK(std::abs(conv_plus(z, p, x, params()) - conv_plus(p, z, x, params())) < 1e-9);
    CHECK(std::abs(conv_nfold({z, z}, x, params()) - conv_plus(z, z, x, params())) < 1e-9);
}

TEST_CASE("Fubini for iterated convolutions of Z")
{
    const auto one = functions::constant(1.0);
    const auto z = functions::eisenstein_zeta(wei());
    for (int n = 1; n <= 4; ++n) {
        std::vector<PeriodicFunction> fs{one};
        for (int k = 0; k < n; ++k) {
            fs.push_back(z);
        }
        const cplx x(0.21, 0.55 * (n + 1));
        CHECK(std::abs(conv_nfold(fs, x, params()) - std::pow(dz / 2.0, n)) < 1e-8);
    }
}

TEST_CASE("Z conv Z conv Z is regular at tau and 2 tau")
{
    BasisEvaluator b(wei());
    const auto z = functions::eisenstein_zeta(wei());
    const cplx tau = params().tau();
    for (cplx x : {tau, 2.0 * tau, tau + 1e-9}) {
        const cplx v = b.z_conv_pow(3, x);
        CHECK(std::isfinite(std::abs(v)));
        CHECK(std::abs(v - conv_nfold({z, z, z}, x, params())) < 1e-7);
    }
    CHECK_THROWS_AS(b.z_conv_pow(3, 3.0 * tau), pole_proximity_error);
    CHECK_THROWS_AS(b.z_conv_pow(2, 0.0), pole_proximity_error);
}

TEST_CASE("star minus plus is a residue at the origin")
{
    const auto z = functions::eisenstein_zeta(wei());
    const cplx x(0.3, 0.1);
    const cplx lhs = conv_star(z, z, x, params()) - conv_plus(z, z, x, params());
    // Res_{w=0} Z(x-w)Z(w) = Z(x)
    CHECK(std::abs(lhs - cplx(0.0, 2.0 * pi) * wei()->zeta_e(x)) < 1e-7);
    CHECK(std::isfinite(std::abs(conv_star(z, z, cplx(0.3, 0.0), params()))));
}

TEST_CASE("product rule residuals")
{
    const auto one = functions::constant(1.0);
    const auto z = functions::eisenstein_zeta(wei());
    const auto p = functions::weierstrass_p(wei());
    const cplx x(0.33, 0.42);
    CHECK(product_rule_residual(z, z, x, params()) < 1e-7);
    CHECK(product_rule_residual(one, one, x, params()) < 1e-10);
    CHECK(product_rule_residual(z, p, x, params()) < 1e-6);
}

TEST_CASE("derivative commutes with convolution")
{
    const auto z = functions::eisenstein_zeta(wei());
    const auto dzf = functions::derivative(z, params());
    const auto zz = functions::convolved(z, z, params());
    const cplx x(0.41, 0.7);
    const cplx lhs = cauchy_derivative([&](cplx t) { return zz(t); }, x, 1, 0.2);
    CHECK(std::abs(lhs - conv_plus(dzf, z, x, params())) < 1e-7);
}

TEST_CASE("quadrature doubling")
{
    const auto z = functions::eisenstein_zeta(wei());
    const TorusParams coarse = TorusParams::make({0.0, 1.0}, 128);
    const cplx x(0.29, 0.8);
    CHECK(std::abs(conv_plus(z, z, x, coarse) - conv_plus(z, z, x, params())) < 1e-11);
}

TEST_CASE("domain errors")
{
    const auto z = functions::eisenstein_zeta(wei());
    CHECK_THROWS_AS(conv_plus(z, z, cplx(0.3, -0.1), params()), strip_violation_error);
    CHECK_THROWS_AS(conv_plus(z, z, cplx(0.3, 2.5), params()), strip_violation_error);
    // contour through the pole line at Im = Im tau
    CHECK_THROWS(conv_plus(z, z, cplx(0.3, 2.0 * 0.999), params()));
    CHECK_THROWS_AS(conv_star(z, z, cplx(0.3, 0.6), params()), strip_violation_error);
    const auto zz = functions::convolved(z, z, params());
    CHECK_THROWS_AS(zz(cplx(0.1, -0.3)), strip_violation_error);
}

TEST_CASE("pole ledger")
{
    const auto z = functions::eisenstein_zeta(wei());
    const auto p = functions::weierstrass_p(wei());
    auto ledger = pole_ledger_conv(z, z, params());
    REQUIRE(ledger.size() == 1);
    CHECK(std::abs(ledger[0].location) < 1e-14);
    CHECK(ledger[0].max_order == 1);
    ledger = pole_ledger_conv(p, p, params());
    REQUIRE(ledger.size() == 1);
    CHECK(ledger[0].max_order == 3);

    // x -> Z(x + 1/4) has its poles at 3/4 + Lambda
    const auto za = functions::translate(z, 0.25, params());
    ledger = pole_ledger_conv(za, p, params());
    REQUIRE(ledger.size() == 1);
    CHECK(std::abs(ledger[0].location - 0.75) < 1e-14);
    CHECK(ledger[0].max_order == 2);
}

TEST_CASE("property: random strip points, commutativity of Z and wp")
{
    const auto z = functions::eisenstein_zeta(wei());
    const auto p = functions::weierstrass_p(wei());
    testsupport::Gen g(302);
    int tried = 0;
    while (tried < 10) {
        const cplx x = g.point(params(), 0.1, 1.9);
        if (z.line_clearance(0.5 * x.imag(), params().tau()) < 0.1) {
            continue;
        }
        ++tried;
        const cplx a = conv_plus(z, p, x, params());
        CHECK(std::abs(a - conv_plus(p, z, x, params())) < 1e-9 * (1.0 + std::abs(a)));
    }
}
