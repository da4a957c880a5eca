#include "doctest.h"

#include <boost/math/special_functions/gamma.hpp>

#include "support.hpp"
#include "torusconv/laurent.hpp"
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

TEST_CASE("Z: half period, residue, quasi-periods")
{
    const Weierstrass &w = wei();
    CHECK(std::abs(w.zeta_e(0.5)) < 1e-12);
    CHECK(std::abs(contour_residue([&](cplx x) { return w.zeta_e(x); }, 0.0, 0.2) - 1.0) < 1e-10);
    const cplx tau = params().tau();
    testsupport::Gen g(201);
    for (int i = 0; i < 20; ++i) {
        const cplx x = g.point(params(), -0.5, 0.5);
        CHECK(std::abs(w.zeta_e(x + tau) - w.zeta_e(x) + cplx(0.0, 2.0 * pi)) < 1e-10);
        CHECK(std::abs(w.zeta_e(x + 1.0) - w.zeta_e(x)) < 1e-10);
    }
}

TEST_CASE("Z: quasi-period grid")
{
    const Weierstrass &w = wei();
    const cplx tau = params().tau();
    const cplx x(0.31, 0.17);
    for (int m = -2; m <= 2; ++m) {
        for (int n = -2; n <= 2; ++n) {
            const cplx shift = static_cast<double>(n) + static_cast<double>(m) * tau;
            CHECK(std::abs(w.zeta_e(x + shift) - w.zeta_e(x) + cplx(0.0, 2.0 * pi * m)) < 1e-9);
        }
    }
}

TEST_CASE("classical zeta quasi-periods")
{
    const Weierstrass &w = wei();
    const cplx tau = params().tau();
    testsupport::Gen g(202);
    for (int i = 0; i < 10; ++i) {
        const cplx x = g.point(params(), -0.5, 0.5);
        CHECK(std::abs(w.zeta_w(x + 1.0) - w.zeta_w(x) - w.e2()) < 1e-9);
        CHECK(std::abs(w.zeta_w(x + tau) - w.zeta_w(x) - (w.e2() * tau - cplx(0.0, 2.0 * pi))) < 1e-9);
    }
}

TEST_CASE("e2 at tau = i")
{
    // G2(i) = pi, so e2 = G2 up to the normalisation fixed by Z
    CHECK(std::abs(wei().e2() - pi) < 1e-12);
    CHECK(std::abs(extract_e2(wei()) - wei().e2()) < 1e-9);
}

TEST_CASE("e4 against the lemniscatic closed form, e6 vanishes")
{
    // G4(i) = Gamma(1/4)^8 / (960 pi^2)
    const double g = boost::math::tgamma(0.25);
    const double g4 = std::pow(g, 8) / (960.0 * pi * pi);
    CHECK(std::abs(wei().e4() - g4) < 1e-9 * g4);
    CHECK(std::abs(wei().e6()) < 1e-8);
}

TEST_CASE("wp: periods, parity, half period")
{
    const Weierstrass &w = wei();
    const cplx tau = params().tau();
    testsupport::Gen g(203);
    for (int i = 0; i < 20; ++i) {
        const cplx x = g.point(params(), -0.5, 0.5);
        const double s = 1.0 + std::abs(w.wp(x));
        CHECK(std::abs(w.wp(x + 1.0) - w.wp(x)) < 1e-9 * s);
        CHECK(std::abs(w.wp(x + tau) - w.wp(x)) < 1e-9 * s);
        CHECK(std::abs(w.wp(-x) - w.wp(x)) < 1e-10 * s);
    }
    CHECK(std::abs(w.wp_prime(0.5)) < 1e-9);
}

TEST_CASE("wp: Laurent data at the origin")
{
    const Weierstrass &w = wei();
    LaurentOptions opt;
    opt.regular_orders = 5;
    const LaurentData d = extract_laurent([&](cplx x) { return w.wp(x); }, 0.0, 2, 0.3, opt);
    CHECK(std::abs(d.singular_coefficient(2) - 1.0) < 1e-9);
    CHECK(std::abs(d.singular_coefficient(1)) < 1e-9);
    CHECK(std::abs(d.regular[0]) < 1e-10);
    CHECK(std::abs(d.regular[2] - 3.0 * w.e4()) < 1e-8 * std::abs(w.e4()));
}

TEST_CASE("wp equals -Z' - e2")
{
    const Weierstrass &w = wei();
    testsupport::Gen g(204);
    for (int i = 0; i < 10; ++i) {
        const cplx x = g.point(params(), 0.05, 0.95, 0.2);
        const cplx d = cauchy_derivative([&](cplx z) { return w.zeta_w(z); }, x, 1,
                                         0.5 * lattice_distance(x, params()));
        CHECK(std::abs(-d - w.wp(x)) < 1e-8 * (1.0 + std::abs(w.wp(x))));
    }
}

TEST_CASE("property: cubic holds across tau")
{
    testsupport::Gen g(205);
    for (cplx tau : {cplx(0.0, 1.0), cplx(0.3, 0.8), cplx(-0.4, 2.0), cplx(0.0, 0.6)}) {
        const TorusParams p = TorusParams::make(tau);
        const Weierstrass w(p);
        for (int i = 0; i < 25; ++i) {
            const cplx x = g.point(p, 0.05, 0.95, 0.2);
            const double s = std::pow(1.0 + std::abs(w.wp(x)), 3);
            CHECK(std::abs(w.cubic_residual(x)) < 1e-8 * s);
        }
    }
}

TEST_CASE("pole guard")
{
    CHECK_THROWS_AS(wei().wp(cplx(0.0, 0.0)), pole_proximity_error);
    CHECK_THROWS_AS(wei().zeta_e(params().tau()), pole_proximity_error);
}
