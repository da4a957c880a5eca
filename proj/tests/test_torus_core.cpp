#include "doctest.h"

#include "support.hpp"
#include "torusconv/rational.hpp"
#include "torusconv/torus.hpp"

using namespace torusconv;

TEST_CASE("nome and default parameters")
{
    CHECK(std::abs(nome({0.0, 1.0}) - 1.8674427317079889e-3) < 1e-16);
    CHECK(std::abs(nome({0.0, 20.0})) < 1e-54);
    CHECK(std::abs(nome({0.5, 1.0}) + std::exp(-2.0 * pi)) < 1e-16);
    const TorusParams p = TorusParams::make({0.0, 1.0});
    CHECK(std::abs(p.q() - std::exp(-2.0 * pi)) < 1e-18);
    CHECK(p.delta_z() == cplx(0.0, -2.0 * pi));
    CHECK(p.quad_points() == 256);
    CHECK(p.ring_radius() == doctest::Approx(0.4));
    CHECK(p.contour_guard() == doctest::Approx(0.05));
    CHECK_THROWS_AS(nome({0.3, 0.0}), std::domain_error);
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(TorusParams::make({0.0, 0.4}), std::domain_error);
    CHECK_THROWS_AS(TorusParams::make({0.0, 1.0}, 4), std::invalid_argument);
    CHECK_THROWS_AS(TorusParams::make({0.0, 1.0}, 256, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(TorusParams::make({0.0, 1.0}, 256, 1e-16, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(TorusParams::make({0.0, 0.7}, 256, 1e-16, 0.7), std::invalid_argument);
    CHECK_NOTHROW(TorusParams::make({0.0, 0.5}));
}

TEST_CASE("real part of tau is reduced into [-1/2, 1/2)")
{
    const TorusParams p = TorusParams::make({2.3, 1.0});
    CHECK(p.tau().real() == doctest::Approx(0.3));
    const TorusParams h = TorusParams::make({0.5, 1.0});
    CHECK(h.tau().real() == doctest::Approx(-0.5));
}

TEST_CASE("lattice helpers")
{
    const cplx tau(0.2, 1.1);
    const LatticePoint lp = nearest_lattice_point(cplx(2.1, 3.4), tau);
    CHECK(lp.m == 3);
    CHECK(lp.embed(tau) == cplx(static_cast<double>(lp.n), 0.0) + 3.0 * tau);
    CHECK(lattice_distance(cplx(3.0, 0.0) + 2.0 * tau, tau) < 1e-14);

    CHECK(std::abs(reduce_real_period(cplx(2.25, 0.5)) - cplx(0.25, 0.5)) < 1e-15);
    CHECK(std::abs(reduce_real_period(-0.1) - 0.9) < 1e-15);
    CHECK(reduce_real_period(cplx(0.0, 0.7)) == cplx(0.0, 0.7));
    const cplx i(0.0, 1.0);
    CHECK(lattice_distance(0.0, i) == 0.0);
    CHECK(lattice_distance(0.5, i) == doctest::Approx(0.5));
    CHECK(lattice_distance(cplx(0.5, 0.5), i) == doctest::Approx(std::sqrt(0.5)));

    testsupport::Gen g(7);
    for (int i = 0; i < 50; ++i) {
        const cplx x(g.uniform(-5, 5), g.uniform(-5, 5));
        const cplx r = reduce_mod_lattice(x, tau);
        CHECK(lattice_distance(x - r, tau) < 1e-12);
        const cplx rr = reduce_real_period(x);
        CHECK(rr.real() >= 0.0);
        CHECK(rr.real() < 1.0);
        CHECK(rr.imag() == x.imag());
        const cplx shift = static_cast<double>(g.integer(-4, 4)) + static_cast<double>(g.integer(-4, 4)) * tau;
        CHECK(lattice_distance(x + shift, tau) == doctest::Approx(lattice_distance(x, tau)).epsilon(1e-12));
    }
}

TEST_CASE("parse_complex")
{
    CHECK(parse_complex("0.3+0.2i") == cplx(0.3, 0.2));
    CHECK(parse_complex("-1.5i") == cplx(0.0, -1.5));
    CHECK(parse_complex("i") == cplx(0.0, 1.0));
    CHECK(parse_complex("-i") == cplx(0.0, -1.0));
    CHECK(parse_complex("0.5") == cplx(0.5, 0.0));
    CHECK(parse_complex("1e-3-2j") == cplx(1e-3, -2.0));
    CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
}

TEST_CASE("GradedRational arithmetic")
{
    const GradedRational a(make_rational(1, 2), 2);
    const GradedRational b(make_rational(1, 3), 2);
    CHECK((a + b) == GradedRational(make_rational(5, 6), 2));
    CHECK((a * b) == GradedRational(make_rational(1, 6), 4));
    CHECK_THROWS_AS(a + GradedRational(1, 3), std::domain_error);
    CHECK((a + GradedRational(0, 5)) == a);
    CHECK(GradedRational(0, 1) == GradedRational(0, 7));
    // (1/2) dZ^2 = (1/2)(-2 pi i)^2 = -2 pi^2
    CHECK(std::abs(a.to_complex() - cplx(-2.0 * pi * pi, 0.0)) < 1e-12);
    CHECK(to_string(GradedRational(make_rational(-103, 360), 4)) == "-103/360*dZ^4");
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("RationalPolynomial operations")
{
    const RationalPolynomial p(std::vector<BigRational>{0, 1, -1}); // x(1-x)
    CHECK(p.degree() == 2);
    CHECK(p(BigRational(1, 2)) == BigRational(1, 4));
    CHECK(p.derivative() == RationalPolynomial(std::vector<BigRational>{1, -2}));
    CHECK(p.compose_linear(1, -1) == p);
    const RationalPolynomial q = p * p;
    CHECK(q.divide_exact(p) == p);
    CHECK_THROWS_AS(q.divide_exact(RationalPolynomial(std::vector<BigRational>{1, 1, 1})), std::domain_error);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(std::abs(p(cplx(0.0, 1.0)) - cplx(1.0, 1.0)) < 1e-15);
    CHECK(p(0.25) == doctest::Approx(0.1875));
}

TEST_CASE("property: polynomial evaluation is a ring homomorphism")
{
    testsupport::Gen g(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<BigRational> a, b;
        for (int i = 0, n = g.integer(0, 6); i <= n; ++i) {
            a.emplace_back(g.integer(-9, 9), g.integer(1, 7));
        }
        for (int i = 0, n = g.integer(0, 6); i <= n; ++i) {
            b.emplace_back(g.integer(-9, 9), g.integer(1, 7));
        }
        for (auto &c : a) c.canonicalize();
        for (auto &c : b) c.canonicalize();
        const RationalPolynomial pa(a), pb(b);
        BigRational x(g.integer(-20, 20), g.integer(1, 9));
        x.canonicalize();
        CHECK((pa * pb)(x) == pa(x) * pb(x));
        CHECK((pa + pb)(x) == pa(x) + pb(x));
        CHECK((pa * pb).derivative() == pa.derivative() * pb + pa * pb.derivative());
    }
}
