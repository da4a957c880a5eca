#include "torusconv/weierstrass.hpp"

#include <cmath>

namespace torusconv
{

Weierstrass::Weierstrass(const TorusParams &params, int max_kernel_order) : theta_(params, max_kernel_order)
{
    // Z(x) = 1/x + a1 x + O(x^3) with a1 = -pi^2/3 + 8 pi^2 sum q^n/(1-q^n)^2.
    const cplx q = params.q();
    cplx sum = 0.0;
    cplx qn = 1.0;
    for (int n = 1; n <= theta_.truncation_order(); ++n) {
        qn *= q;
        const cplx d = 1.0 - qn;
        sum += qn / (d * d);
        if (std::abs(qn) < params.series_tol()) {
            break;
        }
    }
    e2_ = pi * pi / 3.0 - 8.0 * pi * pi * sum;
    solve_e4_e6();
}

void Weierstrass::check_pole(cplx x, const char *what) const
{
    if (lattice_distance(x, params()) < params().pole_guard()) {
        throw pole_proximity_error(std::string(what) + ": argument on a lattice point");
    }
}

Weierstrass::SeriesTerms Weierstrass::series(cplx x, int derivatives) const
{
    const TorusParams &p = params();
    const cplx z = std::exp(two_pi_i * reduce_real_period(x));
    const cplx q = p.q();
    const double bound = std::max({1.0, std::abs(z), 1.0 / std::abs(z)});
    const double abs_q = std::abs(q);
    const int terms = std::max(1, static_cast<int>(std::ceil(std::log(p.series_tol() / bound) / std::log(abs_q))) + 1);
    const double four_pi2 = 4.0 * pi * pi;

    const cplx zm1 = z - 1.0;
    SeriesTerms t{};
    t.d0 = cplx(0.0, pi) * (z + 1.0) / zm1;
    cplx s1 = z / (zm1 * zm1);
    cplx s2 = -two_pi_i * z * (z + 1.0) / (zm1 * zm1 * zm1);

    cplx qn = 1.0;
    for (int n = 1; n <= terms; ++n) {
        qn *= q;
        const cplx w = qn * z;
        const cplx u = qn / z;
        const cplx dw = 1.0 - w;
        const cplx du = 1.0 - u;
        t.d0 += two_pi_i * (u / du - w / dw);
        if (derivatives >= 1) {
            s1 += w / (dw * dw) + u / (du * du);
        }
        if (derivatives >= 2) {
            s2 += two_pi_i * (w * (1.0 + w) / (dw * dw * dw) - u * (1.0 + u) / (du * du * du));
        }
    }
    t.d1 = four_pi2 * s1;
    t.d2 = four_pi2 * s2;
    return t;
}

cplx Weierstrass::zeta_e(cplx x) const
{
    check_pole(x, "zeta_e");
    return series(x, 0).d0;
}

cplx Weierstrass::zeta_w(cplx x) const
{
    return zeta_e(x) + e2_ * x;
}

cplx Weierstrass::zeta_e_prime(cplx x) const
{
    check_pole(x, "zeta_e_prime");
    return series(x, 1).d1;
}

cplx Weierstrass::wp(cplx x) const
{
    check_pole(x, "wp");
    return -series(x, 1).d1 - e2_;
}

cplx Weierstrass::wp_prime(cplx x) const
{
    check_pole(x, "wp_prime");
    return -series(x, 2).d2;
}

cplx Weierstrass::cubic_residual(cplx x) const
{
    const cplx p = wp(x);
    const cplx dp = wp_prime(x);
    return dp * dp - 4.0 * (p * p * p - 15.0 * e4_ * p - 30.0 * e6_);
}

void Weierstrass::solve_e4_e6()
{
    const double h = params().tau().imag();
    cplx x1{0.31, 0.17 * h};
    cplx x2{0.13, 0.41 * h};
    for (int attempt = 0; attempt < 8; ++attempt) {
        const cplx p1 = wp(x1);
        const cplx p2 = wp(x2);
        if (std::abs(p1 - p2) > 1e-6 * (std::abs(p1) + std::abs(p2))) {
            const cplx d1 = wp_prime(x1);
            const cplx d2 = wp_prime(x2);
            const cplx r1 = d1 * d1 - 4.0 * p1 * p1 * p1;
            const cplx r2 = d2 * d2 - 4.0 * p2 * p2 * p2;
            e4_ = -(r1 - r2) / (60.0 * (p1 - p2));
            e6_ = -(r1 + 60.0 * e4_ * p1) / 120.0;
            sample_points_ = {x1, x2};
            return;
        }
        x2 += cplx(0.07, 0.05 * h);
    }
    throw std::runtime_error("extract_e4_e6: could not find non-degenerate sample points");
}

cplx extract_e2(const Weierstrass &w)
{
    const TorusParams &p = w.params();
    LaurentOptions opts;
    opts.regular_orders = 2;
    const LaurentData d = extract_laurent([&w](cplx x) { return w.zeta_e(x); }, 0.0, 1,
                                          lattice_laurent_radius(0.0, p), opts);
    return -d.regular[1];
}

std::pair<cplx, cplx> extract_e4_e6(const Weierstrass &w)
{
    return {w.e4(), w.e6()};
}

} // namespace torusconv
