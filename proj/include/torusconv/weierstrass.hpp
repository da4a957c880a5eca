#ifndef TORUSCONV_WEIERSTRASS_HPP
#define TORUSCONV_WEIERSTRASS_HPP

#include <utility>

#include "torusconv/laurent.hpp"
#include "torusconv/theta.hpp"

namespace torusconv
{

/// Eisenstein's zeta Z = d/dx log theta, the Weierstrass functions built on
/// it, and the Eisenstein series e2, e4, e6 of the lattice Z + tau Z.
///
/// Conventions: Z(x + 1) = Z(x), Z(x + tau) = Z(x) - 2 pi i, Res_0 Z = 1;
/// zeta(x) = Z(x) + e2 x;  wp = -Z' - e2;
/// wp'^2 = 4 (wp^3 - 15 e4 wp - 30 e6).
class Weierstrass
{
public:
    explicit Weierstrass(const TorusParams &params, int max_kernel_order = ThetaEvaluator::default_max_kernel_order);

    const TorusParams &params() const { return theta_.params(); }
    const ThetaEvaluator &theta() const { return theta_; }

    cplx zeta_e(cplx x) const;
    /// Classical Weierstrass zeta, zeta(x) = Z(x) + e2 x.
    cplx zeta_w(cplx x) const;
    /// Z'(x).
    cplx zeta_e_prime(cplx x) const;
    cplx wp(cplx x) const;
    cplx wp_prime(cplx x) const;

    cplx e2() const { return e2_; }
    cplx e4() const { return e4_; }
    cplx e6() const { return e6_; }

    /// Coefficient of x in the expansion of Z at 0 (so e2 = -a1).
    cplx zeta_e_linear_coefficient() const { return -e2_; }

    /// wp'^2 - 4 (wp^3 - 15 e4 wp - 30 e6) at x.
    cplx cubic_residual(cplx x) const;

    /// Points used for the e4/e6 linear solve (after any re-sampling).
    std::pair<cplx, cplx> e4_e6_sample_points() const { return sample_points_; }

private:
    struct SeriesTerms
    {
        cplx d0, d1, d2; // Z, Z', Z''
    };
    SeriesTerms series(cplx x, int derivatives) const;
    void check_pole(cplx x, const char *what) const;
    void solve_e4_e6();

    ThetaEvaluator theta_;
    cplx e2_{};
    cplx e4_{};
    cplx e6_{};
    std::pair<cplx, cplx> sample_points_{};
};

/// e2 recomputed from the Laurent expansion of Z at 0 (coefficient of x^1).
cplx extract_e2(const Weierstrass &w);

/// e4, e6 from the linear system wp'(x_i)^2 - 4 wp(x_i)^3 = -60 e4 wp(x_i) - 120 e6.
std::pair<cplx, cplx> extract_e4_e6(const Weierstrass &w);

} // namespace torusconv

#endif
