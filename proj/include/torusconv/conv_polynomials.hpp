#ifndef TORUSCONV_CONV_POLYNOMIALS_HPP
#define TORUSCONV_CONV_POLYNOMIALS_HPP

#include <vector>

#include "torusconv/rational.hpp"
#include "torusconv/torus.hpp"

namespace torusconv
{

/// p_n(x) = sum_k (-1)^(k-1) (k-1)!/(n-1)! S(n,k) x^k, the C-row at dZ = 1.
struct PnPolynomial
{
    int n = 1;
    RationalPolynomial poly;
};

PnPolynomial p_poly(int n);
/// p_{n+1} = x (1-x) p_n' / n.
PnPolynomial p_next(const PnPolynomial &p);
/// Exact test of p_n(1-x) = (-1)^n p_n(x).
bool p_symmetry_check(int n);
/// p_n(1/2) = (-1)^n (2^n - 1) B_n / n! for n >= 2, p_1(1/2) = 1/2.
bool p_half_check(int n);

/// Thrown when a level's roots fail to bracket the next level's roots.
class interlacing_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// All n zeros of p_n in [0,1], ascending, 0 and 1 exact for n >= 2.
/// Roots are bisected to full double resolution inside the brackets given
/// by the previous level, with exact signs at every midpoint.
std::vector<double> p_zeros(int n);
/// Roots of p_1 ... p_n_max, index n holding level n (index 0 empty).
std::vector<std::vector<double>> p_zero_levels(int n_max);
/// Strict interlacing of the two root lists x^[n], x^[n+1].
bool interlaced(const std::vector<double> &lower, const std::vector<double> &upper);
/// min |p_n'| over the zeros of p_n.
double min_derivative_at_zeros(int n, const std::vector<double> &zeros);
/// gcd(p, p') is a constant, exactly.
bool squarefree(const RationalPolynomial &p);

/// Exact sign of the polynomial at a double.
int exact_sign(const RationalPolynomial &p, double x);

/// rho(x) = 1 / (x (1-x) |y0|^2), y0 = log((1-x)/x) + i pi.
double rho(double x);
/// int_0^1 rho, by quadrature.
double rho_mass();
/// int_0^x rho / int_0^1 rho, by quadrature.
double rho_cdf(double x);
/// Kolmogorov-Smirnov distance between the interior zeros of p_n and rho.
double zero_density_compare(int n);
double ks_distance(const std::vector<double> &interior_zeros);

struct HistogramBin
{
    double lo = 0.0;
    double hi = 0.0;
    double empirical = 0.0; // fraction of interior zeros per unit length
    double rho = 0.0;       // normalised rho mass per unit length
};
std::vector<HistogramBin> zero_histogram(const std::vector<double> &interior_zeros, int bins);

/// zeta(s, a) = sum_{k>=0} (k+a)^(-s), 50 direct terms and an 8-term
/// Euler-Maclaurin tail. Throws std::domain_error at non-positive integer a.
cplx hurwitz_zeta(int s, cplx a);

/// -(2 pi i)^(-n) { zeta(n, a) + (-1)^n zeta(n, 1 - a) }, a = y0 / (2 pi i).
cplx p_hurwitz_rhs(int n, double x);
/// Same with the second argument -a - 1.
cplx p_hurwitz_rhs_shifted(int n, double x);
double p_hurwitz_residual(int n, double x);

/// (x d/dx)^n x/(1-x) evaluated exactly.
BigRational polylog_neg(int n, const BigRational &x);
/// (-1)^n / n! Li_{-n}(x) - p_{n+1}(1/(1-x)), exact.
BigRational polylog_neg_check(int n, const BigRational &x);

/// G(x,y) = x e^y / (1 - x + x e^y).
cplx generating_function(cplx x, cplx y);
/// |G(x,y) - sum_{n=1}^N p_n(x) y^(n-1)|.
double generating_partial_residual(int terms, double x, cplx y);

} // namespace torusconv

#endif
