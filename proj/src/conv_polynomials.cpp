#include "torusconv/conv_polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>

#include "torusconv/combinatorics.hpp"

namespace torusconv
{

namespace
{

// Polynomial scaled to integer coefficients (same signs everywhere).
std::vector<BigInteger> integer_coefficients(const RationalPolynomial &p)
{
    BigInteger l = 1;
    for (const auto &c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<BigInteger> out;
    for (const auto &c : p.coeffs()) {
        out.push_back(c.get_num() * (l / c.get_den()));
    }
    return out;
}

// sign of sum c_j x^j at a finite double, by homogeneous Horner on x = a / 2^E
int integer_sign(const std::vector<BigInteger> &c, double x)
{
    if (c.empty()) {
        return 0;
    }
    if (x == 0.0) {
        return sgn(c.front());
    }
    int exp2 = 0;
    const double mant = std::frexp(x, &exp2);
    const BigInteger a(std::ldexp(mant, 53));
    const long shift = 53 - exp2;
    const std::size_t d = c.size() - 1;
    BigInteger acc = c[d];
    for (std::size_t step = 1; step <= d; ++step) {
        const std::size_t j = d - step;
        BigInteger term = c[j];
        if (shift >= 0) {
            term <<= static_cast<mp_bitcnt_t>(shift * static_cast<long>(step));
            acc = acc * a + term;
        } else {
            // x is a large integer multiple of 2^-shift: scale a instead
            BigInteger ax = a;
            ax <<= static_cast<mp_bitcnt_t>(-shift);
            acc = acc * ax + term;
        }
    }
    return sgn(acc);
}

double bisect(const std::vector<BigInteger> &c, double lo, double hi, int sign_lo)
{
    for (;;) {
        const double mid = lo + 0.5 * (hi - lo);
        if (!(mid > lo && mid < hi)) {
            return mid;
        }
        const int s = integer_sign(c, mid);
        if (s == 0) {
            return mid;
        }
        if (s == sign_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

BigRational pow2(int n)
{
    BigInteger p = 1;
    p <<= static_cast<mp_bitcnt_t>(n);
    return BigRational(p);
}

double log_ratio(double x)
{
    return std::log((1.0 - x) / x);
}

} // namespace

PnPolynomial p_poly(int n)
{
    if (n < 1) {
        throw std::out_of_range("p_poly: need n >= 1");
    }
    std::vector<BigRational> c(static_cast<std::size_t>(n) + 1, BigRational(0));
    const BigInteger fn = factorial(n - 1);
    for (int k = 1; k <= n; ++k) {
        BigRational v(factorial(k - 1) * stirling_second(n, k), fn);
        v.canonicalize();
        c[static_cast<std::size_t>(k)] = (k % 2 == 1) ? v : BigRational(-v);
    }
    return {n, RationalPolynomial(std::move(c))};
}

PnPolynomial p_next(const PnPolynomial &p)
{
    const RationalPolynomial x_one_minus_x(std::vector<BigRational>{0, 1, -1});
    return {p.n + 1, x_one_minus_x * p.poly.derivative() * BigRational(1, p.n)};
}

bool p_symmetry_check(int n)
{
    const RationalPolynomial p = p_poly(n).poly;
    const RationalPolynomial reflected = p.compose_linear(1, -1);
    return reflected == (n % 2 == 0 ? p : p * BigRational(-1));
}

bool p_half_check(int n)
{
    const BigRational value = p_poly(n).poly(BigRational(1, 2));
    if (n == 1) {
        return value == BigRational(1, 2);
    }
    BigRational expect = (pow2(n) - 1) * bernoulli_number(n) / BigRational(factorial(n));
    if (n % 2 == 1) {
        expect = -expect;
    }
    return value == expect;
}

int exact_sign(const RationalPolynomial &p, double x)
{
    if (!std::isfinite(x)) {
        throw std::domain_error("exact_sign: non-finite argument");
    }
    if (x < 0.0) {
        const int s = integer_sign(integer_coefficients(p.compose_linear(0, -1)), -x);
        return s;
    }
    return integer_sign(integer_coefficients(p), x);
}

std::vector<std::vector<double>> p_zero_levels(int n_max)
{
    if (n_max < 1) {
        throw std::out_of_range("p_zeros: need n >= 1");
    }
    std::vector<std::vector<double>> levels(static_cast<std::size_t>(n_max) + 1);
    levels[1] = {0.0};
    if (n_max >= 2) {
        levels[2] = {0.0, 1.0};
    }
    const RationalPolynomial x_one_minus_x(std::vector<BigRational>{0, 1, -1});
    PnPolynomial p = p_poly(std::min(n_max, 2));
    for (int n = 3; n <= n_max; ++n) {
        p = p_next(p);
        const auto c = integer_coefficients(p.poly.divide_exact(x_one_minus_x));
        const std::vector<double> &prev = levels[static_cast<std::size_t>(n) - 1];
        std::vector<double> roots{0.0};
        for (std::size_t j = 0; j + 1 < prev.size(); ++j) {
            const double lo = prev[j];
            const double hi = prev[j + 1];
            const int s_lo = integer_sign(c, lo);
            const int s_hi = integer_sign(c, hi);
            if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) {
                throw interlacing_error("p_zeros: no sign change of p_" + std::to_string(n) + " between zeros " +
                                        std::to_string(j) + " and " + std::to_string(j + 1) + " of p_" +
                                        std::to_string(n - 1));
            }
            roots.push_back(bisect(c, lo, hi, s_lo));
        }
        roots.push_back(1.0);
        levels[static_cast<std::size_t>(n)] = std::move(roots);
    }
    return levels;
}

std::vector<double> p_zeros(int n)
{
    return p_zero_levels(n).back();
}

bool interlaced(const std::vector<double> &lower, const std::vector<double> &upper)
{
    if (upper.size() != lower.size() + 1 || lower.size() < 2) {
        return false;
    }
    if (upper.front() != lower.front() || upper.back() != lower.back()) {
        return false;
    }
    for (std::size_t j = 0; j + 1 < lower.size(); ++j) {
        if (!(lower[j] < upper[j + 1] && upper[j + 1] < lower[j + 1])) {
            return false;
        }
    }
    return true;
}

double min_derivative_at_zeros(int n, const std::vector<double> &zeros)
{
    const RationalPolynomial d = p_poly(n).poly.derivative();
    double best = std::numeric_limits<double>::infinity();
    for (double z : zeros) {
        best = std::min(best, std::abs(d(z)));
    }
    return best;
}

namespace
{

RationalPolynomial remainder(RationalPolynomial a, const RationalPolynomial &b)
{
    const int db = b.degree();
    const BigRational lead = b.coeff(db);
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        a -= b * RationalPolynomial::monomial(shift, a.coeff(a.degree()) / lead);
    }
    return a;
}

} // namespace

bool squarefree(const RationalPolynomial &p)
{
    RationalPolynomial a = p;
    RationalPolynomial b = p.derivative();
    while (!b.is_zero()) {
        RationalPolynomial r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.degree() == 0;
}

double rho(double x)
{
    if (!(x > 0.0 && x < 1.0)) {
        throw std::domain_error("rho: x outside (0,1)");
    }
    const double l = log_ratio(x);
    return 1.0 / (x * (1.0 - x) * (l * l + pi * pi));
}

// With L = log((1-x)/x), rho(x) dx = dL / (L^2 + pi^2) and x = 0 maps to L = +inf.
double rho_mass()
{
    static const double mass = [] {
        boost::math::quadrature::sinh_sinh<double> integrator;
        return integrator.integrate([](double l) { return 1.0 / (l * l + pi * pi); });
    }();
    return mass;
}

double rho_cdf(double x)
{
    if (x <= 0.0) {
        return 0.0;
    }
    if (x >= 1.0) {
        return 1.0;
    }
    boost::math::quadrature::exp_sinh<double> integrator;
    const double part = integrator.integrate([](double l) { return 1.0 / (l * l + pi * pi); }, log_ratio(x),
                                             std::numeric_limits<double>::infinity());
    return part / rho_mass();
}

double ks_distance(const std::vector<double> &interior_zeros)
{
    std::vector<double> z = interior_zeros;
    std::sort(z.begin(), z.end());
    const double m = static_cast<double>(z.size());
    double d = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double f = rho_cdf(z[i]);
        d = std::max({d, static_cast<double>(i + 1) / m - f, f - static_cast<double>(i) / m});
    }
    return d;
}

double zero_density_compare(int n)
{
    if (n < 3) {
        throw std::out_of_range("zero_density_compare: need interior zeros (n >= 3)");
    }
    const std::vector<double> all = p_zeros(n);
    return ks_distance(std::vector<double>(all.begin() + 1, all.end() - 1));
}

std::vector<HistogramBin> zero_histogram(const std::vector<double> &interior_zeros, int bins)
{
    if (bins < 1) {
        throw std::invalid_argument("zero_histogram: need at least one bin");
    }
    std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
    const double width = 1.0 / bins;
    for (int b = 0; b < bins; ++b) {
        auto &bin = out[static_cast<std::size_t>(b)];
        bin.lo = b * width;
        bin.hi = (b + 1) * width;
        bin.rho = (rho_cdf(bin.hi) - rho_cdf(bin.lo)) / width;
    }
    if (!interior_zeros.empty()) {
        const double share = 1.0 / (static_cast<double>(interior_zeros.size()) * width);
        for (double z : interior_zeros) {
            const int b = std::clamp(static_cast<int>(z * bins), 0, bins - 1);
            out[static_cast<std::size_t>(b)].empirical += share;
        }
    }
    return out;
}

cplx hurwitz_zeta(int s, cplx a)
{
    if (s < 2) {
        throw std::domain_error("hurwitz_zeta: need s >= 2");
    }
    if (a.imag() == 0.0 && a.real() <= 0.0 && a.real() == std::round(a.real())) {
        throw std::domain_error("hurwitz_zeta: pole at non-positive integer a");
    }
    constexpr int direct = 50;
    constexpr int corrections = 8;
    auto inv_pow = [s](cplx w) {
        cplx p = 1.0;
        for (int i = 0; i < s; ++i) {
            p *= w;
        }
        return 1.0 / p;
    };
    cplx sum = 0.0;
    for (int k = 0; k < direct; ++k) {
        sum += inv_pow(a + static_cast<double>(k));
    }
    const cplx b = a + static_cast<double>(direct);
    const cplx bs = inv_pow(b);
    sum += b * bs / static_cast<double>(s - 1) + 0.5 * bs;
    // + sum_j B_2j / (2j)! s (s+1) ... (s+2j-2) b^(-s-2j+1)
    cplx term = bs / b;
    double rising = s;
    for (int j = 1; j <= corrections; ++j) {
        if (j > 1) {
            rising *= static_cast<double>(s + 2 * j - 3) * static_cast<double>(s + 2 * j - 2);
            term /= b * b;
        }
        const double coeff = to_double(bernoulli_number(2 * j) / BigRational(factorial(2 * j)));
        sum += coeff * rising * term;
    }
    return sum;
}

namespace
{

cplx hurwitz_parameter(double x)
{
    if (!(x > 0.0 && x < 1.0)) {
        throw std::domain_error("p_hurwitz: x outside (0,1)");
    }
    const cplx y0(log_ratio(x), pi);
    return y0 / two_pi_i;
}

cplx hurwitz_combination(int n, cplx first, cplx second)
{
    const double sgn_n = (n % 2 == 0) ? 1.0 : -1.0;
    return -(hurwitz_zeta(n, first) + sgn_n * hurwitz_zeta(n, second)) / std::pow(two_pi_i, n);
}

} // namespace

cplx p_hurwitz_rhs(int n, double x)
{
    const cplx a = hurwitz_parameter(x);
    return hurwitz_combination(n, a, 1.0 - a);
}

cplx p_hurwitz_rhs_shifted(int n, double x)
{
    const cplx a = hurwitz_parameter(x);
    return hurwitz_combination(n, a, -a - 1.0);
}

double p_hurwitz_residual(int n, double x)
{
    if (n < 2) {
        throw std::out_of_range("p_hurwitz_residual: need n >= 2");
    }
    return std::abs(p_poly(n).poly(x) - p_hurwitz_rhs(n, x));
}

BigRational polylog_neg(int n, const BigRational &x)
{
    if (n < 0) {
        throw std::out_of_range("polylog_neg: need n >= 0");
    }
    if (x == 1) {
        throw std::domain_error("polylog_neg: x = 1");
    }
    // (x d/dx)^k x/(1-x) = P(x) / (1-x)^(k+1)
    const RationalPolynomial id = RationalPolynomial::monomial(1);
    const RationalPolynomial one_minus_x(std::vector<BigRational>{1, -1});
    RationalPolynomial p = id;
    int power = 1;
    for (int k = 0; k < n; ++k) {
        p = id * one_minus_x * p.derivative() + id * p * BigRational(power);
        ++power;
    }
    BigRational den = 1;
    for (int k = 0; k < power; ++k) {
        den *= (1 - x);
    }
    return p(x) / den;
}

BigRational polylog_neg_check(int n, const BigRational &x)
{
    BigRational lhs = polylog_neg(n, x) / BigRational(factorial(n));
    if (n % 2 == 1) {
        lhs = -lhs;
    }
    BigRational r = lhs - p_poly(n + 1).poly(BigRational(1 / (1 - x)));
    r.canonicalize();
    return r;
}

cplx generating_function(cplx x, cplx y)
{
    const cplx e = std::exp(y);
    return x * e / (1.0 - x + x * e);
}

double generating_partial_residual(int terms, double x, cplx y)
{
    PnPolynomial p = p_poly(1);
    cplx sum = 0.0;
    cplx yp = 1.0;
    for (int n = 1; n <= terms; ++n) {
        if (n > 1) {
            p = p_next(p);
            yp *= y;
        }
        sum += p.poly(x) * yp;
    }
    return std::abs(generating_function(x, y) - sum);
}

} // namespace torusconv
