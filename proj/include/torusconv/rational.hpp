#ifndef TORUSCONV_RATIONAL_HPP
#define TORUSCONV_RATIONAL_HPP

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace torusconv
{

/// Arbitrary precision rational, always canonical (den > 0, reduced).
using BigRational = mpq_class;
using BigInteger = mpz_class;

BigRational make_rational(long num, long den = 1);
std::string to_string(const BigRational &r);
double to_double(const BigRational &r);

/// coeff * (Delta Z)^dz_power with Delta Z = -2 pi i.
///
/// Sums are only defined between equal grades (or when one side is zero);
/// anything else has to go through to_complex().
struct GradedRational
{
    BigRational coeff{0};
    int dz_power = 0;

    GradedRational() = default;
    GradedRational(BigRational c, int power) : coeff(std::move(c)), dz_power(power)
    {
        coeff.canonicalize();
    }

    bool is_zero() const { return sgn(coeff) == 0; }
    std::complex<double> to_complex() const;

    GradedRational operator-() const { return {-coeff, dz_power}; }
    GradedRational &operator+=(const GradedRational &rhs);
    GradedRational &operator-=(const GradedRational &rhs) { return *this += -rhs; }
    GradedRational &operator*=(const GradedRational &rhs);

    friend GradedRational operator+(GradedRational lhs, const GradedRational &rhs) { return lhs += rhs; }
    friend GradedRational operator-(GradedRational lhs, const GradedRational &rhs) { return lhs -= rhs; }
    friend GradedRational operator*(GradedRational lhs, const GradedRational &rhs) { return lhs *= rhs; }

    /// Zero compares equal to zero in every grade.
    friend bool operator==(const GradedRational &a, const GradedRational &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return a.is_zero() && b.is_zero();
        }
        return a.dz_power == b.dz_power && a.coeff == b.coeff;
    }
};

std::string to_string(const GradedRational &g);

/// Univariate polynomial with exact coefficients; coeffs[d] multiplies x^d.
class RationalPolynomial
{
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRational> coeffs);

    static RationalPolynomial monomial(int degree, BigRational c = 1);
    static RationalPolynomial constant(BigRational c);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigRational> &coeffs() const { return coeffs_; }
    BigRational coeff(int d) const;

    BigRational operator()(const BigRational &x) const;
    std::complex<double> operator()(std::complex<double> x) const;
    double operator()(double x) const;

    RationalPolynomial derivative() const;
    /// p(a + b x).
    RationalPolynomial compose_linear(const BigRational &a, const BigRational &b) const;
    /// Exact division; throws std::domain_error when there is a remainder.
    RationalPolynomial divide_exact(const RationalPolynomial &divisor) const;

    RationalPolynomial &operator+=(const RationalPolynomial &rhs);
    RationalPolynomial &operator-=(const RationalPolynomial &rhs);
    RationalPolynomial &operator*=(const RationalPolynomial &rhs);
    RationalPolynomial &operator*=(const BigRational &s);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial &b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial &b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial &b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const BigRational &s) { return a *= s; }
    friend bool operator==(const RationalPolynomial &a, const RationalPolynomial &b)
    {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim();

    std::vector<BigRational> coeffs_;
};

std::string to_string(const RationalPolynomial &p);

} // namespace torusconv

#endif
