#include "torusconv/rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "torusconv/torus.hpp"

namespace torusconv
{

BigRational make_rational(long num, long den)
{
    if (den == 0) {
        throw std::domain_error("make_rational: zero denominator");
    }
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const BigRational &r)
{
    return r.get_str();
}

double to_double(const BigRational &r)
{
    return r.get_d();
}

std::complex<double> GradedRational::to_complex() const
{
    // (-2 pi i)^k = (2 pi)^k * (-i)^k
    static constexpr std::complex<double> minus_i_powers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    const double mag = std::pow(2.0 * pi, dz_power) * to_double(coeff);
    return mag * minus_i_powers[((dz_power % 4) + 4) % 4];
}

GradedRational &GradedRational::operator+=(const GradedRational &rhs)
{
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        *this = rhs;
        return *this;
    }
    if (dz_power != rhs.dz_power) {
        throw std::domain_error("GradedRational: cannot add (Delta Z)^" + std::to_string(dz_power) +
                                " and (Delta Z)^" + std::to_string(rhs.dz_power) + " terms");
    }
    coeff += rhs.coeff;
    return *this;
}

GradedRational &GradedRational::operator*=(const GradedRational &rhs)
{
    coeff *= rhs.coeff;
    dz_power += rhs.dz_power;
    return *this;
}

std::string to_string(const GradedRational &g)
{
    if (g.dz_power == 0) {
        return to_string(g.coeff);
    }
    return to_string(g.coeff) + "*dZ^" + std::to_string(g.dz_power);
}

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto &c : coeffs_) {
        c.canonicalize();
    }
    trim();
}

RationalPolynomial RationalPolynomial::monomial(int degree, BigRational c)
{
    std::vector<BigRational> v(static_cast<std::size_t>(degree) + 1, BigRational(0));
    v.back() = std::move(c);
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::constant(BigRational c)
{
    return RationalPolynomial(std::vector<BigRational>{std::move(c)});
}

void RationalPolynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

BigRational RationalPolynomial::coeff(int d) const
{
    if (d < 0 || d > degree()) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(d)];
}

BigRational RationalPolynomial::operator()(const BigRational &x) const
{
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::complex<double> RationalPolynomial::operator()(std::complex<double> x) const
{
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + to_double(*it);
    }
    return acc;
}

double RationalPolynomial::operator()(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + to_double(*it);
    }
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<BigRational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * static_cast<long>(k);
    }
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::compose_linear(const BigRational &a, const BigRational &b) const
{
    const RationalPolynomial inner(std::vector<BigRational>{a, b});
    RationalPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += constant(*it);
    }
    return acc;
}

RationalPolynomial RationalPolynomial::divide_exact(const RationalPolynomial &divisor) const
{
    if (divisor.is_zero()) {
        throw std::domain_error("RationalPolynomial: division by zero polynomial");
    }
    std::vector<BigRational> rem = coeffs_;
    const int dd = divisor.degree();
    const int nd = degree();
    if (nd < dd) {
        if (is_zero()) {
            return {};
        }
        throw std::domain_error("RationalPolynomial: inexact division");
    }
    std::vector<BigRational> quot(static_cast<std::size_t>(nd - dd) + 1, BigRational(0));
    const BigRational &lead = divisor.coeffs_.back();
    for (int k = nd - dd; k >= 0; --k) {
        const BigRational c = rem[static_cast<std::size_t>(k + dd)] / lead;
        quot[static_cast<std::size_t>(k)] = c;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    if (std::any_of(rem.begin(), rem.end(), [](const BigRational &r) { return sgn(r) != 0; })) {
        throw std::domain_error("RationalPolynomial: inexact division");
    }
    return RationalPolynomial(std::move(quot));
}

RationalPolynomial &RationalPolynomial::operator+=(const RationalPolynomial &rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), BigRational(0));
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    trim();
    return *this;
}

RationalPolynomial &RationalPolynomial::operator-=(const RationalPolynomial &rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), BigRational(0));
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    trim();
    return *this;
}

RationalPolynomial &RationalPolynomial::operator*=(const RationalPolynomial &rhs)
{
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigRational> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RationalPolynomial &RationalPolynomial::operator*=(const BigRational &s)
{
    for (auto &c : coeffs_) {
        c *= s;
    }
    trim();
    return *this;
}

std::string to_string(const RationalPolynomial &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (int d = 0; d <= p.degree(); ++d) {
        const BigRational &c = p.coeffs()[static_cast<std::size_t>(d)];
        if (sgn(c) == 0) {
            continue;
        }
        if (!out.empty()) {
            out += sgn(c) > 0 ? " + " : " - ";
        } else if (sgn(c) < 0) {
            out += "-";
        }
        const BigRational a = abs(c);
        if (d == 0 || a != 1) {
            out += to_string(a);
        }
        if (d >= 1) {
            out += (d == 0 || a != 1) ? "*x" : "x";
            if (d >= 2) {
                out += "^" + std::to_string(d);
            }
        }
    }
    return out;
}

} // namespace torusconv
