#include "torusconv/basis_change.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "torusconv/combinatorics.hpp"
#include "torusconv/laurent.hpp"

namespace torusconv
{

namespace
{

void check_nk(int n, int k, const char *what)
{
    if (n < 1 || k < 1 || k > n) {
        throw std::out_of_range(std::string(what) + ": need 1 <= k <= n");
    }
}

BigRational sign(int e)
{
    return (e % 2 == 0) ? BigRational(1) : BigRational(-1);
}

BigRational ratio(const BigInteger &num, const BigInteger &den)
{
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

BigRational pow2(int n)
{
    BigInteger p = 1;
    p <<= static_cast<mp_bitcnt_t>(n);
    return BigRational(p);
}

} // namespace

GradedRational coeff_c(int n, int k)
{
    check_nk(n, k, "coeff_c");
    const BigRational v = sign(n - 1) * ratio(factorial(k - 1) * stirling_first(n, k), factorial(n - 1));
    return {v, n - k};
}

GradedRational coeff_c0(int n)
{
    if (n < 0) {
        throw std::out_of_range("coeff_c0: negative order");
    }
    if (n == 0) {
        return {1, 0};
    }
    BigRational sum = 0;
    for (int m = 1; m <= n + 1; ++m) {
        sum += BigRational(stirling_first(n + 1, m), m);
    }
    sum.canonicalize();
    const BigRational v = 1 / pow2(n) + sign(n + 1) * sum / BigRational(factorial(n));
    return {v, n};
}

GradedRational coeff_c0_recursive(int n)
{
    if (n < 0) {
        throw std::out_of_range("coeff_c0_recursive: negative order");
    }
    if (n == 0) {
        return {1, 0};
    }
    BigRational v = 1 / pow2(n);
    for (int k = 1; k <= n + 1; ++k) {
        v -= coeff_c(n + 1, k).coeff / BigRational(factorial(k));
    }
    return {v, n};
}

GradedRational coeff_C(int n, int k)
{
    check_nk(n, k, "coeff_C");
    const BigRational v = sign(k - 1) * ratio(factorial(k - 1) * stirling_second(n, k), factorial(n - 1));
    return {v, n - k};
}

GradedRational coeff_C_closed(int n, int k)
{
    check_nk(n, k, "coeff_C_closed");
    const BigRational v = sign(k - 1) * ratio(stirling_second_closed_scaled(n, k), factorial(n - 1));
    return {v, n - k};
}

GradedRational coeff_C0(int n)
{
    if (n < 0) {
        throw std::out_of_range("coeff_C0: negative order");
    }
    // 2 B_n (1 - 2^(n-1)) / n!
    const BigRational v = 2 * bernoulli_number(n) * (1 - pow2(n) / 2) / BigRational(factorial(n));
    return {v, n};
}

CoeffMatrix::CoeffMatrix(int n_max, std::vector<std::vector<GradedRational>> rows)
    : n_max_(n_max), rows_(std::move(rows))
{
    if (n_max < 0 || rows_.size() != static_cast<std::size_t>(n_max) + 1) {
        throw std::invalid_argument("CoeffMatrix: row count does not match n_max");
    }
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        if (rows_[n].size() != n + 1) {
            throw std::invalid_argument("CoeffMatrix: rows must be lower triangular");
        }
    }
}

GradedRational CoeffMatrix::at(int n, int k) const
{
    if (n < 0 || n > n_max_ || k < 0) {
        throw std::out_of_range("CoeffMatrix::at");
    }
    if (k > n) {
        return {0, n - k};
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

CoeffMatrix CoeffMatrix::c_matrix(int n_max)
{
    std::vector<std::vector<GradedRational>> rows;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<GradedRational> row{coeff_c0(n)};
        for (int k = 1; k <= n; ++k) {
            row.push_back(coeff_c(n, k));
        }
        rows.push_back(std::move(row));
    }
    return {n_max, std::move(rows)};
}

CoeffMatrix CoeffMatrix::C_matrix(int n_max)
{
    std::vector<std::vector<GradedRational>> rows;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<GradedRational> row{coeff_C0(n)};
        for (int k = 1; k <= n; ++k) {
            row.push_back(coeff_C(n, k));
        }
        rows.push_back(std::move(row));
    }
    return {n_max, std::move(rows)};
}

CoeffMatrix compose(const CoeffMatrix &a, const CoeffMatrix &b)
{
    if (a.n_max() != b.n_max()) {
        throw std::invalid_argument("compose: size mismatch");
    }
    std::vector<std::vector<GradedRational>> rows;
    for (int n = 0; n <= a.n_max(); ++n) {
        std::vector<GradedRational> row;
        for (int j = 0; j <= n; ++j) {
            GradedRational acc{0, n - j};
            for (int k = j; k <= n; ++k) {
                acc += a.at(n, k) * b.at(k, j);
            }
            row.push_back(acc);
        }
        rows.push_back(std::move(row));
    }
    return {a.n_max(), std::move(rows)};
}

InverseCheck matrix_inverse_check(int n_max)
{
    const CoeffMatrix c = CoeffMatrix::c_matrix(n_max);
    const CoeffMatrix C = CoeffMatrix::C_matrix(n_max);
    InverseCheck out;
    for (bool cC : {true, false}) {
        const CoeffMatrix p = cC ? compose(c, C) : compose(C, c);
        for (int n = 0; n <= n_max; ++n) {
            for (int j = 0; j <= n; ++j) {
                const GradedRational expect{n == j ? 1 : 0, 0};
                if (!(p.at(n, j) == expect)) {
                    out.ok = false;
                    out.failing_entry = std::make_pair(n, j);
                    out.failing_in_cC = cC;
                    return out;
                }
            }
        }
    }
    return out;
}

GradedRational residue_poly_V_exact(int n, long m)
{
    if (n < 1) {
        throw std::out_of_range("residue_poly_V: need n >= 1");
    }
    BigRational prod = 1;
    for (int k = 1; k <= n - 1; ++k) {
        prod *= BigRational(BigInteger(m) - k);
    }
    return {sign(n - 1) * prod / BigRational(factorial(n - 1)), n - 1};
}

cplx residue_poly_V(int n, long m)
{
    return residue_poly_V_exact(n, m).to_complex();
}

BasisEvaluator::BasisEvaluator(std::shared_ptr<const Weierstrass> w, int n_max) : w_(std::move(w)), n_max_(n_max)
{
    if (!w_) {
        throw std::invalid_argument("BasisEvaluator: null Weierstrass");
    }
    if (n_max_ < 1 || n_max_ > w_->theta().max_kernel_order()) {
        throw std::out_of_range("BasisEvaluator: n_max exceeds the kernel order");
    }
    const CoeffMatrix c = CoeffMatrix::c_matrix(n_max_);
    const CoeffMatrix C = CoeffMatrix::C_matrix(n_max_);
    for (int n = 0; n <= n_max_; ++n) {
        std::vector<cplx> cr;
        std::vector<cplx> Cr;
        for (int k = 0; k <= n; ++k) {
            cr.push_back(c.at(n, k).to_complex());
            Cr.push_back(C.at(n, k).to_complex());
        }
        c_.push_back(std::move(cr));
        C_.push_back(std::move(Cr));
    }
}

void BasisEvaluator::check_order(int n) const
{
    if (n < 0 || n > n_max_) {
        throw std::out_of_range("BasisEvaluator: order " + std::to_string(n) + " outside [0, " +
                                std::to_string(n_max_) + "]");
    }
}

std::vector<cplx> BasisEvaluator::z_conv_pows(int n, cplx x) const
{
    check_order(n);
    if (lattice_distance(x, w_->params()) < w_->params().pole_guard()) {
        throw pole_proximity_error("z_conv_pow: argument on a lattice point");
    }
    const std::vector<cplx> g = w_->theta().g_kernels(n, x);
    std::vector<cplx> out;
    for (int m = 0; m <= n; ++m) {
        cplx acc = 0.0;
        for (int k = 0; k <= m; ++k) {
            acc += c_[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(k)];
        }
        out.push_back(acc);
    }
    return out;
}

cplx BasisEvaluator::z_conv_pow(int n, cplx x) const
{
    check_order(n);
    const TorusParams &p = w_->params();
    if (n >= 2 && lattice_distance(x, p) < p.pole_guard()) {
        // zero residue at m tau means the singularity is removable there;
        // Cauchy's formula on a circle around it
        const LatticePoint lp = nearest_lattice_point(x, p.tau());
        if (!residue_poly_V_exact(n, lp.m).is_zero()) {
            throw pole_proximity_error("z_conv_pow: argument on a pole");
        }
        const cplx c = lp.embed(p.tau());
        const double r = 0.25 * p.shortest_period();
        const int nodes = 64;
        cplx acc = 0.0;
        for (int j = 0; j < nodes; ++j) {
            const cplx u = std::polar(r, 2.0 * pi * j / nodes);
            acc += z_conv_pows(n, c + u).back() * u / (c + u - x);
        }
        return acc / static_cast<double>(nodes);
    }
    return z_conv_pows(n, x).back();
}

cplx BasisEvaluator::wp_conv_pow(int n, cplx x) const
{
    check_order(n);
    if (n < 1) {
        throw std::out_of_range("wp_conv_pow: need n >= 1");
    }
    const double dist = lattice_distance(x, w_->params());
    if (dist < w_->params().pole_guard()) {
        throw pole_proximity_error("wp_conv_pow: argument on a lattice point");
    }
    const cplx d = cauchy_derivative([this, n](cplx z) { return z_conv_pow(n, z); }, x, n, 0.5 * dist, 64);
    const double s = (n % 2 == 0) ? 1.0 : -1.0;
    return s * d + s * std::pow(w_->e2(), n);
}

cplx BasisEvaluator::g_from_zconv(int n, cplx x) const
{
    const std::vector<cplx> z = z_conv_pows(n, x);
    cplx acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        acc += C_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] * z[static_cast<std::size_t>(k)];
    }
    return acc;
}

cplx BasisEvaluator::A_fn(int n, cplx x) const
{
    if (n < 0) {
        throw std::out_of_range("A_fn: negative order");
    }
    const cplx dz = w_->params().delta_z();
    const cplx z = w_->zeta_e(x);
    const RationalPolynomial b = bernoulli_poly(n);
    // sum_j b_j Z^j dZ^(n-j)
    cplx acc = 0.0;
    for (int j = b.degree(); j >= 0; --j) {
        acc = acc * z + to_double(b.coeff(j)) * std::pow(dz, n - j);
    }
    return acc;
}

} // namespace torusconv
