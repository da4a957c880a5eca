#ifndef TORUSCONV_BASIS_CHANGE_HPP
#define TORUSCONV_BASIS_CHANGE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "torusconv/rational.hpp"
#include "torusconv/weierstrass.hpp"

namespace torusconv
{

// Exact transition coefficients between the kernels g^(k) and the
// convolution powers Z^{conv k} (g^(0) = Z^{conv 0} = 1):
//
//   Z^{conv n} = sum_{k=0}^n c[n][k] g^(k),   g^(n) = sum_{k=0}^n C[n][k] Z^{conv k}.
//
// Entry (n,k) carries the grade (Delta Z)^(n-k).

GradedRational coeff_c(int n, int k);
/// Constant term of the c row, closed form.
GradedRational coeff_c0(int n);
/// Constant term of the c row from the next row: (dZ/2)^n - sum_k c[n+1][k] dZ^(k-1)/k!.
GradedRational coeff_c0_recursive(int n);

/// From the Stirling recurrence table.
GradedRational coeff_C(int n, int k);
/// From the alternating closed sum for (k-1)! S(n,k).
GradedRational coeff_C_closed(int n, int k);
/// 2 B_n (1 - 2^(n-1)) / n! (dZ)^n.
GradedRational coeff_C0(int n);

/// Lower-triangular (n_max+1) x (n_max+1) matrix, column 0 holds the constant terms.
class CoeffMatrix
{
public:
    CoeffMatrix(int n_max, std::vector<std::vector<GradedRational>> rows);

    static CoeffMatrix c_matrix(int n_max);
    static CoeffMatrix C_matrix(int n_max);

    int n_max() const { return n_max_; }
    /// Zero above the diagonal.
    GradedRational at(int n, int k) const;
    const std::vector<GradedRational> &row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }

private:
    int n_max_;
    std::vector<std::vector<GradedRational>> rows_;
};

/// Product a * b in graded arithmetic.
CoeffMatrix compose(const CoeffMatrix &a, const CoeffMatrix &b);

struct InverseCheck
{
    bool ok = true;
    // first entry of c*C or C*c that differs from the identity
    std::optional<std::pair<int, int>> failing_entry;
    bool failing_in_cC = true;
};

InverseCheck matrix_inverse_check(int n_max);

/// Residue of Z^{conv n} at m tau: (-dZ)^(n-1) prod_{k=1}^{n-1} (m-k) / (n-1)!.
GradedRational residue_poly_V_exact(int n, long m);
cplx residue_poly_V(int n, long m);

/// Closed-form evaluation of the convolution powers and related functions.
class BasisEvaluator
{
public:
    explicit BasisEvaluator(std::shared_ptr<const Weierstrass> w, int n_max = 12);

    const Weierstrass &weierstrass() const { return *w_; }
    int n_max() const { return n_max_; }

    /// Z^{conv n}(x) off the poles (n = 0 gives 1). At m tau with
    /// 1 <= m <= n-1 the singularity is removable and the value is returned.
    cplx z_conv_pow(int n, cplx x) const;
    /// [Z^{conv 0}(x), ..., Z^{conv n}(x)] from one kernel evaluation.
    std::vector<cplx> z_conv_pows(int n, cplx x) const;

    /// wp^{conv n}(x) = (-1)^n d^n/dx^n Z^{conv n}(x) + (-1)^n e2^n.
    cplx wp_conv_pow(int n, cplx x) const;

    /// g^(n)(x) rebuilt from the C matrix and z_conv_pows.
    cplx g_from_zconv(int n, cplx x) const;

    /// A_n(x) = dZ^n B_n(Z(x)/dZ).
    cplx A_fn(int n, cplx x) const;

private:
    void check_order(int n) const;

    std::shared_ptr<const Weierstrass> w_;
    int n_max_;
    std::vector<std::vector<cplx>> c_;
    std::vector<std::vector<cplx>> C_;
};

} // namespace torusconv

#endif
