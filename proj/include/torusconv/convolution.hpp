#ifndef TORUSCONV_CONVOLUTION_HPP
#define TORUSCONV_CONVOLUTION_HPP

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "torusconv/laurent.hpp"
#include "torusconv/weierstrass.hpp"

namespace torusconv
{

/// Open horizontal strip lo < Im(x) < hi.
struct Strip
{
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double im) const { return im > lo && im < hi; }
    static Strip whole_plane() { return {}; }
};

/// A pole class: every point of location + Lambda may carry a pole of order
/// at most max_order. The ledger is an upper bound; some translates may be
/// regular (Z conv Z is regular at tau).
struct PoleEntry
{
    cplx location{}; // canonical representative mod Lambda
    int max_order = 1;
};

/// A 1-periodic meromorphic function given by an evaluator that is valid on
/// the declared strips, plus the ledger of its singularities.
class PeriodicFunction
{
public:
    PeriodicFunction(std::string name, ComplexFunction evaluator, std::vector<Strip> strips,
                     std::vector<PoleEntry> poles);

    /// Throws strip_violation_error outside the declared strips.
    cplx operator()(cplx x) const;

    const std::string &name() const { return name_; }
    const std::vector<Strip> &strips() const { return strips_; }
    const std::vector<PoleEntry> &poles() const { return poles_; }
    const ComplexFunction &evaluator() const { return evaluator_; }

    int max_pole_order() const;
    bool valid_at(double im) const;
    /// True when every ledger entry sits on the lattice itself.
    bool is_special(cplx tau) const;

    /// Smallest vertical distance from the line Im = im to a ledger pole, or
    /// to a strip boundary. Infinite for pole-free entire functions.
    double line_clearance(double im, cplx tau) const;

private:
    std::string name_;
    ComplexFunction evaluator_;
    std::vector<Strip> strips_;
    std::vector<PoleEntry> poles_;
};

// Building blocks. Every factory keeps the evaluator objects alive through
// shared ownership, so the returned functions can outlive their arguments.
namespace functions
{
PeriodicFunction constant(cplx value);
PeriodicFunction eisenstein_zeta(std::shared_ptr<const Weierstrass> w);
PeriodicFunction eisenstein_zeta_prime(std::shared_ptr<const Weierstrass> w);
PeriodicFunction weierstrass_p(std::shared_ptr<const Weierstrass> w);
PeriodicFunction weierstrass_p_prime(std::shared_ptr<const Weierstrass> w);
PeriodicFunction kernel(std::shared_ptr<const Weierstrass> w, int n);
/// x -> f(x + shift); ledger and strips are translated.
PeriodicFunction translate(const PeriodicFunction &f, cplx shift, const TorusParams &params);
/// Delta f(x) = f(x + tau) - f(x).
PeriodicFunction difference(const PeriodicFunction &f, const TorusParams &params);
/// f' by Cauchy-circle differentiation.
PeriodicFunction derivative(const PeriodicFunction &f, const TorusParams &params);
/// x -> (f conv+ g)(x) by quadrature, valid on 0 < Im x < 2 Im tau.
PeriodicFunction convolved(const PeriodicFunction &f, const PeriodicFunction &g, const TorusParams &params);
} // namespace functions

/// (f conv+ g)(x) = \oint_{Im z = Im(x)/2} f(x - z) g(z) dz, trapezoid rule over one real period.
/// Requires 0 < Im x < 2 Im tau and both mid lines clear of poles by contour_guard().
cplx conv_plus(const PeriodicFunction &f, const PeriodicFunction &g, cplx x, const TorusParams &params);

/// Same integral with the contour for g at height g_height (and f at Im(x) - g_height).
/// Both heights must be positive and clear of ledger lines; choosing them inside
/// each factor's base region is up to the caller.
cplx conv_plus_split(const PeriodicFunction &f, const PeriodicFunction &g, cplx x, double g_height,
                     const TorusParams &params);

/// (f_1 conv+ ... conv+ f_n)(x) with equal heights Im(x)/n: the (n-1)-dimensional
/// product trapezoid of the delta-constrained integral. Requires n >= 2 and
/// 0 < Im x < n Im tau.
cplx conv_nfold(const std::vector<PeriodicFunction> &fs, cplx x, const TorusParams &params);

/// (f *+ g)(x): contour just below the real axis, realised on the midline of
/// the pole-free band max(-Im tau, Im x - Im tau) < Im z < min(0, Im x).
/// Requires special f, g and |Im x| < Im(tau)/2.
cplx conv_star(const PeriodicFunction &f, const PeriodicFunction &g, cplx x, const TorusParams &params);

/// |Delta(f conv+ g)(x) - (Delta f conv+ g)(x) - 2 pi i Res_{z=tau}[f(z) g(x + tau - z)]|.
/// Requires 0 < Im x < Im tau.
double product_rule_residual(const PeriodicFunction &f, const PeriodicFunction &g, cplx x,
                             const TorusParams &params);

/// Res_{z=tau}[f(z) g(x + tau - z)] by contour.
cplx product_rule_residue_term(const PeriodicFunction &f, const PeriodicFunction &g, cplx x,
                               const TorusParams &params);

/// Pole set a_I + b_J (mod Lambda) with order bound o_a + o_b - 1 per pair.
std::vector<PoleEntry> pole_ledger_conv(const PeriodicFunction &f, const PeriodicFunction &g,
                                        const TorusParams &params);

} // namespace torusconv

#endif
