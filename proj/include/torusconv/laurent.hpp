#ifndef TORUSCONV_LAURENT_HPP
#define TORUSCONV_LAURENT_HPP

#include <functional>
#include <map>
#include <vector>

#include "torusconv/torus.hpp"

namespace torusconv
{

using ComplexFunction = std::function<cplx(cplx)>;

/// Thrown when halving the number of circle nodes changes the extracted
/// coefficients by more than the requested tolerance.
class convergence_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Laurent data of f at center:
/// f(x) = sum_{l>=1} singular[l] / (x - center)^l + sum_{k>=0} regular[k] (x - center)^k.
struct LaurentData
{
    cplx center{};
    double radius = 0.0;
    std::map<int, cplx> singular;
    std::vector<cplx> regular;
    /// max change of any coefficient between the full and the half node set
    double halving_change = 0.0;

    cplx residue() const
    {
        auto it = singular.find(1);
        return it == singular.end() ? cplx{} : it->second;
    }
    cplx singular_coefficient(int order) const
    {
        auto it = singular.find(order);
        return it == singular.end() ? cplx{} : it->second;
    }
};

struct LaurentOptions
{
    int nodes = 128;
    int regular_orders = 0;
    /// Relative tolerance of the node-halving check; <= 0 disables it.
    double halving_tol = 1e-6;
};

/// Singular (and optionally regular) Laurent coefficients by the trapezoid
/// rule on |x - center| = radius:
/// c_l = (1/2 pi i) \oint f(x) (x - center)^(l-1) dx.
LaurentData extract_laurent(const ComplexFunction &f, cplx center, int max_order, double radius,
                            const LaurentOptions &options = {});

/// (1/2 pi i) \oint f(x) dx around center.
cplx contour_residue(const ComplexFunction &f, cplx center, double radius, int nodes = 128);

/// order-th derivative at x by the Cauchy integral on a circle of the given radius.
cplx cauchy_derivative(const ComplexFunction &f, cplx x, int order, double radius, int nodes = 64);

/// Radius for singular-part extraction at center for a function whose poles
/// all lie on the lattice: half the distance to the nearest other lattice point.
double lattice_laurent_radius(cplx center, const TorusParams &params);

} // namespace torusconv

#endif
