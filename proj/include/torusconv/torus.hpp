#ifndef TORUSCONV_TORUS_HPP
#define TORUSCONV_TORUS_HPP

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace torusconv
{

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr cplx two_pi_i{0.0, 2.0 * pi};

// Thrown when an evaluation point is closer to a pole than the configured guard.
class pole_proximity_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Thrown when a contour would cross or graze a singular line.
class strip_violation_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// The nome q = exp(2 pi i tau). Throws std::domain_error unless Im(tau) > 0.
cplx nome(cplx tau);

/// Lattice point n + m*tau. The imaginary direction index m comes first.
struct LatticePoint
{
    long m = 0;
    long n = 0;

    cplx embed(cplx tau) const
    {
        return static_cast<double>(n) + static_cast<double>(m) * tau;
    }

    friend bool operator==(const LatticePoint &, const LatticePoint &) = default;
};

/// Fixed modular parameter together with every numerical policy knob.
///
/// Immutable once built; construct through make(). The default config
/// insists on Im(tau) >= 0.5 so that the q-series converge in a dozen terms.
class TorusParams
{
public:
    static constexpr double min_im_tau = 0.5;

    static TorusParams make(cplx tau, int quad_points = 256, double series_tol = 1e-16,
                            std::optional<double> ring_radius = std::nullopt,
                            double pole_guard = 1e-8);

    cplx tau() const { return tau_; }
    cplx q() const { return q_; }
    /// Delta Z = Z(x + tau) - Z(x) = -2 pi i.
    cplx delta_z() const { return delta_z_; }
    int quad_points() const { return quad_points_; }
    double series_tol() const { return series_tol_; }
    double ring_radius() const { return ring_radius_; }
    double pole_guard() const { return pole_guard_; }
    /// Contours must keep at least this vertical distance from singular lines.
    double contour_guard() const { return 0.05 * tau_.imag(); }
    /// Length of the shortest nonzero lattice vector.
    double shortest_period() const { return shortest_period_; }

private:
    TorusParams() = default;

    cplx tau_{0.0, 1.0};
    cplx q_{};
    cplx delta_z_{0.0, -2.0 * pi};
    int quad_points_ = 256;
    double series_tol_ = 1e-16;
    double ring_radius_ = 0.4;
    double pole_guard_ = 1e-8;
    double shortest_period_ = 1.0;
};

/// Nearest lattice point to x (ties broken towards smaller |m|, then |n|).
LatticePoint nearest_lattice_point(cplx x, cplx tau);

/// Euclidean distance from x to the lattice Z + tau Z.
double lattice_distance(cplx x, const TorusParams &params);
double lattice_distance(cplx x, cplx tau);

/// Returns x' with Re(x') in [0,1), Im(x') = Im(x) and x - x' an integer.
cplx reduce_real_period(cplx x);

/// Canonical representative of x modulo the lattice: Im in [0, Im tau), Re in [0, 1).
cplx reduce_mod_lattice(cplx x, cplx tau);

/// Parses "0.3+0.2i", "-1.5i", "2", "i", "0.25-0.1j".
cplx parse_complex(const std::string &text);

} // namespace torusconv

#endif
