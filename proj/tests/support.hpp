#ifndef TORUSCONV_TESTS_SUPPORT_HPP
#define TORUSCONV_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>

#include "torusconv/torus.hpp"

namespace testsupport
{

using torusconv::cplx;

// splitmix64; tiny, seedable, identical on every platform
class Gen
{
public:
    explicit Gen(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53; }

    int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

    // Re in [0,1), Im/Im(tau) in [lo,hi], at least min_dist from the lattice
    cplx point(const torusconv::TorusParams &p, double lo, double hi, double min_dist = 0.15)
    {
        for (;;) {
            const cplx x(uniform(0.0, 1.0), uniform(lo, hi) * p.tau().imag());
            if (torusconv::lattice_distance(x, p) >= min_dist) {
                return x;
            }
        }
    }

private:
    std::uint64_t state_;
};

inline double rel(cplx got, cplx want)
{
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

} // namespace testsupport

#endif
