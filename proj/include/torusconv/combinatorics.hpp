#ifndef TORUSCONV_COMBINATORICS_HPP
#define TORUSCONV_COMBINATORICS_HPP

#include "torusconv/rational.hpp"

namespace torusconv
{

// All tables below are memoised: rows are filled once, under a lock, and are
// read-only afterwards. Out-of-range arguments throw std::out_of_range.

/// Signed Stirling number of the first kind s(n,k), 1 <= k <= n:
/// (m-1)(m-2)...(m-n+1) = sum_k s(n,k) m^(k-1).
BigInteger stirling_first(int n, int k);

/// Stirling number of the second kind S(n,k), 1 <= k <= n, from
/// S(n,k) = k S(n-1,k) + S(n-1,k-1) with S(1,1) = 1.
BigInteger stirling_second(int n, int k);

/// (k-1)! S(n,k) by the alternating closed sum
/// sum_{t=0}^{k-1} (-1)^t (k-t)^(n-1) binom(k-1,t). Independent of the table.
BigInteger stirling_second_closed_scaled(int n, int k);

BigInteger factorial(int n);
BigInteger binomial(int n, int k);

/// Bernoulli numbers with B_1 = -1/2, from sum_{l<k} binom(k,l) B_l = 0.
BigRational bernoulli_number(int n);

/// Bernoulli polynomials normalised so that B_0(z) = 1, B_1(z) = z and
/// B_{n+1}(z+1) - B_{n+1}(z) = z^n.
RationalPolynomial bernoulli_poly(int n);

} // namespace torusconv

#endif
