#include "doctest.h"

#include "support.hpp"
#include "torusconv/combinatorics.hpp"

using namespace torusconv;

TEST_CASE("Stirling numbers, small values")
{
    CHECK(stirling_first(4, 2) == 11);
    CHECK(stirling_first(5, 3) == 35);
    CHECK(stirling_first(4, 1) == -6);
    CHECK(stirling_first(3, 3) == 1);
    CHECK(stirling_second(4, 2) == 7);
    CHECK(stirling_second(5, 3) == 25);
    CHECK(stirling_second(6, 1) == 1);
    CHECK_THROWS_AS(stirling_first(3, 4), std::out_of_range);
    CHECK_THROWS_AS(stirling_second(0, 0), std::out_of_range);
}

TEST_CASE("first kind: falling factorial expansion")
{
    // (m-1)(m-2)...(m-n+1) = sum_k s(n,k) m^(k-1)
    for (int n = 1; n <= 12; ++n) {
        for (long m = -4; m <= 9; ++m) {
            BigInteger lhs = 1;
            for (int k = 1; k < n; ++k) {
                lhs *= (m - k);
            }
            BigInteger rhs = 0;
            BigInteger mp = 1;
            for (int k = 1; k <= n; ++k) {
                rhs += stirling_first(n, k) * mp;
                mp *= m;
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("second kind: table agrees with the closed sum")
{
    for (int n = 1; n <= 20; ++n) {
        for (int k = 1; k <= n; ++k) {
            CHECK(stirling_second_closed_scaled(n, k) == factorial(k - 1) * stirling_second(n, k));
        }
    }
}

TEST_CASE("the two Stirling matrices are inverse")
{
    // sum_j S(n,j) s(j,k) = delta_{nk}
    for (int n = 1; n <= 12; ++n) {
        for (int k = 1; k <= n; ++k) {
            BigInteger acc = 0;
            for (int j = k; j <= n; ++j) {
                acc += stirling_second(n, j) * stirling_first(j, k);
            }
            CHECK(acc == (n == k ? 1 : 0));
        }
    }
}

TEST_CASE("factorial and binomial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 0) == 1);
    CHECK_THROWS_AS(factorial(-1), std::out_of_range);
}

TEST_CASE("Bernoulli numbers")
{
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == BigRational(-1, 2));
    CHECK(bernoulli_number(2) == BigRational(1, 6));
    CHECK(bernoulli_number(4) == BigRational(-1, 30));
    CHECK(bernoulli_number(12) == BigRational(-691, 2730));
    for (int n = 3; n <= 25; n += 2) {
        CHECK(bernoulli_number(n) == 0);
    }
}

TEST_CASE("Bernoulli polynomials: base cases and difference identity")
{
    CHECK(bernoulli_poly(0) == RationalPolynomial::constant(1));
    CHECK(bernoulli_poly(1) == RationalPolynomial::monomial(1));
    // B_{n+1}(z+1) - B_{n+1}(z) = z^n
    for (int n = 0; n <= 15; ++n) {
        const RationalPolynomial b = bernoulli_poly(n + 1);
        CHECK(b.compose_linear(1, 1) - b == RationalPolynomial::monomial(n));
    }
}

TEST_CASE("Bernoulli polynomials: leading terms")
{
    // B_{k+1}(z) = z^{k+1}/(k+1) - z^k/2 + lower order
    for (int k = 1; k <= 12; ++k) {
        const RationalPolynomial b = bernoulli_poly(k + 1);
        CHECK(b.degree() == k + 1);
        CHECK(b.coeff(k + 1) == BigRational(1, k + 1));
        CHECK(b.coeff(k) == BigRational(-1, 2));
    }
}

TEST_CASE("property: memoised tables are order independent")
{
    testsupport::Gen g(3);
    for (int i = 0; i < 40; ++i) {
        const int n = g.integer(1, 30);
        const int k = g.integer(1, n);
        // S(n,k) = k S(n-1,k) + S(n-1,k-1) checked on random entries
        if (n > 1) {
            const BigInteger left = k <= n - 1 ? k * stirling_second(n - 1, k) : BigInteger(0);
            const BigInteger right = k >= 2 ? stirling_second(n - 1, k - 1) : BigInteger(0);
            CHECK(stirling_second(n, k) == left + right);
        }
    }
}
