#include "torusconv/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace torusconv
{

namespace
{

void check_range(const char *what, int n, int k)
{
    if (n < 1 || k < 1 || k > n) {
        throw std::out_of_range(std::string(what) + ": need 1 <= k <= n, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
    }
}

// Triangular table grown row by row. Rows are never modified once appended,
// and callers copy entries out while holding the lock.
class TriangleTable
{
public:
    using Recurrence = BigInteger (*)(const std::vector<BigInteger> &prev, int n, int k);

    explicit TriangleTable(Recurrence rec) : rec_(rec)
    {
        rows_.push_back({BigInteger(0), BigInteger(1)}); // n = 1, index k
    }

    BigInteger get(int n, int k)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<int>(rows_.size()) < n) {
            const int next = static_cast<int>(rows_.size()) + 1;
            const auto &prev = rows_.back();
            std::vector<BigInteger> row(static_cast<std::size_t>(next) + 1, BigInteger(0));
            for (int j = 1; j <= next; ++j) {
                row[static_cast<std::size_t>(j)] = rec_(prev, next, j);
            }
            rows_.push_back(std::move(row));
        }
        return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
    }

private:
    Recurrence rec_;
    std::mutex mutex_;
    std::vector<std::vector<BigInteger>> rows_;
};

BigInteger entry(const std::vector<BigInteger> &row, int k)
{
    if (k < 1 || k >= static_cast<int>(row.size())) {
        return 0;
    }
    return row[static_cast<std::size_t>(k)];
}

// m(m-1)...(m-n+1) = m * (m-1)...(m-n+2) * (m-(n-1))  =>  s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
BigInteger first_kind_step(const std::vector<BigInteger> &prev, int n, int k)
{
    return entry(prev, k - 1) - BigInteger(n - 1) * entry(prev, k);
}

BigInteger second_kind_step(const std::vector<BigInteger> &prev, int /*n*/, int k)
{
    return BigInteger(k) * entry(prev, k) + entry(prev, k - 1);
}

TriangleTable &first_kind_table()
{
    static TriangleTable table(&first_kind_step);
    return table;
}

TriangleTable &second_kind_table()
{
    static TriangleTable table(&second_kind_step);
    return table;
}

} // namespace

BigInteger stirling_first(int n, int k)
{
    check_range("stirling_first", n, k);
    return first_kind_table().get(n, k);
}

BigInteger stirling_second(int n, int k)
{
    check_range("stirling_second", n, k);
    return second_kind_table().get(n, k);
}

BigInteger stirling_second_closed_scaled(int n, int k)
{
    check_range("stirling_second_closed_scaled", n, k);
    BigInteger sum = 0;
    for (int t = 0; t <= k - 1; ++t) {
        BigInteger term;
        mpz_pow_ui(term.get_mpz_t(), BigInteger(k - t).get_mpz_t(), static_cast<unsigned long>(n - 1));
        term *= binomial(k - 1, t);
        if (t % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

BigInteger factorial(int n)
{
    if (n < 0) {
        throw std::out_of_range("factorial: negative argument");
    }
    BigInteger r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInteger binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    BigInteger r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigRational bernoulli_number(int n)
{
    if (n < 0) {
        throw std::out_of_range("bernoulli_number: negative index");
    }
    static std::mutex mutex;
    static std::vector<BigRational> table{BigRational(1)};
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(table.size()) <= n) {
        // sum_{l=0}^{k-1} binom(k,l) B_l = 0 with k = m + 1 determines B_m.
        const int m = static_cast<int>(table.size());
        const int k = m + 1;
        BigRational acc = 0;
        for (int l = 0; l < m; ++l) {
            acc += BigRational(binomial(k, l)) * table[static_cast<std::size_t>(l)];
        }
        BigRational b = -acc / BigRational(binomial(k, m));
        b.canonicalize();
        table.push_back(b);
    }
    return table[static_cast<std::size_t>(n)];
}

RationalPolynomial bernoulli_poly(int n)
{
    if (n < 0) {
        throw std::out_of_range("bernoulli_poly: negative index");
    }
    if (n == 0) {
        return RationalPolynomial::constant(1);
    }
    if (n == 1) {
        return RationalPolynomial::monomial(1);
    }
    // (1/n) sum_{m=0}^{n} binom(n,m) B_m z^(n-m): leading terms z^n/n - z^(n-1)/2.
    std::vector<BigRational> coeffs(static_cast<std::size_t>(n) + 1, BigRational(0));
    for (int m = 0; m <= n; ++m) {
        coeffs[static_cast<std::size_t>(n - m)] = BigRational(binomial(n, m)) * bernoulli_number(m) / n;
    }
    return RationalPolynomial(std::move(coeffs));
}

} // namespace torusconv
