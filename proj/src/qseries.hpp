#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace palin {

// Dense truncated power series: coeffs[d] is the coefficient of q^d for
// d = 0..max_degree. Both series built here have coefficient 0 at degree 0.
struct CoeffSeries {
    std::vector<mpz_class> coeffs;

    std::uint64_t max_degree() const noexcept { return coeffs.size() - 1; }
    const mpz_class& at(std::uint64_t degree) const { return coeffs.at(degree); }
};

mpz_class binomial(std::uint64_t n, std::uint64_t k);

// Gaussian polynomial: coefficient of q^d counts partitions of d inside the
// (m-r) x r box; degree r(m-r), coefficients symmetric, sum C(m, r).
// Rejects r > m.
CoeffSeries gaussian_poly(std::uint64_t m, std::uint64_t r);

// Number of nondecreasing integer sequences of length n with entries in
// [-k, k] summing to zero, by direct dynamic programming.
mpz_class t_value(std::uint64_t n, std::uint64_t k);

// Coefficient of the half-area power q^{rows*cols/2} in the Gaussian
// polynomial of the rows x cols box; zero when the area is odd.
mpz_class middle_coeff(std::uint64_t rows, std::uint64_t cols);

// Counts, by degree, the partitions whose boundary word is a palindrome:
// sum of C(k+l,k) q^{2kl+2k+2l+1} plus twice C(k+l,k) q^{2kl+2k+3l+2} over
// all k, l >= 0, truncated at max_degree.
CoeffSeries pp_series(std::uint64_t max_degree);

// Counts, by degree, the partitions whose reversal-image has the same
// weight: T(2l,k) q^{2kl+2k+2l+1} plus twice the middle Gaussian coefficient
// of the (2k+1) x 2l box times q^{2kl+2k+3l+2}, truncated at max_degree.
CoeffSeries r_series(std::uint64_t max_degree);

}  // namespace palin
