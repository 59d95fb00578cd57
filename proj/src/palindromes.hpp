#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "partition.hpp"

namespace palin {

// Parity case of (zeros, ones) in the boundary word: (even, even),
// (odd, even), (even, odd). Both odd is impossible.
enum class CaseTag { case1, case2a, case2b };

// One row of the generation table for n: a factorization 2(n+1) = x*y
// resolved into word-shape parameters. Case 1 has zeros = 2k, ones = 2l;
// case 2a has zeros = 2k+1, ones = 2l; case 2b has zeros = 2k, ones = 2l+1.
// multiplicity = C(k+l, k) counts the tau choices, i.e. the palindrome
// partitions the row contributes.
struct CasePlan {
    CaseTag tag = CaseTag::case1;
    std::uint64_t k = 0;
    std::uint64_t l = 0;
    std::uint64_t zeros = 0;
    std::uint64_t ones = 0;
    std::uint64_t factor_x = 0;  // x <= y, x*y = 2(n+1)
    std::uint64_t factor_y = 0;
    mpz_class multiplicity;

    std::uint64_t word_length() const noexcept { return zeros + ones; }
};

// All plans for n, one per (case, k, l) whose weight formula equals n,
// ordered by word length descending, then zeros descending. Rejects n = 0.
std::vector<CasePlan> case_plans(std::uint64_t n);

// The palindrome partition selected by tau, which must fit in the k x l
// box: tau fills the lower-left quadrant of the inner rectangle, its
// rotated complement the upper-right, with the forced middle row (case 2a)
// or column (case 2b) in between; the first row and column are then
// reattached.
Partition assemble(const CasePlan& plan, const Partition& tau);

// Every palindrome partition of n exactly once: plans in case_plans order,
// tau in BoxStream order within each plan.
class PalindromeStream {
public:
    explicit PalindromeStream(std::uint64_t n);
    std::optional<Partition> next();

private:
    std::vector<CasePlan> plans_;
    std::size_t idx_ = 0;
    std::optional<BoxStream> box_;
};

// Number of palindrome partitions of n: the sum of plan multiplicities.
mpz_class pp_count(std::uint64_t n);

// Number of distinct boundary-word lengths among palindrome partitions of
// n; equals the number of factorizations 2(n+1) = x*y with 2 <= x <= y.
std::uint64_t pl_count(std::uint64_t n);

// A palindrome partition of n other than (n) and (1^n), or nullopt exactly
// when none exists, i.e. when n = 3 or n + 1 is prime.
std::optional<Partition> nontrivial_witness(std::uint64_t n);

}  // namespace palin
