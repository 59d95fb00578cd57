#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "partition.hpp"

namespace palin::oracle {

// Brute-force recomputations by exhausting all partitions of n. These exist
// to be obviously correct, not fast; the verify suite compares them against
// the closed-form and generating-function routes.

// Count of partitions of n whose boundary word is a palindrome.
std::uint64_t pp_brute(std::uint64_t n);

// The palindrome partitions of n themselves.
std::set<Partition> palindromes_brute(std::uint64_t n);

// Count of partitions of n whose reversal-image is also a partition of n.
std::uint64_t r_brute(std::uint64_t n);

// Number of distinct boundary-word lengths among palindrome partitions of n.
std::uint64_t pl_brute(std::uint64_t n);

struct VerifyReport {
    bool ok = true;
    std::string text;
};

// Compares every counted quantity against its independent recomputation for
// 1 <= n <= max_n, stopping at the first mismatch.
VerifyReport verify(std::uint64_t max_n);

}  // namespace palin::oracle
