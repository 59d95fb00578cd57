#pragma once

#include <gmpxx.h>

#include "bitword.hpp"
#include "partition.hpp"

namespace palin {

// Reduced positive rational labeling a Calkin-Wilf tree node. Values grow
// like Fibonacci numbers in the path length, hence the big integers.
struct Fraction {
    mpz_class num{1};
    mpz_class den{1};
    bool operator==(const Fraction&) const = default;
};

// Reduces; rejects nonpositive numerator or denominator.
Fraction make_fraction(mpz_class num, mpz_class den);

// Walk from the root 1/1: bit 0 takes the left child p/(p+q), bit 1 the
// right child (p+q)/q. Paths never include the conventional leading 1 of
// the node label; the empty path is the root.
Fraction fraction_at(const BitWord& path);

// Unique path with fraction_at(path) == f, by parent steps: while p < q the
// path ends in 0 with parent p/(q-p), while p > q it ends in 1 with parent
// (p-q)/q. Runs of equal steps are taken in one division.
BitWord path_of(const Fraction& f);

// Breadth-first index, 1-based at the root: the integer whose binary digits
// are 1 followed by the path bits.
mpz_class index_of(const BitWord& path);

// Inverse of index_of; rejects index < 1.
BitWord path_of_index(const mpz_class& index);

// Partition placed at the node: start at (1); bit 0 appends a part equal to
// 1, bit 1 adds 1 to every part. Equals decode(reverse(path)).
Partition partition_at_node(const BitWord& path);

enum class PathClass { palindromic, antipalindromic, both, neither };

// The empty path is both; a nonempty path is never both.
PathClass classify_path(const BitWord& path) noexcept;

}  // namespace palin
