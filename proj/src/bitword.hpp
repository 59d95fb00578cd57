#pragma once

#include <cstdint>
#include <vector>

#include "partition.hpp"

namespace palin {

// Finite 0/1 word. Words code the southeast boundary of a Young diagram read
// southwest to northeast, 0 for a vertical edge and 1 for a horizontal edge,
// with the leading 1 and trailing 0 of the full boundary stripped. The empty
// word codes the one-box partition.
class BitWord {
public:
    BitWord() = default;
    explicit BitWord(std::vector<bool> bits) : bits_(std::move(bits)) {}

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i]; }
    std::size_t ones() const noexcept;
    std::size_t zeros() const noexcept { return size() - ones(); }
    const std::vector<bool>& bits() const noexcept { return bits_; }

    friend bool operator==(const BitWord&, const BitWord&) = default;

private:
    std::vector<bool> bits_;
};

BitWord reverse(const BitWord& w);
BitWord invert(const BitWord& w);

bool is_palindrome(const BitWord& w) noexcept;

// True when the reversal equals the bitwise complement; such words code
// self-conjugate partitions. The empty word qualifies vacuously.
bool is_antipalindrome(const BitWord& w) noexcept;

// Identity, reversal, inversion and their composite, acting on words.
enum class Klein { e, r, i, ri };

Klein klein_compose(Klein a, Klein b) noexcept;
BitWord apply_klein(Klein g, const BitWord& w);

// Boundary word of a nonempty partition: ones(w) = first_part - 1,
// zeros(w) = rows - 1, length = hook11 - 1.
BitWord encode(const Partition& p);

// Inverse of encode, defined for every word; the empty word decodes to (1).
Partition decode(const BitWord& w);

// Partition coded by the reversed word, computed geometrically: the boxes
// outside the first row and column are replaced by their rotated complement
// inside the (rows-1) x (first_part-1) box. Involution; preserves the first
// row and column.
Partition reverse_partition(const Partition& p);

}  // namespace palin
