#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace palin {

// Weakly decreasing positive parts, largest first. The empty partition is a
// valid value of weight 0; it occurs as the inner partition of a hook shape
// and as a tau choice when a case plan admits only one partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::uint64_t> parts);

    const std::vector<std::uint64_t>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::size_t rows() const noexcept { return parts_.size(); }
    std::uint64_t first_part() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    std::uint64_t weight() const noexcept;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint64_t> parts_;
};

Partition conjugate(const Partition& p);

// First-column hook length lambda_1 + lambda'_1 - 1, also called the
// perimeter. Rejects the empty partition.
std::uint64_t hook11(const Partition& p);

// True iff p has at most `rows` parts, each at most `cols`.
bool fits_in_box(const Partition& p, std::uint64_t rows, std::uint64_t cols) noexcept;

// Complement of p inside the rows x cols box, rotated half a turn. An
// involution; the weights of p and the result sum to rows*cols.
Partition complement_rotate(const Partition& p, std::uint64_t rows, std::uint64_t cols);

// All partitions of n, reverse-lexicographic, starting at (n). Yields the
// empty partition once for n = 0.
class PartitionStream {
public:
    explicit PartitionStream(std::uint64_t n);
    std::optional<Partition> next();

private:
    void advance();
    std::vector<std::uint64_t> cur_;
    bool done_ = false;
};

// All partitions fitting in a rows x cols box, ascending lexicographic, the
// empty partition first; C(rows+cols, rows) values in total.
class BoxStream {
public:
    BoxStream(std::uint64_t rows, std::uint64_t cols);
    std::optional<Partition> next();

private:
    void advance();
    std::vector<std::uint64_t> cur_;  // padded with zeros to `rows` entries
    std::uint64_t cols_;
    bool done_ = false;
};

}  // namespace palin
