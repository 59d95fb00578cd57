#include "partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace palin {

Partition::Partition(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

std::uint64_t Partition::weight() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

Partition conjugate(const Partition& p) {
    const auto& parts = p.parts();
    if (parts.empty()) return {};
    std::vector<std::uint64_t> out;
    out.reserve(parts.front());
    std::size_t i = parts.size();
    for (std::uint64_t j = 1; j <= parts.front(); ++j) {
        while (i > 0 && parts[i - 1] < j) --i;
        out.push_back(i);  // number of parts >= j
    }
    return Partition(std::move(out));
}

std::uint64_t hook11(const Partition& p) {
    if (p.empty()) throw std::domain_error("hook11: empty partition");
    return p.first_part() + p.rows() - 1;
}

bool fits_in_box(const Partition& p, std::uint64_t rows, std::uint64_t cols) noexcept {
    return p.rows() <= rows && (p.empty() || p.first_part() <= cols);
}

Partition complement_rotate(const Partition& p, std::uint64_t rows, std::uint64_t cols) {
    if (!fits_in_box(p, rows, cols))
        throw std::domain_error("complement_rotate: partition does not fit in the box");
    const auto& parts = p.parts();
    std::vector<std::uint64_t> out;
    out.reserve(rows);
    for (std::uint64_t i = rows; i-- > 0;) {
        // Reading the padded rows bottom-up yields the complement largest
        // part first; once a value hits zero the rest are zero too.
        std::uint64_t v = cols - (i < parts.size() ? parts[i] : 0);
        if (v == 0) break;
        out.push_back(v);
    }
    return Partition(std::move(out));
}

PartitionStream::PartitionStream(std::uint64_t n) {
    if (n > 0) cur_.assign(1, n);
}

std::optional<Partition> PartitionStream::next() {
    if (done_) return std::nullopt;
    Partition out{std::vector<std::uint64_t>(cur_)};
    advance();
    return out;
}

void PartitionStream::advance() {
    // Classic reverse-lexicographic successor: fold the trailing run of 1s
    // plus one unit borrowed from the last part > 1 into parts of that size.
    std::uint64_t rem = 0;
    while (!cur_.empty() && cur_.back() == 1) {
        cur_.pop_back();
        ++rem;
    }
    if (cur_.empty()) {
        done_ = true;
        return;
    }
    cur_.back() -= 1;
    const std::uint64_t x = cur_.back();
    rem += 1;
    while (rem > x) {
        cur_.push_back(x);
        rem -= x;
    }
    if (rem > 0) cur_.push_back(rem);
}

BoxStream::BoxStream(std::uint64_t rows, std::uint64_t cols) : cur_(rows, 0), cols_(cols) {}

std::optional<Partition> BoxStream::next() {
    if (done_) return std::nullopt;
    std::vector<std::uint64_t> parts;
    for (std::uint64_t v : cur_) {
        if (v == 0) break;
        parts.push_back(v);
    }
    Partition out{std::move(parts)};
    advance();
    return out;
}

void BoxStream::advance() {
    for (std::size_t i = cur_.size(); i-- > 0;) {
        const std::uint64_t cap = (i == 0) ? cols_ : cur_[i - 1];
        if (cur_[i] < cap) {
            ++cur_[i];
            std::fill(cur_.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur_.end(), 0);
            return;
        }
    }
    done_ = true;
}

}  // namespace palin
