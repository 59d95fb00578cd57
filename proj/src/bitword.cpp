#include "bitword.hpp"

#include <algorithm>
#include <stdexcept>

namespace palin {

std::size_t BitWord::ones() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

BitWord reverse(const BitWord& w) {
    std::vector<bool> bits(w.bits().rbegin(), w.bits().rend());
    return BitWord(std::move(bits));
}

BitWord invert(const BitWord& w) {
    std::vector<bool> bits;
    bits.reserve(w.size());
    for (bool b : w.bits()) bits.push_back(!b);
    return BitWord(std::move(bits));
}

bool is_palindrome(const BitWord& w) noexcept {
    const auto& b = w.bits();
    for (std::size_t i = 0, j = b.size(); i < j; ++i, --j)
        if (b[i] != b[j - 1]) return false;
    return true;
}

bool is_antipalindrome(const BitWord& w) noexcept {
    const auto& b = w.bits();
    // Middle bit of an odd-length word would have to differ from itself.
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] == b[b.size() - 1 - i]) return false;
    return true;
}

Klein klein_compose(Klein a, Klein b) noexcept {
    // (reverse?, invert?) flag pairs compose by xor.
    const auto x = static_cast<unsigned>(a);
    const auto y = static_cast<unsigned>(b);
    return static_cast<Klein>(x ^ y);
}

BitWord apply_klein(Klein g, const BitWord& w) {
    switch (g) {
        case Klein::e: return w;
        case Klein::r: return reverse(w);
        case Klein::i: return invert(w);
        case Klein::ri: return invert(reverse(w));
    }
    throw std::logic_error("apply_klein: bad element");
}

BitWord encode(const Partition& p) {
    if (p.empty()) throw std::domain_error("encode: empty partition");
    const auto& parts = p.parts();
    std::vector<bool> bits;
    bits.reserve(parts.front() + parts.size() - 2);
    // Bottom row first: its boxes give horizontal edges, the first of which
    // is the stripped leading 1 of the full boundary.
    for (std::uint64_t t = parts.back(); t > 1; --t) bits.push_back(true);
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
        bits.push_back(false);
        for (std::uint64_t t = parts[i] - parts[i + 1]; t > 0; --t) bits.push_back(true);
    }
    return BitWord(std::move(bits));
}

Partition decode(const BitWord& w) {
    // Each 0 closes a row of width 1 + (ones seen so far); the top row,
    // closed by the stripped trailing 0, has width ones(w) + 1.
    std::vector<std::uint64_t> below;
    std::uint64_t ones_seen = 0;
    for (bool b : w.bits()) {
        if (b)
            ++ones_seen;
        else
            below.push_back(ones_seen + 1);
    }
    std::vector<std::uint64_t> parts;
    parts.reserve(below.size() + 1);
    parts.push_back(ones_seen + 1);
    parts.insert(parts.end(), below.rbegin(), below.rend());
    return Partition(std::move(parts));
}

Partition reverse_partition(const Partition& p) {
    if (p.empty()) throw std::domain_error("reverse_partition: empty partition");
    const auto& parts = p.parts();
    const std::uint64_t box_rows = parts.size() - 1;
    const std::uint64_t box_cols = parts.front() - 1;
    std::vector<std::uint64_t> inner;
    inner.reserve(box_rows);
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > 1) inner.push_back(parts[i] - 1);
    const Partition flipped = complement_rotate(Partition(std::move(inner)), box_rows, box_cols);
    std::vector<std::uint64_t> out;
    out.reserve(parts.size());
    out.push_back(parts.front());
    for (std::uint64_t i = 0; i < box_rows; ++i)
        out.push_back((i < flipped.rows() ? flipped.parts()[i] : 0) + 1);
    return Partition(std::move(out));
}

}  // namespace palin
