#include "calkin_wilf.hpp"

#include <algorithm>
#include <stdexcept>

namespace palin {

Fraction make_fraction(mpz_class num, mpz_class den) {
    if (num <= 0 || den <= 0)
        throw std::domain_error("fraction: numerator and denominator must be positive");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Fraction{num / g, den / g};
}

Fraction fraction_at(const BitWord& path) {
    Fraction f;
    for (bool b : path.bits()) {
        if (b)
            f.num += f.den;
        else
            f.den += f.num;
    }
    return f;
}

BitWord path_of(const Fraction& f) {
    if (f.num <= 0 || f.den <= 0) throw std::domain_error("path_of: fraction must be positive");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), f.num.get_mpz_t(), f.den.get_mpz_t());
    mpz_class p = f.num / g;
    mpz_class q = f.den / g;
    std::vector<bool> rbits;
    while (p != 1 || q != 1) {
        if (p < q) {
            // t parent steps q -= p at once; q stays >= 1
            mpz_class t = (q - 1) / p;
            for (mpz_class i = 0; i < t; ++i) rbits.push_back(false);
            q -= t * p;
        } else {
            mpz_class t = (p - 1) / q;
            for (mpz_class i = 0; i < t; ++i) rbits.push_back(true);
            p -= t * q;
        }
    }
    std::reverse(rbits.begin(), rbits.end());
    return BitWord(std::move(rbits));
}

mpz_class index_of(const BitWord& path) {
    mpz_class idx = 1;
    for (bool b : path.bits()) {
        idx <<= 1;
        if (b) idx += 1;
    }
    return idx;
}

BitWord path_of_index(const mpz_class& index) {
    if (index < 1) throw std::domain_error("path_of_index: index must be >= 1");
    const std::size_t len = mpz_sizeinbase(index.get_mpz_t(), 2);
    std::vector<bool> bits;
    bits.reserve(len - 1);
    for (std::size_t i = len - 1; i-- > 0;)
        bits.push_back(mpz_tstbit(index.get_mpz_t(), static_cast<mp_bitcnt_t>(i)) != 0);
    return BitWord(std::move(bits));
}

Partition partition_at_node(const BitWord& path) {
    // Right children add 1 to every part; keep a pending offset instead of
    // touching all parts per step.
    std::vector<std::int64_t> base{1};
    std::int64_t delta = 0;
    for (bool b : path.bits()) {
        if (b)
            ++delta;
        else
            base.push_back(1 - delta);
    }
    std::vector<std::uint64_t> parts;
    parts.reserve(base.size());
    for (std::int64_t v : base) parts.push_back(static_cast<std::uint64_t>(v + delta));
    return Partition(std::move(parts));
}

PathClass classify_path(const BitWord& path) noexcept {
    const bool pal = is_palindrome(path);
    const bool anti = is_antipalindrome(path);
    if (pal && anti) return PathClass::both;  // only the empty path
    if (pal) return PathClass::palindromic;
    if (anti) return PathClass::antipalindromic;
    return PathClass::neither;
}

}  // namespace palin
