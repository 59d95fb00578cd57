#include "oracle.hpp"

#include <sstream>
#include <stdexcept>

#include "bitword.hpp"
#include "palindromes.hpp"
#include "qseries.hpp"

namespace palin::oracle {

std::uint64_t pp_brute(std::uint64_t n) {
    if (n == 0) throw std::domain_error("pp_brute: n must be positive");
    std::uint64_t count = 0;
    PartitionStream stream(n);
    while (auto p = stream.next())
        if (is_palindrome(encode(*p))) ++count;
    return count;
}

std::set<Partition> palindromes_brute(std::uint64_t n) {
    if (n == 0) throw std::domain_error("palindromes_brute: n must be positive");
    std::set<Partition> out;
    PartitionStream stream(n);
    while (auto p = stream.next())
        if (is_palindrome(encode(*p))) out.insert(std::move(*p));
    return out;
}

std::uint64_t r_brute(std::uint64_t n) {
    if (n == 0) throw std::domain_error("r_brute: n must be positive");
    std::uint64_t count = 0;
    PartitionStream stream(n);
    while (auto p = stream.next())
        if (reverse_partition(*p).weight() == n) ++count;
    return count;
}

std::uint64_t pl_brute(std::uint64_t n) {
    std::set<std::size_t> lengths;
    for (const Partition& p : palindromes_brute(n)) lengths.insert(encode(p).size());
    return lengths.size();
}

VerifyReport verify(std::uint64_t max_n) {
    if (max_n == 0) throw std::domain_error("verify: max_n must be positive");
    VerifyReport report;
    std::ostringstream out;
    const CoeffSeries pp = pp_series(max_n);
    const CoeffSeries r = r_series(max_n);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        const std::uint64_t pp_b = pp_brute(n);
        const mpz_class pp_f = pp_count(n);
        if (pp_f != pp_b || pp.at(n) != pp_b) {
            out << "mismatch at n=" << n << ": pp_brute=" << pp_b << " pp_count=" << pp_f
                << " pp_series=" << pp.at(n);
            return {false, out.str()};
        }
        const std::uint64_t r_b = r_brute(n);
        if (r.at(n) != r_b) {
            out << "mismatch at n=" << n << ": r_brute=" << r_b << " r_series=" << r.at(n);
            return {false, out.str()};
        }
        const std::uint64_t pl_b = pl_brute(n);
        if (pl_count(n) != pl_b) {
            out << "mismatch at n=" << n << ": pl_brute=" << pl_b << " pl=" << pl_count(n);
            return {false, out.str()};
        }
        std::set<Partition> enumerated;
        PalindromeStream stream(n);
        while (auto p = stream.next()) {
            if (p->weight() != n || !is_palindrome(encode(*p))) {
                out << "unsound palindrome enumerated at n=" << n;
                return {false, out.str()};
            }
            if (!enumerated.insert(std::move(*p)).second) {
                out << "duplicate palindrome enumerated at n=" << n;
                return {false, out.str()};
            }
        }
        if (enumerated != palindromes_brute(n)) {
            out << "mismatch at n=" << n << ": enumerated palindrome set differs from brute force";
            return {false, out.str()};
        }
    }
    out << "verified n = 1.." << max_n
        << ": pp count/series/brute, r series/brute, pl, and palindrome sets all agree";
    report.text = out.str();
    return report;
}

}  // namespace palin::oracle
