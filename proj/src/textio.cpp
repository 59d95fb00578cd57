#include "textio.hpp"

#include <charconv>
#include <sstream>

namespace palin {

namespace {

// Parsed partitions are capped to keep absurd exponent inputs from
// exhausting memory.
constexpr std::uint64_t kMaxParsedParts = std::uint64_t{1} << 26;

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError(std::string("invalid ") + what + ": '" + std::string(s) + "'");
    return value;
}

}  // namespace

std::string to_text(const Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

std::string to_text(const BitWord& w) {
    if (w.empty()) return "-";
    std::string out;
    out.reserve(w.size());
    for (bool b : w.bits()) out += b ? '1' : '0';
    return out;
}

std::string to_text(const Fraction& f) { return f.num.get_str() + "/" + f.den.get_str(); }

std::string to_text(PathClass c) {
    switch (c) {
        case PathClass::palindromic: return "palindromic";
        case PathClass::antipalindromic: return "antipalindromic";
        case PathClass::both: return "both";
        case PathClass::neither: return "neither";
    }
    return "neither";
}

std::string to_text(CaseTag tag) {
    switch (tag) {
        case CaseTag::case1: return "1";
        case CaseTag::case2a: return "2a";
        case CaseTag::case2b: return "2b";
    }
    return "?";
}

Partition parse_partition(std::string_view s) {
    s = trimmed(s);
    if (s == "-") return {};
    if (s.empty()) throw ParseError("empty partition text; use '-' for the empty partition");
    std::vector<std::uint64_t> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        std::string_view token =
            trimmed(s.substr(start, comma == std::string_view::npos ? comma : comma - start));
        std::uint64_t part = 0;
        std::uint64_t repeat = 1;
        if (const std::size_t caret = token.find('^'); caret != std::string_view::npos) {
            part = parse_u64(trimmed(token.substr(0, caret)), "part");
            repeat = parse_u64(trimmed(token.substr(caret + 1)), "exponent");
            if (repeat == 0) throw ParseError("exponent must be positive");
        } else {
            part = parse_u64(token, "part");
        }
        if (part == 0) throw ParseError("partition parts must be positive");
        if (parts.size() + repeat > kMaxParsedParts) throw ParseError("partition too large");
        parts.insert(parts.end(), repeat, part);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

BitWord parse_word(std::string_view s) {
    s = trimmed(s);
    if (s == "-" || s.empty()) return {};
    std::vector<bool> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw ParseError(std::string("invalid word character '") + c + "'");
        bits.push_back(c == '1');
    }
    return BitWord(std::move(bits));
}

Fraction parse_fraction(std::string_view s) {
    s = trimmed(s);
    const std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) throw ParseError("fraction must be written p/q");
    const std::string num(trimmed(s.substr(0, slash)));
    const std::string den(trimmed(s.substr(slash + 1)));
    mpz_class p, q;
    if (num.empty() || den.empty() || mpz_set_str(p.get_mpz_t(), num.c_str(), 10) != 0 ||
        mpz_set_str(q.get_mpz_t(), den.c_str(), 10) != 0)
        throw ParseError("fraction must be written p/q with decimal p, q");
    if (p <= 0 || q <= 0) throw ParseError("fraction must be positive");
    return make_fraction(std::move(p), std::move(q));
}

Klein parse_klein(std::string_view s) {
    s = trimmed(s);
    if (s == "E") return Klein::e;
    if (s == "R") return Klein::r;
    if (s == "I") return Klein::i;
    if (s == "RI") return Klein::ri;
    throw ParseError("Klein element must be one of E, R, I, RI");
}

std::string plan_table_csv(std::uint64_t n) {
    std::ostringstream out;
    out << "x,y,l,k,zeros,ones,count,example\n";
    for (const CasePlan& plan : case_plans(n)) {
        out << plan.factor_x << ',' << plan.factor_y << ',' << plan.l << ',' << plan.k << ','
            << plan.zeros << ',' << plan.ones << ',' << plan.multiplicity << ",\""
            << to_text(assemble(plan, Partition{})) << "\"\n";
    }
    return out.str();
}

std::string diagram(const Partition& p, std::uint64_t max_width) {
    if (p.empty()) return "-\n";
    std::vector<std::string> lines;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::string row;
        for (std::uint64_t c = 0; c < parts[i]; ++c) row += "[]";
        if (i > 0) row += " 0";  // row 0 ends at the stripped trailing 0
        lines.push_back(std::move(row));
        // Horizontal bits below this row; under the last row the leftmost
        // edge is the stripped leading 1.
        const std::uint64_t next = (i + 1 < parts.size()) ? parts[i + 1] : 1;
        if (parts[i] > next) {
            std::string run(2 * parts[i], ' ');
            for (std::uint64_t c = next + 1; c <= parts[i]; ++c) run[2 * c - 1] = '1';
            while (!run.empty() && run.back() == ' ') run.pop_back();
            lines.push_back(std::move(run));
        }
    }
    std::string out;
    for (std::string& line : lines) {
        if (max_width > 0 && line.size() > max_width)
            line = line.substr(0, max_width > 1 ? max_width - 1 : 0) + ">";
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace palin
