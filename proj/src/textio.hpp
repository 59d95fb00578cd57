#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "bitword.hpp"
#include "calkin_wilf.hpp"
#include "palindromes.hpp"
#include "partition.hpp"

namespace palin {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Canonical text forms used everywhere: partitions are comma-separated
// parts, largest first ("5,5,3,3,1"); words are plain 0/1 strings;
// fractions are "p/q". The empty partition and the empty word both render
// as "-". Partition input additionally accepts exponent shorthand
// ("3,2^4"), which is never emitted.
std::string to_text(const Partition& p);
std::string to_text(const BitWord& w);
std::string to_text(const Fraction& f);
std::string to_text(PathClass c);
std::string to_text(CaseTag tag);

Partition parse_partition(std::string_view s);
BitWord parse_word(std::string_view s);
Fraction parse_fraction(std::string_view s);  // accepts unreduced input
Klein parse_klein(std::string_view s);

// CSV plan table for n with header x,y,l,k,zeros,ones,count,example; the
// example column is the plan's partition for the empty tau, quoted.
std::string plan_table_csv(std::uint64_t n);

// ASCII Young diagram with the boundary word annotated: one "[]" per box,
// each row's vertical edge bit after the cells, horizontal edge bits on a
// line of their own below the row they close. The stripped leading 1 and
// trailing 0 are not annotated. Lines longer than max_width are cut and end
// with '>'; max_width 0 means unlimited.
std::string diagram(const Partition& p, std::uint64_t max_width);

}  // namespace palin
