#include "palindromes.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "qseries.hpp"

namespace palin {

namespace {

CasePlan make_plan(CaseTag tag, std::uint64_t k, std::uint64_t l, std::uint64_t x,
                   std::uint64_t y) {
    CasePlan plan;
    plan.tag = tag;
    plan.k = k;
    plan.l = l;
    switch (tag) {
        case CaseTag::case1:
            plan.zeros = 2 * k;
            plan.ones = 2 * l;
            break;
        case CaseTag::case2a:
            plan.zeros = 2 * k + 1;
            plan.ones = 2 * l;
            break;
        case CaseTag::case2b:
            plan.zeros = 2 * k;
            plan.ones = 2 * l + 1;
            break;
    }
    plan.factor_x = std::min(x, y);
    plan.factor_y = std::max(x, y);
    plan.multiplicity = binomial(k + l, k);
    return plan;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t smallest_factor(std::uint64_t n) {
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

}  // namespace

std::vector<CasePlan> case_plans(std::uint64_t n) {
    if (n == 0) throw std::domain_error("case_plans: n must be positive");
    const std::uint64_t target = 2 * (n + 1);
    std::vector<CasePlan> plans;
    for (std::uint64_t x = 2; x * x <= target; ++x) {
        if (target % x != 0) continue;
        const std::uint64_t y = target / x;
        if (x % 2 == 1 || y % 2 == 1) {
            // Exactly one factor is odd; it plays 2k+3 in case 2a and 2l+3
            // in the conjugate case 2b.
            const std::uint64_t odd = (x % 2 == 1) ? x : y;
            const std::uint64_t even = (x % 2 == 1) ? y : x;
            plans.push_back(make_plan(CaseTag::case2a, (odd - 3) / 2, (even - 2) / 2, x, y));
            plans.push_back(make_plan(CaseTag::case2b, (even - 2) / 2, (odd - 3) / 2, x, y));
        } else {
            plans.push_back(make_plan(CaseTag::case1, y / 2 - 1, x / 2 - 1, x, y));
            if (x != y)
                plans.push_back(make_plan(CaseTag::case1, x / 2 - 1, y / 2 - 1, x, y));
        }
    }
    std::stable_sort(plans.begin(), plans.end(), [](const CasePlan& a, const CasePlan& b) {
        if (a.word_length() != b.word_length()) return a.word_length() > b.word_length();
        return a.zeros > b.zeros;
    });
    // Distinct plans fix distinct (zeros, ones), so their partition sets are
    // disjoint; duplicates would be adjacent after the sort.
    for (std::size_t i = 1; i < plans.size(); ++i)
        assert(plans[i - 1].word_length() != plans[i].word_length() ||
               plans[i - 1].zeros != plans[i].zeros);
    return plans;
}

Partition assemble(const CasePlan& plan, const Partition& tau) {
    if (!fits_in_box(tau, plan.k, plan.l))
        throw std::domain_error("assemble: tau does not fit in the k x l box");
    const auto tau_part = [&](std::uint64_t i) {
        return i < tau.rows() ? tau.parts()[i] : std::uint64_t{0};
    };
    std::vector<std::uint64_t> parts;
    parts.reserve(plan.zeros + 1);
    parts.push_back(plan.ones + 1);
    // Inner rows, top to bottom: rotated complement of tau at full inner
    // width, the forced middle row for case 2a, then tau itself. The +1
    // reattaches the first column.
    for (std::uint64_t i = 0; i < plan.k; ++i)
        parts.push_back(plan.ones - tau_part(plan.k - 1 - i) + 1);
    if (plan.tag == CaseTag::case2a) parts.push_back(plan.l + 1);
    for (std::uint64_t i = 0; i < plan.k; ++i) parts.push_back(tau_part(i) + 1);
    return Partition(std::move(parts));
}

PalindromeStream::PalindromeStream(std::uint64_t n) : plans_(case_plans(n)) {
    if (!plans_.empty()) box_.emplace(plans_[0].k, plans_[0].l);
}

std::optional<Partition> PalindromeStream::next() {
    while (idx_ < plans_.size()) {
        if (auto tau = box_->next()) return assemble(plans_[idx_], *tau);
        if (++idx_ < plans_.size()) box_.emplace(plans_[idx_].k, plans_[idx_].l);
    }
    return std::nullopt;
}

mpz_class pp_count(std::uint64_t n) {
    mpz_class total = 0;
    for (const CasePlan& plan : case_plans(n)) total += plan.multiplicity;
    return total;
}

std::uint64_t pl_count(std::uint64_t n) {
    const auto plans = case_plans(n);
    std::uint64_t distinct = 0;
    std::uint64_t last = 0;
    for (const CasePlan& plan : plans) {  // lengths arrive sorted descending
        if (distinct == 0 || plan.word_length() != last) ++distinct;
        last = plan.word_length();
    }
    return distinct;
}

std::optional<Partition> nontrivial_witness(std::uint64_t n) {
    if (n == 0) throw std::domain_error("nontrivial_witness: n must be positive");
    if (n == 3 || is_prime(n + 1)) return std::nullopt;
    const std::uint64_t np1 = n + 1;
    CasePlan plan;
    if (np1 % 2 == 1) {
        // Odd composite n+1 = x*y with both factors odd and at least 3.
        const std::uint64_t x = smallest_factor(np1);
        const std::uint64_t y = np1 / x;
        plan = make_plan(CaseTag::case2a, (y - 3) / 2, x - 1, 2 * x, y);
    } else {
        const std::uint64_t x = np1 / 2;  // >= 3 since n = 3 was handled above
        if (x % 2 == 0)
            plan = make_plan(CaseTag::case1, 1, x / 2 - 1, 4, x);
        else
            plan = make_plan(CaseTag::case2a, (x - 3) / 2, 1, 4, x);
    }
    return assemble(plan, Partition{});
}

}  // namespace palin
