#include "permlab/finewilf.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace permlab {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("PERMLAB_BUDGET")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return value;
    }
    return kDefaultEnumerationBudget;
}

PeriodSpec::PeriodSpec(std::size_t p, std::size_t q) : p(p), q(q), g(std::gcd(p, q)) {
    if (p == 0 || q == 0) throw std::invalid_argument("periods must be positive");
}

PartialEnumeration::PartialEnumeration(std::uint64_t budget, std::vector<Pattern> partial)
    : BudgetExceeded("enumeration exceeded its budget of " + std::to_string(budget) + " nodes after " +
                     std::to_string(partial.size()) + " patterns"),
      partial(std::move(partial)) {}

std::vector<std::vector<std::size_t>> word_period_classes(std::size_t length,
                                                          std::span<const std::size_t> periods) {
    if (length == 0) throw std::invalid_argument("length must be positive");
    std::vector<std::size_t> parent(length);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t t : periods) {
        if (t == 0) throw std::invalid_argument("periods must be positive");
        for (std::size_t i = 0; i + t < length; ++i) {
            const std::size_t a = find(i);
            const std::size_t b = find(i + t);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> slot(length, length);
    for (std::size_t i = 0; i < length; ++i) {
        const std::size_t root = find(i);
        if (slot[root] == length) {
            slot[root] = classes.size();
            classes.emplace_back();
        }
        classes[slot[root]].push_back(i);
    }
    return classes;
}

namespace {

class PeriodicSearch {
public:
    PeriodicSearch(std::size_t length, std::span<const std::size_t> periods, std::uint64_t budget)
        : length_(length), periods_(periods.begin(), periods.end()), budget_(budget) {
        for (std::size_t t : periods_) {
            if (t == 0) throw std::invalid_argument("periods must be positive");
        }
        rank_of_.assign(length_, 0);
    }

    std::vector<Pattern> run() {
        descend(0);
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    // order_ lists placed positions by increasing value; rank_of_ inverts it.
    void descend(std::size_t k) {
        if (++nodes_ > budget_) {
            std::sort(found_.begin(), found_.end());
            throw PartialEnumeration(budget_, std::move(found_));
        }
        if (k == length_) {
            std::vector<std::uint32_t> ranks(length_);
            for (std::size_t r = 0; r < length_; ++r) ranks[order_[r]] = static_cast<std::uint32_t>(r + 1);
            found_.emplace_back(std::move(ranks));
            return;
        }
        // Slot s puts the new element above exactly s placed elements.
        std::size_t lo = 0;
        std::size_t hi = k;
        for (std::size_t t : periods_) {
            for (std::size_t i = t; i < k; ++i) {
                // relation(i, k) must copy relation(i - t, k - t)
                if (rank_of_[i - t] < rank_of_[k - t]) {
                    lo = std::max(lo, rank_of_[i] + 1);
                } else {
                    hi = std::min(hi, rank_of_[i]);
                }
            }
        }
        for (std::size_t s = lo; s <= hi && lo <= hi; ++s) {
            order_.insert(order_.begin() + static_cast<std::ptrdiff_t>(s), k);
            refresh_ranks();
            descend(k + 1);
            order_.erase(order_.begin() + static_cast<std::ptrdiff_t>(s));
            refresh_ranks();
        }
    }

    void refresh_ranks() {
        for (std::size_t r = 0; r < order_.size(); ++r) rank_of_[order_[r]] = r;
    }

    std::size_t length_;
    std::vector<std::size_t> periods_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> rank_of_;
    std::vector<Pattern> found_;
};

bool has_all_periods(const Pattern& pat, std::span<const std::size_t> periods) {
    return std::all_of(periods.begin(), periods.end(), [&](std::size_t t) { return is_t_periodic(pat, t); });
}

}  // namespace

std::vector<Pattern> enumerate_periodic_patterns(std::size_t length, std::span<const std::size_t> periods,
                                                 std::uint64_t budget) {
    if (length == 0) throw std::invalid_argument("length must be positive");
    return PeriodicSearch(length, periods, budget).run();
}

Theorem2Report verify_theorem2(std::size_t p, std::size_t q, std::uint64_t budget) {
    const PeriodSpec spec(p, q);
    if (spec.g != 1) throw std::invalid_argument("verify_theorem2 needs coprime periods");
    if (p + q > 12) throw std::invalid_argument("verify_theorem2 is limited to p + q <= 12");
    const std::size_t periods[] = {p, q};

    Theorem2Report report;
    report.p = p;
    report.q = q;
    report.length = p + q;
    const std::vector<Pattern> at_length = enumerate_periodic_patterns(report.length, periods, budget);
    report.periodic_count = at_length.size();
    for (const Pattern& pat : at_length) {
        if (!pat.is_monotone() || !has_all_periods(pat, periods)) {
            report.counterexample = pat;
            break;
        }
    }
    report.witness_length = p + q - 1;
    for (const Pattern& pat : enumerate_periodic_patterns(report.witness_length, periods, budget)) {
        if (!pat.is_monotone()) {
            report.witness = pat;
            break;
        }
    }
    return report;
}

Theorem3Report verify_theorem3(std::size_t p, std::size_t q, std::size_t n, std::uint64_t budget) {
    const PeriodSpec spec(p, q);
    const std::size_t periods[] = {p, q};
    Theorem3Report report;
    report.p = p;
    report.q = q;
    report.n = n;
    report.g = spec.g;
    const long long bound = static_cast<long long>(n) - static_cast<long long>(p + q) +
                            2 * static_cast<long long>(spec.g) + 1;
    report.factor_bound = static_cast<std::size_t>(std::clamp<long long>(bound, 0, static_cast<long long>(n)));

    const std::vector<Pattern> patterns = enumerate_periodic_patterns(n, periods, budget);
    report.patterns_checked = patterns.size();
    for (const Pattern& pat : patterns) {
        for (std::size_t length = 1; length <= report.factor_bound; ++length) {
            for (std::size_t s = 0; s + length <= n; ++s) {
                ++report.factors_checked;
                const Pattern f = pat.factor(s, length);
                if (!is_t_periodic(f, spec.g)) {
                    report.counterexample = pat;
                    report.offending_factor = f;
                    return report;
                }
            }
        }
    }
    return report;
}

std::optional<Pattern> find_nongcd_witness(std::size_t p, std::size_t q, std::size_t n, std::uint64_t budget) {
    // For coprime periods this asks for a non-monotone pattern.
    const PeriodSpec spec(p, q);
    const std::size_t periods[] = {p, q};
    for (const Pattern& pat : enumerate_periodic_patterns(n, periods, budget)) {
        if (!is_t_periodic(pat, spec.g)) return pat;
    }
    return std::nullopt;
}

}  // namespace permlab
