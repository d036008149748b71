#pragma once

// Exhaustive machinery for periodicity of finite words and permutations:
// period classes of word positions, enumeration of permutations with a given
// set of periods, and checkers for the coprime and general-period statements.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "permlab/pattern.hpp"

namespace permlab {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// kDefaultEnumerationBudget unless PERMLAB_BUDGET holds a positive integer.
std::uint64_t default_budget();

struct PeriodSpec {
    PeriodSpec(std::size_t p, std::size_t q);
    std::size_t p;
    std::size_t q;
    std::size_t g;
};

/// Thrown when the search tree outgrows its budget; carries what was found.
class PartialEnumeration : public BudgetExceeded {
public:
    PartialEnumeration(std::uint64_t budget, std::vector<Pattern> partial);
    std::vector<Pattern> partial;
};

/// Finest partition of {0..L-1} closed under i ~ i + t for every period t,
/// classes listed by smallest element, members ascending.
std::vector<std::vector<std::size_t>> word_period_classes(std::size_t length,
                                                          std::span<const std::size_t> periods);

/// All patterns of the given length that are t-periodic for every listed t,
/// in ascending rank-vector order. Built position by position: each new
/// element's admissible insertion slots form an interval fixed by the
/// relations it must copy from earlier positions.
std::vector<Pattern> enumerate_periodic_patterns(std::size_t length, std::span<const std::size_t> periods,
                                                 std::uint64_t budget = default_budget());

struct Theorem2Report {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t length = 0;                    // p + q
    std::size_t periodic_count = 0;            // patterns of that length with both periods
    std::optional<Pattern> counterexample;     // non-monotone one, if any
    std::size_t witness_length = 0;            // p + q - 1
    std::optional<Pattern> witness;            // least non-monotone pattern at p + q - 1
    bool confirmed() const { return !counterexample.has_value(); }
};

/// Coprime periods: every p,q-periodic pattern of length p + q is monotone,
/// and length p + q - 1 admits a non-monotone one (absent when min(p,q) = 1).
Theorem2Report verify_theorem2(std::size_t p, std::size_t q, std::uint64_t budget = default_budget());

struct Theorem3Report {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t n = 0;
    std::size_t g = 0;
    std::size_t factor_bound = 0;              // n - p - q + 2g + 1, clamped to [0, n]
    std::size_t patterns_checked = 0;
    std::uint64_t factors_checked = 0;
    std::optional<Pattern> counterexample;     // offending pattern
    std::optional<Pattern> offending_factor;
    bool confirmed() const { return !counterexample.has_value(); }
};

/// Every contiguous factor of length <= n - p - q + 2 gcd(p,q) + 1 of every
/// p,q-periodic pattern of length n is gcd-periodic.
Theorem3Report verify_theorem3(std::size_t p, std::size_t q, std::size_t n,
                               std::uint64_t budget = default_budget());

/// Least (by rank vector) pattern of length n that is p- and q-periodic but
/// not gcd(p,q)-periodic; nullopt when none exists.
std::optional<Pattern> find_nongcd_witness(std::size_t p, std::size_t q, std::size_t n,
                                           std::uint64_t budget = default_budget());

}  // namespace permlab
