#pragma once

// Complexity functions over finite scans of infinite objects, period
// detection, and squares of finite permutations.
//
// Scan convention: a scan bound M means only positions 0 .. M-1 are read.
// A factor or window occurrence counts when all of its positions fall
// below M. Every value is therefore a lower bound for the supremum over
// the whole infinite object.

#include <cstdint>
#include <functional>
#include <optional>

#include "permlab/pattern.hpp"
#include "permlab/permutation_view.hpp"
#include "permlab/words.hpp"

namespace permlab {

struct ComplexityReport {
    std::size_t n = 0;
    std::uint64_t value = 0;
    std::size_t scan_bound = 0;
    std::uint64_t windows_tried = 1;
    std::size_t max_spread = 0;
    // Set by with_saturation(): the value did not move when M and T doubled.
    bool saturated = false;
};

inline constexpr std::size_t kDefaultScanBound = 2000;
inline constexpr std::size_t kDefaultMaxSpread = 24;

ComplexityReport factor_complexity(const PermutationView& p, std::size_t n, std::size_t scan_bound);
ComplexityReport word_factor_complexity(const InfiniteWord& w, std::size_t n, std::size_t scan_bound);

ComplexityReport s_complexity(const PermutationView& p, const Window& window, std::size_t scan_bound);
ComplexityReport word_s_complexity(const InfiniteWord& w, const Window& window, std::size_t scan_bound);

/// Maximum S-complexity over all windows with n offsets and spread <= T.
ComplexityReport max_pattern_complexity(const PermutationView& p, std::size_t n, std::size_t max_spread,
                                        std::size_t scan_bound);
ComplexityReport word_max_pattern_complexity(const InfiniteWord& w, std::size_t n, std::size_t max_spread,
                                             std::size_t scan_bound);

/// Runs `compute(M, T)` and `compute(2M, 2T)`; returns the first report,
/// marked saturated when both values agree.
ComplexityReport with_saturation(const std::function<ComplexityReport(std::size_t, std::size_t)>& compute,
                                 std::size_t scan_bound, std::size_t max_spread);

/// Smallest t <= t_max such that the relation of (i, j) equals that of
/// (i + t, j + t) for every pair inside the first M positions.
std::optional<std::size_t> detect_period(const PermutationView& p, std::size_t scan_bound, std::size_t t_max);

/// Even length >= 4 with order-isomorphic halves.
bool is_square(const Pattern& pat);
/// No contiguous factor is a square.
bool is_square_free(const Pattern& pat);

inline constexpr std::size_t kMaxSquareFreeEnumeration = 9;
/// Number of square-free permutations of length n by enumeration of S_n.
std::uint64_t count_square_free(std::size_t n);

}  // namespace permlab
