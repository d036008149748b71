#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and returns the process exit status: 0 on success, 1 when a verification
// finds a counterexample, 2 on usage and evaluation errors.

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/permutation_view.hpp"

namespace permlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Scatter plot of (i, rank) for 1-based ranks.
std::string plot_svg(std::span<const std::uint32_t> ranks, std::string_view title);

/// Ranks of the first `count` elements of p among themselves, plotted.
std::string plot_svg(const PermutationView& p, std::size_t count);

}  // namespace permlab::cli
