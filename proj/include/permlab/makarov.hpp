#pragma once

// Counting formulas for permutations generated by binary words.

#include <cstdint>
#include <optional>
#include <vector>

#include "permlab/numerics.hpp"

namespace permlab {

/// Moebius function by trial division.
int mobius(std::uint64_t n);

/// Number of primitive binary words of length t: sum over d | t of mu(t/d) 2^d.
BigInt psi(std::uint64_t t);

/// Largest possible number of length-(n+1) factors of a permutation generated
/// by a binary word: sum_{t=1}^{n} psi(t) 2^(n-t).
BigInt max_complexity(std::uint64_t n_plus_1);

inline constexpr unsigned kMaxPrimitiveEnumeration = 20;

/// Brute-force count of binary words of length t that are not a proper power.
std::uint64_t count_primitive_words(unsigned t);

struct ComplexityTableRow {
    std::uint64_t t = 0;
    BigInt psi;
    std::optional<std::uint64_t> oracle;  // enumeration count, when t is small enough
    BigInt p_next;                        // max_complexity(t + 1)
};

std::vector<ComplexityTableRow> complexity_table(std::uint64_t max_n);

}  // namespace permlab
