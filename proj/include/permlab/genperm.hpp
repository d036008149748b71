#pragma once

// Constructors for the infinite permutations the library knows about.

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "permlab/numerics.hpp"
#include "permlab/permutation_view.hpp"
#include "permlab/words.hpp"

namespace permlab {

inline constexpr std::size_t kDefaultLookahead = 4096;

/// Order of the q-ary numbers .w_i w_{i+1} ... , decided by lexicographic
/// comparison of suffixes. Throws UnresolvedComparison if two suffixes
/// agree on `lookahead` symbols.
PermutationView word_permutation(InfiniteWord w, unsigned q, std::size_t lookahead = kDefaultLookahead);

/// a_0 = a0, a_{i+1} = a_i + x after a 0 and a_i - y after a 1.
/// x and y must be positive and linearly independent over Q.
PermutationView sturmian_permutation(InfiniteWord w, ExactReal x, ExactReal y, ExactReal a0 = {});

/// Default Sturmian data: Fibonacci word, x = 1, y = sqrt(2), a0 = 0.
PermutationView fibonacci_sturmian_permutation();

/// Representative 1, 2n, 3, 2n+2, 5, 2n+4, ...; 2-periodic for every n >= 2.
PermutationView periodic_family(std::uint64_t n);

/// a_{tk+r} = t*k + offsets[r] with t = offsets.size(); offsets must be
/// pairwise distinct mod t. t-periodic by construction.
PermutationView interleaved_permutation(std::vector<std::int64_t> offsets);

/// a_i = i.
PermutationView monotone_permutation();

/// a_i = (-1/2)^i.
PermutationView halving_permutation();

/// b_i = 1000 + (-1)^i / (i + 1); the same order as halving_permutation().
PermutationView harmonic_permutation();

/// One step of the doubling rule: x > 0 -> (x/2, x/2 - 1), otherwise (x/2, x/2 + 1).
std::pair<BigRational, BigRational> tm_morphism_image(const BigRational& x);

/// First `count` terms of 0, 1, 1/2, -1/2, 1/4, -3/4, -1/4, 3/4, 1/8, ...
std::vector<BigRational> tm_morphic_representative(std::size_t count);

/// The permutation realised by the stream above.
PermutationView tm_morphic_permutation();

/// Permutation spec grammar used by the CLI:
///   wordperm:<word spec>            (lookahead from the argument)
///   sturmian[:w=<word>,x=<real>,y=<real>,a0=<real>]
///   sturmian:alpha=<real>,rho=<real>,x=...,y=...  (mechanical word)
///   periodic:n=<n> | interleave:<o0>,<o1>,... | monotone | tmmorphic | halving | harmonic
PermutationView parse_permutation_spec(std::string_view spec, std::size_t lookahead = kDefaultLookahead,
                                       std::uint64_t default_seed = 0);

inline constexpr std::string_view kPermutationSpecGrammar =
    "wordperm:<word> | sturmian[:w=fib,x=1,y=sqrt2,a0=0] | sturmian:alpha=A,rho=R,x=X,y=Y | "
    "periodic:n=N | interleave:O0,O1,... | monotone | tmmorphic | halving | harmonic";

}  // namespace permlab
