#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permlab/numerics.hpp"
#include "permlab/pattern.hpp"
#include "permlab/words.hpp"

namespace permlab {

/// An infinite permutation of N given by its order relation, optionally
/// with exact representative values a_i. Cheap to copy; the comparator
/// must be safe to call concurrently.
class PermutationView {
public:
    using Comparator = std::function<Relation(Index, Index)>;
    using Representative = std::function<ExactReal(Index)>;

    PermutationView(std::string name, Comparator gamma, Representative representative = {});

    // Throws InvalidPair when i == j.
    Relation gamma(Index i, Index j) const;
    bool has_representative() const { return static_cast<bool>(representative_); }
    ExactReal representative(Index i) const;
    const std::string& name() const { return name_; }

private:
    std::string name_;
    Comparator gamma_;
    Representative representative_;
};

inline Relation gamma_of(const PermutationView& p, Index i, Index j) { return p.gamma(i, j); }

/// Pattern induced on positions s, ..., s + n - 1.
Pattern factor(const PermutationView& p, Index s, std::size_t n);

/// 0-based ranks of positions start, ..., start + n - 1 among themselves.
std::vector<std::uint32_t> window_ranks(const PermutationView& p, Index start, std::size_t n);

}  // namespace permlab
