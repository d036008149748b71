#pragma once

// Finite permutation patterns, the order relation between two positions,
// sampling windows, and finite t-periodicity.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/numerics.hpp"

namespace permlab {

enum class Relation : char { less = '<', greater = '>' };

constexpr Relation opposite(Relation r) {
    return r == Relation::less ? Relation::greater : Relation::less;
}

constexpr char to_char(Relation r) { return static_cast<char>(r); }

/// A permutation of {1, ..., n} stored as its rank vector ("2431").
/// Positions are 0-based; ranks are 1-based as in the usual notation.
class Pattern {
public:
    Pattern() = default;
    // Throws NonInjective unless `ranks` is a bijection onto {1, ..., n}.
    explicit Pattern(std::vector<std::uint32_t> ranks);

    static Pattern identity(std::size_t n);
    static Pattern reversed(std::size_t n);
    // "2431" (one digit per entry) or "2,4,3,1".
    static Pattern parse(std::string_view text);

    // Reduces distinct keys to their pattern; throws NonInjective on ties.
    template <typename T>
    static Pattern from_keys(std::span<const T> keys);

    std::size_t size() const { return ranks_.size(); }
    bool empty() const { return ranks_.empty(); }
    std::uint32_t operator[](std::size_t i) const { return ranks_[i]; }
    std::span<const std::uint32_t> ranks() const { return ranks_; }

    Relation relation(std::size_t i, std::size_t j) const {
        return ranks_[i] < ranks_[j] ? Relation::less : Relation::greater;
    }

    // Pattern of positions start, ..., start + length - 1, renormalized.
    Pattern factor(std::size_t start, std::size_t length) const;
    Pattern restrict_to(std::span<const std::size_t> positions) const;

    bool is_increasing() const;
    bool is_decreasing() const;
    bool is_monotone() const { return is_increasing() || is_decreasing(); }

    // Compact form for n <= 9, comma-separated otherwise.
    std::string to_string() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
    std::vector<std::uint32_t> ranks_;
};

template <typename T>
Pattern Pattern::from_keys(std::span<const T> keys) {
    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::vector<std::uint32_t> ranks(keys.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 && !(keys[order[r - 1]] < keys[order[r]])) {
            throw NonInjective("pattern_of: values at positions " + std::to_string(order[r - 1]) +
                               " and " + std::to_string(order[r]) + " coincide");
        }
        ranks[order[r]] = static_cast<std::uint32_t>(r + 1);
    }
    Pattern p;
    p.ranks_ = std::move(ranks);
    return p;
}

/// Pattern of pairwise-distinct exact values.
Pattern pattern_of(std::span<const ExactReal> values);

/// True iff the relation between positions i < j equals the relation
/// between i + t and j + t whenever both shifted positions are in range.
bool is_t_periodic(const Pattern& pat, std::size_t t);

/// Offsets 0 = t_0 < t_1 < ... < t_{n-1}.
class Window {
public:
    explicit Window(std::vector<std::size_t> offsets);
    static Window contiguous(std::size_t n);
    // "0,2,5"
    static Window parse(std::string_view text);

    std::size_t size() const { return offsets_.size(); }
    std::size_t spread() const { return offsets_.back(); }
    std::span<const std::size_t> offsets() const { return offsets_; }
    std::string to_string() const;

private:
    std::vector<std::size_t> offsets_;
};

}  // namespace permlab
