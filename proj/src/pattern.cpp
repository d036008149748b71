#include "permlab/pattern.hpp"

#include <cctype>

#include "permlab/permutation_view.hpp"

namespace permlab {

Pattern::Pattern(std::vector<std::uint32_t> ranks) : ranks_(std::move(ranks)) {
    std::vector<bool> seen(ranks_.size() + 1, false);
    for (std::uint32_t r : ranks_) {
        if (r < 1 || r > ranks_.size() || seen[r]) {
            throw NonInjective("rank vector is not a permutation of 1.." + std::to_string(ranks_.size()));
        }
        seen[r] = true;
    }
}

Pattern Pattern::identity(std::size_t n) {
    std::vector<std::uint32_t> r(n);
    std::iota(r.begin(), r.end(), 1u);
    return Pattern(std::move(r));
}

Pattern Pattern::reversed(std::size_t n) {
    std::vector<std::uint32_t> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>(n - i);
    return Pattern(std::move(r));
}

Pattern Pattern::parse(std::string_view text) {
    std::vector<std::uint32_t> ranks;
    try {
        if (text.find(',') != std::string_view::npos) {
            std::size_t start = 0;
            while (start <= text.size()) {
                std::size_t end = text.find(',', start);
                if (end == std::string_view::npos) end = text.size();
                ranks.push_back(static_cast<std::uint32_t>(std::stoul(std::string(text.substr(start, end - start)))));
                start = end + 1;
            }
        } else {
            for (char ch : text) {
                if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("digit");
                ranks.push_back(static_cast<std::uint32_t>(ch - '0'));
            }
        }
        return Pattern(std::move(ranks));
    } catch (const NonInjective&) {
        throw ParseError("'" + std::string(text) + "' is not a permutation pattern");
    } catch (const std::exception&) {
        throw ParseError("cannot parse pattern '" + std::string(text) + "'");
    }
}

Pattern Pattern::factor(std::size_t start, std::size_t length) const {
    const std::span<const std::uint32_t> slice = ranks().subspan(start, length);
    return from_keys(slice);
}

Pattern Pattern::restrict_to(std::span<const std::size_t> positions) const {
    std::vector<std::uint32_t> keys;
    keys.reserve(positions.size());
    for (std::size_t p : positions) keys.push_back(ranks_.at(p));
    return from_keys(std::span<const std::uint32_t>(keys));
}

bool Pattern::is_increasing() const { return std::is_sorted(ranks_.begin(), ranks_.end()); }

bool Pattern::is_decreasing() const {
    return std::is_sorted(ranks_.begin(), ranks_.end(), std::greater<>{});
}

std::string Pattern::to_string() const {
    std::string out;
    if (ranks_.size() <= 9) {
        for (std::uint32_t r : ranks_) out += static_cast<char>('0' + r);
        return out;
    }
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ranks_[i]);
    }
    return out;
}

Pattern pattern_of(std::span<const ExactReal> values) { return Pattern::from_keys(values); }

bool is_t_periodic(const Pattern& pat, std::size_t t) {
    const std::size_t n = pat.size();
    if (t >= n) return true;
    for (std::size_t i = 0; i + t < n; ++i) {
        for (std::size_t j = i + 1; j + t < n; ++j) {
            if (pat.relation(i, j) != pat.relation(i + t, j + t)) return false;
        }
    }
    return true;
}

// --- Window ----------------------------------------------------------------

Window::Window(std::vector<std::size_t> offsets) : offsets_(std::move(offsets)) {
    if (offsets_.empty() || offsets_.front() != 0) {
        throw std::invalid_argument("window offsets must start at 0");
    }
    for (std::size_t k = 1; k < offsets_.size(); ++k) {
        if (offsets_[k] <= offsets_[k - 1]) throw std::invalid_argument("window offsets must increase strictly");
    }
}

Window Window::contiguous(std::size_t n) {
    std::vector<std::size_t> offsets(n);
    std::iota(offsets.begin(), offsets.end(), std::size_t{0});
    return Window(std::move(offsets));
}

Window Window::parse(std::string_view text) {
    std::vector<std::size_t> offsets;
    try {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            offsets.push_back(std::stoul(std::string(text.substr(start, end - start))));
            start = end + 1;
        }
        return Window(std::move(offsets));
    } catch (const std::exception& e) {
        throw ParseError("cannot parse window '" + std::string(text) + "': " + e.what());
    }
}

std::string Window::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < offsets_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(offsets_[k]);
    }
    return out;
}

// --- PermutationView -------------------------------------------------------

PermutationView::PermutationView(std::string name, Comparator gamma, Representative representative)
    : name_(std::move(name)), gamma_(std::move(gamma)), representative_(std::move(representative)) {}

Relation PermutationView::gamma(Index i, Index j) const {
    if (i == j) throw InvalidPair("gamma is undefined on the diagonal (" + std::to_string(i) + ")");
    return gamma_(i, j);
}

ExactReal PermutationView::representative(Index i) const {
    if (!representative_) throw std::logic_error(name_ + " has no representative values");
    return representative_(i);
}

std::vector<std::uint32_t> window_ranks(const PermutationView& p, Index start, std::size_t n) {
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), start);
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return a != b && p.gamma(a, b) == Relation::less; });
    std::vector<std::uint32_t> ranks(n);
    for (std::size_t r = 0; r < n; ++r) ranks[order[r] - start] = static_cast<std::uint32_t>(r);
    return ranks;
}

Pattern factor(const PermutationView& p, Index s, std::size_t n) {
    if (n == 0) throw std::invalid_argument("factor length must be positive");
    std::vector<std::uint32_t> ranks = window_ranks(p, s, n);
    for (auto& r : ranks) ++r;
    return Pattern(std::move(ranks));
}

}  // namespace permlab
