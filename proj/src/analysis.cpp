#include "permlab/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace permlab {

namespace {

enum class KeyKind {
    order,   // relative order of the sampled values
    symbols  // the sampled values themselves
};

// Distinct-key counter. Keys of up to 16 entries are packed 4 bits per
// entry into one word; longer keys fall back to vectors.
class KeySet {
public:
    explicit KeySet(KeyKind kind) : kind_(kind) {}

    void clear() {
        packed_.clear();
        wide_.clear();
    }

    void add(std::span<const std::uint32_t> values) {
        const std::size_t n = values.size();
        if (n <= 16 && (kind_ == KeyKind::order || fits_in_nibbles(values))) {
            std::uint64_t key = 0;
            for (std::size_t k = 0; k < n; ++k) key = (key << 4) | entry(values, k);
            packed_.push_back(key);
            return;
        }
        std::vector<std::uint32_t> key(n);
        for (std::size_t k = 0; k < n; ++k) key[k] = entry(values, k);
        wide_.push_back(std::move(key));
    }

    std::uint64_t count() {
        std::sort(packed_.begin(), packed_.end());
        std::sort(wide_.begin(), wide_.end());
        const auto p = std::unique(packed_.begin(), packed_.end()) - packed_.begin();
        const auto w = std::unique(wide_.begin(), wide_.end()) - wide_.begin();
        return static_cast<std::uint64_t>(p + w);
    }

private:
    static bool fits_in_nibbles(std::span<const std::uint32_t> values) {
        return std::all_of(values.begin(), values.end(), [](std::uint32_t v) { return v < 16; });
    }

    std::uint32_t entry(std::span<const std::uint32_t> values, std::size_t k) const {
        if (kind_ == KeyKind::symbols) return values[k];
        std::uint32_t below = 0;
        for (std::uint32_t v : values) below += (v < values[k]) ? 1 : 0;
        return below;
    }

    KeyKind kind_;
    std::vector<std::uint64_t> packed_;
    std::vector<std::vector<std::uint32_t>> wide_;
};

std::vector<std::uint32_t> word_prefix(const InfiniteWord& w, std::size_t count) {
    const std::vector<Symbol> symbols = w.prefix(count);
    return {symbols.begin(), symbols.end()};
}

std::uint64_t count_window(std::span<const std::uint32_t> sequence, std::span<const std::size_t> offsets,
                           KeyKind kind) {
    const std::size_t spread = offsets.back();
    KeySet keys(kind);
    std::vector<std::uint32_t> sample(offsets.size());
    for (std::size_t m = 0; m + spread < sequence.size(); ++m) {
        for (std::size_t k = 0; k < offsets.size(); ++k) sample[k] = sequence[m + offsets[k]];
        keys.add(sample);
    }
    return keys.count();
}

ComplexityReport window_report(std::span<const std::uint32_t> sequence, const Window& window, KeyKind kind) {
    if (window.spread() >= sequence.size()) {
        throw std::invalid_argument("window spread " + std::to_string(window.spread()) +
                                    " does not fit in a scan of " + std::to_string(sequence.size()));
    }
    ComplexityReport report;
    report.n = window.size();
    report.scan_bound = sequence.size();
    report.max_spread = window.spread();
    report.value = count_window(sequence, window.offsets(), kind);
    return report;
}

// Neighbourhood of a start position: the values at offsets 0..span.
struct Context {
    std::vector<std::uint32_t> values;
    std::size_t span;
};

// Start positions whose whole T-neighbourhood fits are interchangeable when
// the neighbourhoods agree (as patterns, or as symbol blocks), so each class
// is represented once. Positions closer than T to the end keep their own,
// shorter context.
std::vector<Context> collect_contexts(std::span<const std::uint32_t> sequence, std::size_t max_spread,
                                      std::size_t n, KeyKind kind) {
    const std::size_t length = sequence.size();
    std::set<std::vector<std::uint32_t>> full;
    std::size_t m = 0;
    for (; m + max_spread < length; ++m) {
        std::vector<std::uint32_t> ctx(sequence.begin() + static_cast<std::ptrdiff_t>(m),
                                       sequence.begin() + static_cast<std::ptrdiff_t>(m + max_spread + 1));
        if (kind == KeyKind::order) {
            const Pattern reduced = Pattern::from_keys(std::span<const std::uint32_t>(ctx));
            ctx.assign(reduced.ranks().begin(), reduced.ranks().end());
        }
        full.insert(std::move(ctx));
    }
    std::vector<Context> contexts;
    for (const auto& ctx : full) contexts.push_back({ctx, max_spread});
    for (; m + (n - 1) < length; ++m) {
        contexts.push_back({std::vector<std::uint32_t>(sequence.begin() + static_cast<std::ptrdiff_t>(m),
                                                       sequence.end()),
                            length - 1 - m});
    }
    return contexts;
}

ComplexityReport max_window_report(std::span<const std::uint32_t> sequence, std::size_t n, std::size_t max_spread,
                                   KeyKind kind) {
    if (n == 0) throw std::invalid_argument("window size must be positive");
    if (max_spread + 1 < n) throw std::invalid_argument("max spread T must be at least n - 1");
    if (sequence.size() < n) throw std::invalid_argument("scan bound must be at least n");

    const std::vector<Context> contexts = collect_contexts(sequence, max_spread, n, kind);
    ComplexityReport report;
    report.n = n;
    report.scan_bound = sequence.size();
    report.max_spread = max_spread;
    report.windows_tried = 0;

    KeySet keys(kind);
    std::vector<std::size_t> offsets(n, 0);
    std::vector<std::uint32_t> sample(n);
    // offsets[1..n-1] run over increasing (n-1)-subsets of {1..T}.
    for (std::size_t k = 1; k < n; ++k) offsets[k] = k;
    while (true) {
        const std::size_t spread = offsets.back();
        keys.clear();
        for (const Context& ctx : contexts) {
            if (ctx.span < spread) continue;
            for (std::size_t k = 0; k < n; ++k) sample[k] = ctx.values[offsets[k]];
            keys.add(sample);
        }
        report.value = std::max(report.value, keys.count());
        ++report.windows_tried;

        std::size_t k = n - 1;
        while (k >= 1 && offsets[k] == max_spread - (n - 1 - k)) --k;
        if (k == 0) break;
        ++offsets[k];
        for (std::size_t r = k + 1; r < n; ++r) offsets[r] = offsets[r - 1] + 1;
    }
    return report;
}

std::vector<std::uint32_t> permutation_prefix(const PermutationView& p, std::size_t scan_bound) {
    return window_ranks(p, 0, scan_bound);
}

}  // namespace

ComplexityReport factor_complexity(const PermutationView& p, std::size_t n, std::size_t scan_bound) {
    if (n == 0 || scan_bound < n) throw std::invalid_argument("factor complexity needs 1 <= n <= M");
    return window_report(permutation_prefix(p, scan_bound), Window::contiguous(n), KeyKind::order);
}

ComplexityReport word_factor_complexity(const InfiniteWord& w, std::size_t n, std::size_t scan_bound) {
    if (n == 0 || scan_bound < n) throw std::invalid_argument("factor complexity needs 1 <= n <= M");
    return window_report(word_prefix(w, scan_bound), Window::contiguous(n), KeyKind::symbols);
}

ComplexityReport s_complexity(const PermutationView& p, const Window& window, std::size_t scan_bound) {
    if (window.spread() >= scan_bound) throw std::invalid_argument("window spread must be below M");
    return window_report(permutation_prefix(p, scan_bound), window, KeyKind::order);
}

ComplexityReport word_s_complexity(const InfiniteWord& w, const Window& window, std::size_t scan_bound) {
    if (window.spread() >= scan_bound) throw std::invalid_argument("window spread must be below M");
    return window_report(word_prefix(w, scan_bound), window, KeyKind::symbols);
}

ComplexityReport max_pattern_complexity(const PermutationView& p, std::size_t n, std::size_t max_spread,
                                        std::size_t scan_bound) {
    if (scan_bound < n) throw std::invalid_argument("scan bound must be at least n");
    return max_window_report(permutation_prefix(p, scan_bound), n, max_spread, KeyKind::order);
}

ComplexityReport word_max_pattern_complexity(const InfiniteWord& w, std::size_t n, std::size_t max_spread,
                                             std::size_t scan_bound) {
    if (scan_bound < n) throw std::invalid_argument("scan bound must be at least n");
    return max_window_report(word_prefix(w, scan_bound), n, max_spread, KeyKind::symbols);
}

ComplexityReport with_saturation(const std::function<ComplexityReport(std::size_t, std::size_t)>& compute,
                                 std::size_t scan_bound, std::size_t max_spread) {
    ComplexityReport report = compute(scan_bound, max_spread);
    const ComplexityReport doubled = compute(2 * scan_bound, 2 * max_spread);
    report.saturated = doubled.value == report.value;
    return report;
}

std::optional<std::size_t> detect_period(const PermutationView& p, std::size_t scan_bound, std::size_t t_max) {
    if (t_max == 0 || 2 * t_max > scan_bound) throw std::invalid_argument("detect_period needs 1 <= t_max <= M/2");
    const std::vector<std::uint32_t> ranks = permutation_prefix(p, scan_bound);
    for (std::size_t t = 1; t <= t_max; ++t) {
        bool consistent = true;
        for (std::size_t i = 0; consistent && i + t < scan_bound; ++i) {
            for (std::size_t j = i + 1; j + t < scan_bound; ++j) {
                if ((ranks[i] < ranks[j]) != (ranks[i + t] < ranks[j + t])) {
                    consistent = false;
                    break;
                }
            }
        }
        if (consistent) return t;
    }
    return std::nullopt;
}

bool is_square(const Pattern& pat) {
    const std::size_t n = pat.size();
    if (n < 4 || n % 2 != 0) return false;
    return pat.factor(0, n / 2) == pat.factor(n / 2, n / 2);
}

bool is_square_free(const Pattern& pat) {
    for (std::size_t length = 4; length <= pat.size(); length += 2) {
        for (std::size_t s = 0; s + length <= pat.size(); ++s) {
            if (is_square(pat.factor(s, length))) return false;
        }
    }
    return true;
}

std::uint64_t count_square_free(std::size_t n) {
    if (n > kMaxSquareFreeEnumeration) {
        throw BudgetExceeded("square-free enumeration is limited to n <= " +
                             std::to_string(kMaxSquareFreeEnumeration));
    }
    std::vector<std::uint32_t> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 1u);
    std::uint64_t count = 0;
    do {
        if (is_square_free(Pattern(ranks))) ++count;
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    return count;
}

}  // namespace permlab
