#include <doctest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "permlab/analysis.hpp"
#include "permlab/errors.hpp"
#include "permlab/genperm.hpp"

using namespace permlab;

namespace {

// less[i][j] for all i, j < M straight from gamma.
std::vector<std::vector<bool>> relation_matrix(const PermutationView& p, std::size_t M) {
    std::vector<std::vector<bool>> less(M, std::vector<bool>(M, false));
    for (std::size_t i = 0; i < M; ++i) {
        for (std::size_t j = i + 1; j < M; ++j) {
            const bool lt = gamma_of(p, i, j) == Relation::less;
            less[i][j] = lt;
            less[j][i] = !lt;
        }
    }
    return less;
}

std::vector<std::uint32_t> sampled_pattern(const std::vector<std::vector<bool>>& less, std::size_t m,
                                           const std::vector<std::size_t>& offsets) {
    std::vector<std::uint32_t> r(offsets.size(), 1);
    for (std::size_t a = 0; a < offsets.size(); ++a) {
        for (std::size_t b = 0; b < offsets.size(); ++b) r[a] += less[m + offsets[b]][m + offsets[a]] ? 1 : 0;
    }
    return r;
}

// Visits every offset vector 0 < t_1 < ... < t_{n-1} <= T.
template <typename F>
void for_each_window(std::size_t n, std::size_t T, F visit) {
    std::vector<std::size_t> offsets(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == n) {
            visit(offsets);
            return;
        }
        for (std::size_t t = offsets[k - 1] + 1; t <= T; ++t) {
            offsets[k] = t;
            rec(k + 1);
        }
    };
    if (n == 1) visit(offsets);
    else rec(1);
}

std::uint64_t brute_max_pattern(const PermutationView& p, std::size_t n, std::size_t T, std::size_t M) {
    const auto less = relation_matrix(p, M);
    std::uint64_t best = 0;
    for_each_window(n, T, [&](const std::vector<std::size_t>& offsets) {
        std::set<std::vector<std::uint32_t>> seen;
        for (std::size_t m = 0; m + offsets.back() < M; ++m) seen.insert(sampled_pattern(less, m, offsets));
        best = std::max<std::uint64_t>(best, seen.size());
    });
    return best;
}

std::uint64_t brute_word_max_pattern(const std::vector<Symbol>& w, std::size_t n, std::size_t T) {
    std::uint64_t best = 0;
    for_each_window(n, T, [&](const std::vector<std::size_t>& offsets) {
        std::set<std::string> seen;
        for (std::size_t m = 0; m + offsets.back() < w.size(); ++m) {
            std::string block;
            for (std::size_t o : offsets) block += static_cast<char>('0' + w[m + o]);
            seen.insert(block);
        }
        best = std::max<std::uint64_t>(best, seen.size());
    });
    return best;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("factor complexity on the reference values") {
    for (std::size_t n = 1; n <= 8; ++n) CHECK(factor_complexity(monotone_permutation(), n, 300).value == 1);

    // explicit integers 1, 4, 3, 6, 5, 8, ...: length-3 factors alternate 132, 213
    std::set<std::string> seen;
    std::vector<long long> a;
    for (long long k = 0; k < 100; ++k) {
        a.push_back(2 * k + 1);
        a.push_back(2 * k + 4);
    }
    for (std::size_t s = 0; s + 3 <= 200; ++s) {
        std::string pat;
        for (std::size_t i = s; i < s + 3; ++i) {
            int rank = 1;
            for (std::size_t j = s; j < s + 3; ++j) rank += a[j] < a[i] ? 1 : 0;
            pat += static_cast<char>('0' + rank);
        }
        seen.insert(pat);
    }
    CHECK(seen == std::set<std::string>{"132", "213"});
    CHECK(factor_complexity(periodic_family(2), 3, 200).value == 2);

    CHECK(factor_complexity(word_permutation(thue_morse_word(), 2), 2, 200).value == 2);
}

TEST_CASE("word factor complexity on the reference values") {
    CHECK(word_factor_complexity(fibonacci_word(), 4, 5000).value == 5);
    CHECK(word_factor_complexity(constant_word(), 7, 100).value == 1);

    std::set<unsigned> blocks;
    for (Index i = 0; i + 3 <= 5000; ++i) {
        unsigned b = 0;
        for (Index k = 0; k < 3; ++k) b = 2 * b + (std::popcount(i + k) & 1);
        blocks.insert(b);
    }
    CHECK(blocks.size() == 6);
    CHECK(word_factor_complexity(thue_morse_word(), 3, 5000).value == 6);
}

TEST_CASE("a contiguous window gives the factor complexity") {
    const PermutationView perms[] = {word_permutation(thue_morse_word(), 2), fibonacci_sturmian_permutation(),
                                     periodic_family(4), word_permutation(random_word(2, 2), 2)};
    for (const auto& p : perms) {
        for (std::size_t n = 1; n <= 6; ++n) {
            CHECK(s_complexity(p, Window::contiguous(n), 500).value == factor_complexity(p, n, 500).value);
        }
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(word_s_complexity(thue_morse_word(), Window::contiguous(n), 500).value ==
              word_factor_complexity(thue_morse_word(), n, 500).value);
    }
}

TEST_CASE("window complexity on the reference values") {
    CHECK(s_complexity(periodic_family(2), Window::parse("0,2"), 200).value == 1);
    CHECK(s_complexity(fibonacci_sturmian_permutation(), Window::parse("0,2"), 2000).value == 2);
    CHECK_THROWS(s_complexity(periodic_family(2), Window::parse("0,200"), 200));
}

TEST_CASE("maximal pattern complexity on the reference values") {
    CHECK(max_pattern_complexity(fibonacci_sturmian_permutation(), 4, 24, 2000).value == 4);
    CHECK(max_pattern_complexity(monotone_permutation(), 4, 12, 300).value == 1);
    std::vector<std::uint64_t> values;
    for (std::size_t n = 2; n <= 6; ++n) values.push_back(max_pattern_complexity(periodic_family(2), n, 12, 400).value);
    CHECK(std::all_of(values.begin(), values.end(), [&](std::uint64_t v) { return v == values.front(); }));

    CHECK(word_max_pattern_complexity(fibonacci_word(), 3, 24, 5000).value == 6);
    CHECK(word_max_pattern_complexity(constant_word(), 3, 10, 100).value == 1);
    CHECK(word_max_pattern_complexity(thue_morse_word(), 2, 16, 5000).value == 4);
    CHECK(brute_word_max_pattern(thue_morse_word().prefix(5000), 2, 16) == 4);

    const auto r = max_pattern_complexity(fibonacci_sturmian_permutation(), 4, 24, 2000);
    CHECK(r.windows_tried == binomial(24, 3));
    CHECK(r.max_spread == 24);
    CHECK(r.scan_bound == 2000);
}

TEST_CASE("maximal pattern complexity against a direct window scan") {
    const PermutationView perms[] = {fibonacci_sturmian_permutation(), word_permutation(thue_morse_word(), 2),
                                     word_permutation(random_word(9, 3), 3), periodic_family(3),
                                     tm_morphic_permutation()};
    for (const auto& p : perms) {
        for (std::size_t n = 1; n <= 4; ++n) {
            REQUIRE(max_pattern_complexity(p, n, 9, 160).value == brute_max_pattern(p, n, 9, 160));
        }
    }
    const InfiniteWord words[] = {fibonacci_word(), thue_morse_word(), random_word(4, 3), period_doubling_word()};
    for (const auto& w : words) {
        for (std::size_t n = 1; n <= 4; ++n) {
            REQUIRE(word_max_pattern_complexity(w, n, 9, 300).value == brute_word_max_pattern(w.prefix(300), n, 9));
        }
    }
}

TEST_CASE("complexities are monotone in the scan bound") {
    const PermutationView perms[] = {fibonacci_sturmian_permutation(), word_permutation(thue_morse_word(), 2),
                                     word_permutation(random_word(1, 2), 2)};
    for (const auto& p : perms) {
        for (std::size_t n : {2, 3, 5}) {
            std::uint64_t f = 0;
            std::uint64_t s = 0;
            std::uint64_t m = 0;
            for (std::size_t M : {50, 100, 200, 400, 800}) {
                const auto fv = factor_complexity(p, n, M).value;
                const Window window = n == 3 ? Window::parse("0,1,3") : Window::contiguous(n);
                const auto sv = s_complexity(p, window, M).value;
                const auto mv = max_pattern_complexity(p, n, 8, M).value;
                CHECK(fv >= f);
                CHECK(sv >= s);
                CHECK(mv >= m);
                CHECK(mv >= fv);
                f = fv;
                s = sv;
                m = mv;
            }
        }
    }
}

TEST_CASE("ultimately periodic permutations have bounded factor complexity") {
    const auto first = factor_complexity(periodic_family(2), 3, 500).value;
    for (std::size_t n = 3; n <= 10; ++n) CHECK(factor_complexity(periodic_family(2), n, 500).value == first);
    for (std::size_t n = 5; n <= 10; ++n) {
        CHECK(factor_complexity(interleaved_permutation({0, 3, 1, 4, 2}), n, 500).value == 5);
    }
}

TEST_CASE("saturation flag") {
    const auto stable = with_saturation([](std::size_t M, std::size_t) { return ComplexityReport{3, 7, M}; }, 10, 4);
    CHECK(stable.saturated);
    CHECK(stable.scan_bound == 10);
    const auto growing = with_saturation(
        [](std::size_t M, std::size_t) { return ComplexityReport{3, static_cast<std::uint64_t>(M), M}; }, 10, 4);
    CHECK_FALSE(growing.saturated);
    CHECK(growing.value == 10);
}

TEST_CASE("period detection") {
    CHECK(detect_period(interleaved_permutation({0, 3, 1, 4, 2}), 200, 20) == 5u);
    CHECK(detect_period(interleaved_permutation({2, 0, 1}), 200, 20) == 3u);
    CHECK(detect_period(periodic_family(2), 200, 20) == 2u);
    CHECK(detect_period(halving_permutation(), 200, 20) == 2u);
    CHECK(detect_period(monotone_permutation(), 200, 20) == 1u);
    CHECK_FALSE(detect_period(word_permutation(thue_morse_word(), 2), 512, 64).has_value());
    CHECK_FALSE(detect_period(fibonacci_sturmian_permutation(), 512, 64).has_value());
    CHECK_THROWS(detect_period(monotone_permutation(), 100, 51));
}

TEST_CASE("squares on the reference values") {
    CHECK(is_square(Pattern::parse("1324")));
    CHECK_FALSE(is_square(Pattern::parse("132")));
    CHECK_FALSE(is_square(Pattern::parse("1243")));
    CHECK_FALSE(is_square(Pattern::parse("12")));
    CHECK(is_square_free(Pattern::parse("1")));
    CHECK(is_square_free(Pattern::parse("321")));
    CHECK_FALSE(is_square_free(Pattern::parse("1234")));
    CHECK(is_square_free(Pattern::parse("1243")));
    CHECK_FALSE(is_square_free(Pattern::parse("521436")));  // factor 2143 has halves 21, 43
}

namespace {

// Half patterns re-derived from the rank values, without Pattern::factor.
std::vector<int> half_shape(const std::vector<std::uint32_t>& r, std::size_t start, std::size_t len) {
    std::vector<int> shape(len, 0);
    for (std::size_t a = 0; a < len; ++a) {
        for (std::size_t b = 0; b < len; ++b) shape[a] += r[start + b] < r[start + a] ? 1 : 0;
    }
    return shape;
}

bool inline_square(const std::vector<std::uint32_t>& r, std::size_t start, std::size_t len) {
    return len >= 4 && len % 2 == 0 && half_shape(r, start, len / 2) == half_shape(r, start + len / 2, len / 2);
}

bool inline_square_free(const std::vector<std::uint32_t>& r) {
    for (std::size_t len = 4; len <= r.size(); len += 2) {
        for (std::size_t s = 0; s + len <= r.size(); ++s) {
            if (inline_square(r, s, len)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("is_square against half patterns on S_4 and S_6") {
    for (std::size_t n : {4, 6}) {
        std::vector<std::uint32_t> r(n);
        std::iota(r.begin(), r.end(), 1u);
        do {
            std::vector<ExactReal> lo;
            std::vector<ExactReal> hi;
            for (std::size_t i = 0; i < n / 2; ++i) lo.emplace_back(static_cast<long long>(r[i]));
            for (std::size_t i = n / 2; i < n; ++i) hi.emplace_back(static_cast<long long>(r[i]));
            REQUIRE(is_square(Pattern(r)) == (pattern_of(lo) == pattern_of(hi)));
        } while (std::next_permutation(r.begin(), r.end()));
    }
}

TEST_CASE("square-free counts") {
    CHECK(count_square_free(1) == 1);
    CHECK(count_square_free(3) == 6);
    std::size_t squares4 = 0;
    std::vector<std::uint32_t> r = {1, 2, 3, 4};
    do {
        squares4 += inline_square(r, 0, 4) ? 1 : 0;
    } while (std::next_permutation(r.begin(), r.end()));
    CHECK(count_square_free(4) == 24 - squares4);
    const auto six = count_square_free(6);
    CHECK(six > 0);
    CHECK(six < 720);
    CHECK_THROWS_AS(count_square_free(10), BudgetExceeded);

    for (std::size_t n = 1; n <= 7; ++n) {
        std::vector<std::uint32_t> ranks(n);
        std::iota(ranks.begin(), ranks.end(), 1u);
        std::uint64_t direct = 0;
        do {
            direct += inline_square_free(ranks) ? 1 : 0;
        } while (std::next_permutation(ranks.begin(), ranks.end()));
        CHECK(count_square_free(n) == direct);
    }
}
