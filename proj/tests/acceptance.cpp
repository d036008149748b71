// Acceptance suite: one PASS/FAIL line per criterion with its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permlab/analysis.hpp"
#include "permlab/automaton.hpp"
#include "permlab/cli.hpp"
#include "permlab/finewilf.hpp"
#include "permlab/genperm.hpp"
#include "permlab/makarov.hpp"

using namespace permlab;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<void(Outcome&)> body;
};

std::string str(std::size_t v) { return std::to_string(v); }

std::vector<std::size_t> subset(unsigned mask, const std::vector<std::size_t>& from) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < from.size(); ++k) {
        if (mask & (1u << k)) out.push_back(from[k]);
    }
    return out;
}

bool has_period(const std::vector<std::uint32_t>& r, std::size_t t) {
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = i + 1; j + t < r.size(); ++j) {
            if ((r[i] < r[j]) != (r[i + t] < r[j + t])) return false;
        }
    }
    return true;
}

std::vector<int> half_shape(const std::vector<std::uint32_t>& r, std::size_t start, std::size_t len) {
    std::vector<int> shape(len, 0);
    for (std::size_t a = 0; a < len; ++a) {
        for (std::size_t b = 0; b < len; ++b) shape[a] += r[start + b] < r[start + a] ? 1 : 0;
    }
    return shape;
}

bool square_by_halves(const std::vector<std::uint32_t>& r, std::size_t start, std::size_t len) {
    return len >= 4 && len % 2 == 0 && half_shape(r, start, len / 2) == half_shape(r, start + len / 2, len / 2);
}

bool square_free_by_halves(const std::vector<std::uint32_t>& r) {
    for (std::size_t len = 4; len <= r.size(); len += 2) {
        for (std::size_t s = 0; s + len <= r.size(); ++s) {
            if (square_by_halves(r, s, len)) return false;
        }
    }
    return true;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
    std::ostringstream out;
    std::ostringstream err;
    code = cli::run(args, out, err);
    return out.str() + "\x1f" + err.str();
}

void tm_prefix(Outcome& o) {
    const PermutationView tm = word_permutation(thue_morse_word(), 2);
    o.require(factor(tm, 0, 4).to_string() == "2431", "factor(0,4) != 2431");
    const struct {
        Index i, j;
        Relation r;
    } expected[] = {{0, 1, Relation::less},    {0, 2, Relation::less},    {0, 3, Relation::greater},
                    {1, 2, Relation::greater}, {1, 3, Relation::greater}, {2, 3, Relation::greater}};
    for (const auto& e : expected) {
        o.require(gamma_of(tm, e.i, e.j) == e.r, "gamma(" + str(e.i) + "," + str(e.j) + ")");
    }
}

void finewilf_words(Outcome& o) {
    std::string not_tight;
    for (std::size_t p = 1; p <= 8; ++p) {
        for (std::size_t q = p + 1; q <= 8; ++q) {
            const std::size_t g = std::gcd(p, q);
            const std::size_t L = p + q - g;
            const std::size_t periods[] = {p, q};
            const auto classes = word_period_classes(L, periods);
            bool residues = classes.size() == g;
            for (std::size_t c = 0; c < classes.size() && residues; ++c) {
                for (std::size_t pos : classes[c]) residues = residues && pos % g == classes[c].front() % g;
            }
            o.require(residues, "classes at L for (" + str(p) + "," + str(q) + ")");
            const std::size_t shorter = word_period_classes(L - 1, periods).size();
            if (shorter <= g) {
                not_tight += " (" + str(p) + "," + str(q) + ")";
                // the period q is vacuous at length q - 1 when p divides q
                o.require(q % p == 0 && shorter == g, "unexpected class count at L-1 for (" + str(p) + "," + str(q) + ")");
            }
        }
    }
    o.require(not_tight.empty(), "no extra class at L-1 (p divides q):" + not_tight);
}

void theorem2(Outcome& o) {
    const std::pair<std::size_t, std::size_t> cases[] = {{2, 3}, {3, 4}, {2, 5}, {3, 5}, {4, 5}};
    for (const auto& [p, q] : cases) {
        const std::size_t periods[] = {p, q};
        const auto all = enumerate_periodic_patterns(p + q, periods);
        o.require(all == std::vector<Pattern>{Pattern::identity(p + q), Pattern::reversed(p + q)},
                  "monotone-only at " + str(p + q));
        const auto shorter = enumerate_periodic_patterns(p + q - 1, periods);
        o.require(std::any_of(shorter.begin(), shorter.end(), [](const Pattern& x) { return !x.is_monotone(); }),
                  "witness at " + str(p + q - 1));
        const auto report = verify_theorem2(p, q);
        o.require(report.confirmed() && report.witness && !report.witness->is_monotone(),
                  "report for (" + str(p) + "," + str(q) + ")");
    }
}

void theorem3(Outcome& o) {
    const std::size_t periods[] = {4, 6};
    for (std::size_t n = 11; n <= 14; ++n) {
        const std::size_t bound = n - 10 + 5;
        const auto patterns = enumerate_periodic_patterns(n, periods);
        o.require(!patterns.empty(), "no patterns at " + str(n));
        for (const Pattern& pat : patterns) {
            for (std::size_t len = 1; len <= bound; ++len) {
                for (std::size_t s = 0; s + len <= n; ++s) {
                    o.require(is_t_periodic(pat.factor(s, len), 2), "factor of " + pat.to_string());
                }
            }
        }
        const auto report = verify_theorem3(4, 6, n);
        o.require(report.confirmed() && report.factor_bound == bound, "report at " + str(n));
    }
    for (std::size_t n = 11; n <= 20; ++n) {
        const auto w = find_nongcd_witness(4, 6, n);
        o.require(w && w->size() == n && is_t_periodic(*w, 4) && is_t_periodic(*w, 6) && !is_t_periodic(*w, 2),
                  "witness at " + str(n));
    }
}

void oracle_equivalence(Outcome& o) {
    const std::vector<std::size_t> base = {2, 3, 4, 5};
    for (std::size_t L = 1; L <= 8; ++L) {
        std::vector<std::vector<std::uint32_t>> all;
        std::vector<std::uint32_t> r(L);
        std::iota(r.begin(), r.end(), 1u);
        do {
            all.push_back(r);
        } while (std::next_permutation(r.begin(), r.end()));
        for (unsigned mask = 0; mask < 16; ++mask) {
            const auto periods = subset(mask, base);
            std::vector<Pattern> filtered;
            for (const auto& ranks : all) {
                if (std::all_of(periods.begin(), periods.end(), [&](std::size_t t) { return has_period(ranks, t); })) {
                    filtered.emplace_back(ranks);
                }
            }
            o.require(enumerate_periodic_patterns(L, periods) == filtered,
                      "L=" + str(L) + " mask=" + str(mask));
        }
    }
}

void sturmian_words(Outcome& o) {
    const InfiniteWord fib = fibonacci_word();
    for (std::size_t n = 1; n <= 10; ++n) {
        o.require(word_factor_complexity(fib, n, 5000).value == n + 1, "p(" + str(n) + ")");
    }
}

void word_max_pattern(Outcome& o) {
    const InfiniteWord fib = fibonacci_word();
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto r = with_saturation(
            [&](std::size_t M, std::size_t T) { return word_max_pattern_complexity(fib, n, T, M); }, 5000, 24);
        o.require(r.value == 2 * n, "p*(" + str(n) + ") = " + str(r.value));
        o.require(r.saturated, "p*(" + str(n) + ") not saturated");
    }
}

void sturmian_max_pattern(Outcome& o) {
    const PermutationView p = fibonacci_sturmian_permutation();
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto r = with_saturation(
            [&](std::size_t M, std::size_t T) { return max_pattern_complexity(p, n, T, M); }, 2000, 24);
        o.require(r.value == n, "p*(" + str(n) + ") = " + str(r.value));
        o.require(r.saturated, "p*(" + str(n) + ") not saturated");
    }
}

void periodic_forward(Outcome& o) {
    const PermutationView p = periodic_family(2);
    const auto first = factor_complexity(p, 3, 500).value;
    for (std::size_t n = 4; n <= 10; ++n) {
        o.require(factor_complexity(p, n, 500).value == first, "p(" + str(n) + ")");
    }
    o.require(detect_period(p, 512, 64) == std::optional<std::size_t>(2), "detect_period");
}

void family_distinct(Outcome& o) {
    std::string same;
    for (std::uint64_t n = 2; n <= 10; ++n) {
        const PermutationView a = periodic_family(n);
        for (Index s = 0; s < 24; ++s) {
            for (std::size_t len = 1; len <= 6; ++len) {
                o.require(is_t_periodic(factor(a, s, len), 2), "factor of family " + str(n));
            }
        }
        for (std::uint64_t m = n + 1; m <= 10; ++m) {
            const PermutationView b = periodic_family(m);
            const auto distinguished = [&](std::size_t max_len) {
                for (Index s = 0; s < 4; ++s) {
                    for (std::size_t len = 1; len <= max_len; ++len) {
                        if (factor(a, s, len) != factor(b, s, len)) return true;
                    }
                }
                return false;
            };
            if (!distinguished(6)) {
                same += " (" + str(n) + "," + str(m) + ")";
                // longer factors always separate them
                o.require(distinguished(2 * n + 2), "families " + str(n) + " and " + str(m) + " never differ");
            }
        }
    }
    o.require(same.empty(), "no factor of length <= 6 separates:" + same);
}

void makarov(Outcome& o) {
    for (unsigned t = 1; t <= 18; ++t) {
        o.require(psi(t) == count_primitive_words(t), "psi(" + str(t) + ")");
        BigInt total = 0;
        for (unsigned d = 1; d <= t; ++d) {
            if (t % d == 0) total += psi(d);
        }
        o.require(total == BigInt(1) << t, "divisor sum at " + str(t));
    }
    o.require(max_complexity(2) == 2 && max_complexity(3) == 6 && max_complexity(4) == 18 && max_complexity(5) == 48,
              "p(2..5)");
    const InfiniteWord words[] = {thue_morse_word(), fibonacci_word(), period_doubling_word(), random_word(0)};
    for (const auto& w : words) {
        // Fibonacci suffixes 2584 apart agree on more than the default 4096 symbols.
        const PermutationView p = word_permutation(w, 2, 1 << 15);
        for (std::size_t n1 = 2; n1 <= 7; ++n1) {
            o.require(BigInt(factor_complexity(p, n1, 4000).value) <= max_complexity(n1),
                      w.name() + " at " + str(n1));
        }
    }
}

void morphic(Outcome& o) {
    const auto v = tm_morphic_representative(64);
    const std::vector<ExactReal> reals(v.begin(), v.end());
    o.require(pattern_of(reals) == factor(word_permutation(thue_morse_word(), 2), 0, 64), "pattern of 64 values");
    const std::vector<BigRational> shown = {0, 1, BigRational(1, 2), BigRational(-1, 2), BigRational(1, 4),
                                            BigRational(-3, 4), BigRational(-1, 4), BigRational(3, 4)};
    o.require(std::equal(shown.begin(), shown.end(), v.begin()), "first 8 values");
}

void automaton(Outcome& o) {
    const PairAutomaton aut = tm_automaton();
    o.require(crosscheck(aut, word_permutation(thue_morse_word(), 2), 512).empty(), "crosscheck");
    for (Index i = 0; i < 512; ++i) {
        for (Index j = i + 1; j < 512; ++j) {
            const Output a = evaluate(aut, i, j);
            const Output b = evaluate(aut, j, i);
            o.require(a != Output::equal && b != Output::equal && a != b, "antisymmetry at " + str(i) + "," + str(j));
        }
    }
}

void squares(Outcome& o) {
    for (std::size_t n : {4, 6}) {
        std::vector<std::uint32_t> r(n);
        std::iota(r.begin(), r.end(), 1u);
        do {
            o.require(is_square(Pattern(r)) == square_by_halves(r, 0, n), "is_square " + Pattern(r).to_string());
        } while (std::next_permutation(r.begin(), r.end()));
    }
    o.require(count_square_free(3) == 6, "count(3)");
    std::uint64_t previous = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
        const std::uint64_t c = count_square_free(n);
        if (n <= 7) {
            std::vector<std::uint32_t> r(n);
            std::iota(r.begin(), r.end(), 1u);
            std::uint64_t direct = 0;
            do {
                direct += square_free_by_halves(r) ? 1 : 0;
            } while (std::next_permutation(r.begin(), r.end()));
            o.require(c == direct, "second scan at " + str(n));
        }
        o.require(c > 0 && c > previous, "growth at " + str(n));
        previous = c;
    }
}

void determinism(Outcome& o) {
    const std::vector<std::vector<std::string>> commands = {
        {"factor", "--perm", "wordperm:tm", "--start", "0", "--len", "4"},
        {"gamma", "--perm", "wordperm:tm", "--i", "0", "--j", "3"},
        {"finewilf", "words", "--p", "4", "--q", "6"},
        {"finewilf", "perms", "--p", "2", "--q", "3"},
        {"finewilf", "perms", "--p", "4", "--q", "6", "--n", "12"},
        {"finewilf", "witness", "--p", "4", "--q", "6", "--n", "20"},
        {"complexity", "--word", "fib", "--n", "1,2,3,4,5,6,7,8,9,10", "--M", "5000"},
        {"complexity", "--word", "fib", "--kind", "maxpattern", "--n", "1,2,3,4", "--M", "5000"},
        {"complexity", "--perm", "sturmian", "--kind", "maxpattern", "--n", "1,2,3", "--M", "2000"},
        {"complexity", "--perm", "periodic:n=2", "--n", "3,4,5", "--M", "500"},
        {"period", "--perm", "periodic:n=2"},
        {"makarov", "table", "--max-n", "18"},
        {"squares", "--count", "7"},
        {"squares", "--pattern", "2143"},
        {"automaton", "check", "--N", "512"},
        {"automaton", "dump-tm"},
        {"plot", "--perm", "periodic:n=2", "--N", "40"},
        {"plot", "--witness", "4,6,20"},
        {"--format", "json", "factor", "--perm", "tmmorphic", "--len", "64"},
        {"--format", "json", "complexity", "--word", "random", "--n", "1,2,3", "--M", "1000"},
        {"--format", "csv", "makarov", "table", "--max-n", "12"},
    };
    for (const auto& c : commands) {
        int a_code = 0;
        int b_code = 0;
        const std::string a = run_cli(c, a_code);
        const std::string b = run_cli(c, b_code);
        std::string joined;
        for (const auto& part : c) joined += part + " ";
        o.require(a_code == 0, "exit code of: " + joined);
        o.require(a == b && a_code == b_code, "differs: " + joined);
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 tm prefix pattern", 1, tm_prefix},
        {"2 fine-wilf for words", 1, finewilf_words},
        {"3 coprime periods force monotone", 30, theorem2},
        {"4 general periods and witnesses", 60, theorem3},
        {"5 enumeration equals filter", 60, oracle_equivalence},
        {"6 fibonacci word complexity", 5, sturmian_words},
        {"7 fibonacci word max-pattern", 120, word_max_pattern},
        {"8 sturmian permutation max-pattern", 120, sturmian_max_pattern},
        {"9 periodic family bounded complexity", 5, periodic_forward},
        {"10 periodic family distinct", 5, family_distinct},
        {"11 makarov formulas", 30, makarov},
        {"12 morphic representative", 1, morphic},
        {"13 thue-morse automaton", 5, automaton},
        {"14 squares", 120, squares},
        {"15 cli determinism", 120, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && elapsed > c.limit_seconds) {
            o.ok = false;
            o.detail = "over time limit";
        }
        failures += o.ok ? 0 : 1;
        std::printf("%s  %-40s %8.3fs / %gs%s%s\n", o.ok ? "PASS" : "FAIL", c.name, elapsed, c.limit_seconds,
                    o.detail.empty() ? "" : "  ", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
