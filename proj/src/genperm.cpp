#include "permlab/genperm.hpp"

#include <memory>

#include "permlab/memo.hpp"

namespace permlab {

namespace {

Relation relation_from(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return Relation::less;
    if (o == std::strong_ordering::greater) return Relation::greater;
    throw NonInjective("representative values coincide");
}

// x / y is rational iff the 2x2 determinant of the coordinates over {1, sqrt d} vanishes.
bool independent_over_q(const ExactReal& x, const ExactReal& y) {
    if (x.is_rational() && y.is_rational()) return false;
    if (x.sign() == 0 || y.sign() == 0) return false;
    const BigInt d = x.is_rational() ? y.surd().d() : x.surd().d();
    const auto coords = [&](const ExactReal& v) {
        if (v.is_rational()) return std::pair<BigInt, BigInt>(v.rational().numerator(), 0);
        if (v.surd().d() != d) throw UnsupportedField("Sturmian steps must share one quadratic field");
        return std::pair<BigInt, BigInt>(v.surd().a(), v.surd().b());
    };
    const auto [a1, b1] = coords(x);
    const auto [a2, b2] = coords(y);
    return a1 * b2 - a2 * b1 != 0;
}

}  // namespace

PermutationView word_permutation(InfiniteWord w, unsigned q, std::size_t lookahead) {
    if (q != w.alphabet_size()) {
        throw ConstructionError("base " + std::to_string(q) + " does not match the alphabet size " +
                                std::to_string(w.alphabet_size()) + " of " + w.name());
    }
    if (lookahead == 0) throw ConstructionError("lookahead must be positive");
    std::string name = "wordperm:" + w.name();
    auto gamma = [w, lookahead](Index i, Index j) -> Relation {
        w.ensure(std::max(i, j) + lookahead);
        for (Index k = 0; k < lookahead; ++k) {
            const Symbol a = w.at(i + k);
            const Symbol b = w.at(j + k);
            if (a != b) return a < b ? Relation::less : Relation::greater;
        }
        throw UnresolvedComparison(i, j, lookahead);
    };
    return PermutationView(std::move(name), std::move(gamma));
}

PermutationView sturmian_permutation(InfiniteWord w, ExactReal x, ExactReal y, ExactReal a0) {
    if (w.alphabet_size() != 2) throw ConstructionError("Sturmian permutations need a binary word");
    if (x.sign() <= 0 || y.sign() <= 0) throw ConstructionError("Sturmian steps x, y must be positive");
    if (!independent_over_q(x, y)) {
        throw RationalDependence("x = " + x.to_string() + " and y = " + y.to_string() +
                                 " are rationally dependent");
    }

    // ones[i] = number of 1s among w_0 ... w_{i-1}; zeros follow as i - ones[i].
    struct State {
        State(InfiniteWord w, ExactReal x, ExactReal y, ExactReal a0)
            : word(std::move(w)), x(std::move(x)), y(std::move(y)), a0(std::move(a0)) {}

        InfiniteWord word;
        ExactReal x, y, a0;
        AppendOnlyMemo<std::uint64_t> ones;

        std::int64_t ones_before(Index i) {
            ones.ensure(i + 1, [this](AppendOnlyMemo<std::uint64_t>::Writer& out) {
                const std::size_t n = out.size();
                out.push_back(n == 0 ? 0 : out[n - 1] + word.at(n - 1));
            });
            return static_cast<std::int64_t>(ones[i]);
        }
    };
    std::string name = "sturmian:w=" + w.name() + ",x=" + x.to_string() + ",y=" + y.to_string() +
                       ",a0=" + a0.to_string();
    auto state = std::make_shared<State>(std::move(w), std::move(x), std::move(y), std::move(a0));

    auto gamma = [state](Index i, Index j) -> Relation {
        const std::int64_t d_ones = state->ones_before(i) - state->ones_before(j);
        const std::int64_t d_zeros = (static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j)) - d_ones;
        const ExactReal diff = ExactReal(d_zeros) * state->x - ExactReal(d_ones) * state->y;
        return relation_from(compare(diff, ExactReal(0)));
    };
    auto representative = [state](Index i) -> ExactReal {
        const std::int64_t ones = state->ones_before(i);
        const std::int64_t zeros = static_cast<std::int64_t>(i) - ones;
        return state->a0 + ExactReal(zeros) * state->x - ExactReal(ones) * state->y;
    };
    return PermutationView(std::move(name), std::move(gamma), std::move(representative));
}

PermutationView fibonacci_sturmian_permutation() {
    return sturmian_permutation(fibonacci_word(), ExactReal(1), ExactReal(QuadraticSurd(0, 1, 2)), ExactReal(0));
}

PermutationView interleaved_permutation(std::vector<std::int64_t> offsets) {
    const auto t = static_cast<std::int64_t>(offsets.size());
    if (t == 0) throw ConstructionError("interleaving needs at least one strand");
    std::vector<bool> residue_used(static_cast<std::size_t>(t), false);
    for (std::int64_t o : offsets) {
        const auto r = static_cast<std::size_t>(((o % t) + t) % t);
        if (residue_used[r]) throw ConstructionError("strand offsets must be distinct modulo the period");
        residue_used[r] = true;
    }
    std::string name = "interleave:";
    for (std::size_t k = 0; k < offsets.size(); ++k) name += (k ? "," : "") + std::to_string(offsets[k]);

    auto value = [offsets, t](Index i) -> __int128 {
        const auto k = static_cast<__int128>(i / static_cast<Index>(t));
        return static_cast<__int128>(t) * k + offsets[i % static_cast<Index>(t)];
    };
    auto gamma = [value](Index i, Index j) { return value(i) < value(j) ? Relation::less : Relation::greater; };
    auto representative = [value](Index i) { return ExactReal(BigRational(BigInt(value(i)))); };
    return PermutationView(std::move(name), std::move(gamma), std::move(representative));
}

PermutationView periodic_family(std::uint64_t n) {
    if (n < 2) throw ConstructionError("the 2-periodic family needs n >= 2");
    const PermutationView base = interleaved_permutation({1, static_cast<std::int64_t>(2 * n)});
    return PermutationView("periodic:n=" + std::to_string(n),
                           [base](Index i, Index j) { return base.gamma(i, j); },
                           [base](Index i) { return base.representative(i); });
}

PermutationView monotone_permutation() {
    return PermutationView(
        "monotone", [](Index i, Index j) { return i < j ? Relation::less : Relation::greater; },
        [](Index i) { return ExactReal(BigRational(BigInt(i))); });
}

PermutationView halving_permutation() {
    // Even terms are positive and shrink, odd terms are negative and grow.
    return PermutationView(
        "halving",
        [](Index i, Index j) {
            if (i % 2 != j % 2) return i % 2 == 0 ? Relation::greater : Relation::less;
            return (i < j) == (i % 2 == 0) ? Relation::greater : Relation::less;
        },
        [](Index i) {
            BigInt den = BigInt(1) << static_cast<unsigned>(i);
            return ExactReal(BigRational(i % 2 == 0 ? BigInt(1) : BigInt(-1), den));
        });
}

PermutationView harmonic_permutation() {
    const auto value = [](Index i) {
        return BigRational(1000) + BigRational(i % 2 == 0 ? BigInt(1) : BigInt(-1), BigInt(i) + 1);
    };
    return PermutationView(
        "harmonic", [value](Index i, Index j) { return relation_from(value(i) <=> value(j)); },
        [value](Index i) { return ExactReal(value(i)); });
}

std::pair<BigRational, BigRational> tm_morphism_image(const BigRational& x) {
    const BigRational half = x / BigRational(2);
    if (x.sign() > 0) return {half, half - BigRational(1)};
    return {half, half + BigRational(1)};
}

namespace {

BigRational tm_morphic_term(Index i) {
    if (i < 2) return BigRational(static_cast<long long>(i));
    const auto [even, odd] = tm_morphism_image(tm_morphic_term(i / 2));
    return (i % 2 == 0) ? even : odd;
}

}  // namespace

std::vector<BigRational> tm_morphic_representative(std::size_t count) {
    if (count == 0) throw std::invalid_argument("count must be positive");
    // Block k+1 is the image of block k, and block 0 = (0, 1) is its own prefix.
    std::vector<BigRational> out{BigRational(0), BigRational(1)};
    out.reserve(std::max<std::size_t>(count, 2));
    for (std::size_t i = 1; out.size() < count; ++i) {
        auto [even, odd] = tm_morphism_image(out[i]);
        out.push_back(std::move(even));
        out.push_back(std::move(odd));
    }
    out.resize(count);
    return out;
}

PermutationView tm_morphic_permutation() {
    return PermutationView(
        "tmmorphic",
        [](Index i, Index j) { return relation_from(tm_morphic_term(i) <=> tm_morphic_term(j)); },
        [](Index i) { return ExactReal(tm_morphic_term(i)); });
}

PermutationView parse_permutation_spec(std::string_view spec, std::size_t lookahead,
                                       std::uint64_t default_seed) {
    const std::size_t colon = spec.find(':');
    const std::string_view head = spec.substr(0, colon);
    const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    try {
        if (head == "wordperm") {
            InfiniteWord w = parse_word_spec(rest, default_seed);
            return word_permutation(w, w.alphabet_size(), lookahead);
        }
        if (head == "sturmian") {
            std::string word_spec = "fib";
            std::optional<ExactReal> alpha;
            ExactReal rho;
            ExactReal x(1);
            ExactReal y(QuadraticSurd(0, 1, 2));
            ExactReal a0;
            for (const auto& [k, v] : parse_key_values(rest)) {
                if (k == "w") word_spec = v;
                else if (k == "x") x = parse_exact_real(v);
                else if (k == "y") y = parse_exact_real(v);
                else if (k == "a0") a0 = parse_exact_real(v);
                else if (k == "alpha") alpha = parse_exact_real(v);
                else if (k == "rho") rho = parse_exact_real(v);
                else throw ParseError("unknown sturmian key '" + k + "'");
            }
            InfiniteWord w = alpha ? mechanical_word(*alpha, rho) : parse_word_spec(word_spec, default_seed);
            return sturmian_permutation(std::move(w), std::move(x), std::move(y), std::move(a0));
        }
        if (head == "periodic") {
            std::uint64_t n = 2;
            for (const auto& [k, v] : parse_key_values(rest)) {
                if (k == "n") n = std::stoull(v);
                else throw ParseError("unknown periodic key '" + k + "'");
            }
            return periodic_family(n);
        }
        if (head == "interleave") {
            std::vector<std::int64_t> offsets;
            std::size_t start = 0;
            while (start <= rest.size()) {
                std::size_t end = rest.find(',', start);
                if (end == std::string_view::npos) end = rest.size();
                offsets.push_back(std::stoll(std::string(rest.substr(start, end - start))));
                start = end + 1;
            }
            return interleaved_permutation(std::move(offsets));
        }
        if (head == "monotone" && rest.empty()) return monotone_permutation();
        if (head == "tmmorphic" && rest.empty()) return tm_morphic_permutation();
        if (head == "halving" && rest.empty()) return halving_permutation();
        if (head == "harmonic" && rest.empty()) return harmonic_permutation();
    } catch (const ConstructionError& e) {
        throw ParseError(std::string(e.what()));
    } catch (const ParseError&) {
        throw;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError("invalid permutation spec '" + std::string(spec) + "': " + e.what());
    }
    throw ParseError("unknown permutation spec '" + std::string(spec) + "'; grammar: " +
                     std::string(kPermutationSpecGrammar));
}

}  // namespace permlab
