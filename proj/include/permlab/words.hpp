#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/memo.hpp"
#include "permlab/numerics.hpp"

namespace permlab {

using Symbol = std::uint8_t;
using Index = std::uint64_t;

/// Substitution on {0, ..., q-1}; images[s] is the image of symbol s.
class Morphism {
public:
    explicit Morphism(std::vector<std::vector<Symbol>> images);

    // "0->01,1->10" (also accepts the arrow "→").
    static Morphism parse(std::string_view rules);

    unsigned alphabet_size() const { return static_cast<unsigned>(images_.size()); }
    const std::vector<Symbol>& image(Symbol s) const { return images_.at(s); }
    bool prolongable_at(Symbol seed) const;
    std::vector<Symbol> apply(const std::vector<Symbol>& word) const;
    std::string to_string() const;

private:
    std::vector<std::vector<Symbol>> images_;
};

/// Lazily evaluated one-sided infinite word over {0, ..., q-1}.
///
/// Copies share the generator and the prefix memo. Queries are safe from
/// any number of threads; the memo is extended by one writer at a time and
/// readers of the already settled prefix never block.
class InfiniteWord {
public:
    // Appends one or more symbols; may read any symbol already written.
    using Extender = std::function<void(AppendOnlyMemo<Symbol>::Writer&)>;
    using ClosedForm = std::function<Symbol(Index)>;

    static InfiniteWord from_extender(std::string name, unsigned alphabet_size, Extender extend);
    static InfiniteWord from_closed_form(std::string name, unsigned alphabet_size, ClosedForm rule);

    Symbol at(Index i) const;
    // Makes the first `count` symbols available without locking.
    void ensure(Index count) const;
    std::vector<Symbol> prefix(std::size_t count) const;

    unsigned alphabet_size() const;
    const std::string& name() const;

private:
    struct Impl;
    explicit InfiniteWord(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<Impl> impl_;
};

inline Symbol symbol_at(const InfiniteWord& w, Index i) { return w.at(i); }

/// Fixed point of `m` starting with `seed`. Throws ConstructionError unless
/// the image of the seed starts with the seed and has length at least 2.
InfiniteWord morphic_word(const Morphism& m, Symbol seed, std::string name = {});

/// Binary word whose n-th symbol is floor((n+1)a + r) - floor(n a + r), 0 <= a < 1.
InfiniteWord mechanical_word(const ExactReal& alpha, const ExactReal& rho);

/// u v v v ...; `v` must be non-empty.
InfiniteWord ultimately_periodic_word(std::vector<Symbol> u, std::vector<Symbol> v,
                                      unsigned alphabet_size = 2);

InfiniteWord constant_word(Symbol s = 0, unsigned alphabet_size = 2);

/// Uniform i.i.d. symbols from a mt19937_64 stream seeded with `seed`.
InfiniteWord random_word(std::uint64_t seed, unsigned alphabet_size = 2);

InfiniteWord thue_morse_word();
InfiniteWord fibonacci_word();
InfiniteWord period_doubling_word();

/// Word spec grammar used by the CLI:
///   tm | pd | fib | const[:s=<sym>]
///   mech:alpha=<real>,rho=<real>
///   morphic:0->01,1->10;seed=0
///   ultper:u=<digits>,v=<digits>[,q=<q>]   (an optional leading "uvvv...:" is ignored)
///   random:seed=<n>[,q=<q>]
InfiniteWord parse_word_spec(std::string_view spec, std::uint64_t default_seed = 0);

inline constexpr std::string_view kWordSpecGrammar =
    "tm | pd | fib | const[:s=S] | mech:alpha=A,rho=R | morphic:0->01,1->10;seed=0 | "
    "ultper:u=DIGITS,v=DIGITS | random:seed=N[,q=Q]";

// Shared helper for "k=v,k=v" lists; throws ParseError on malformed items.
std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view text,
                                                                  char separator = ',');

}  // namespace permlab
