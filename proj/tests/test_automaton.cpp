#include <doctest.h>

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <string>

#include "permlab/automaton.hpp"
#include "permlab/errors.hpp"
#include "permlab/genperm.hpp"

using namespace permlab;

namespace {

constexpr std::string_view kNumericOrder = R"(k=2
state eq out = initial
state lt out <
state gt out >
edge eq (0,0) eq
edge eq (1,1) eq
edge eq (0,1) lt
edge eq (1,0) gt
edge lt (0,0) lt
edge lt (0,1) lt
edge lt (1,0) lt
edge lt (1,1) lt
edge gt (0,0) gt
edge gt (0,1) gt
edge gt (1,0) gt
edge gt (1,1) gt
)";

constexpr std::string_view kAlwaysLess = R"(k=2
state s out < initial
edge s (0,0) s
edge s (0,1) s
edge s (1,0) s
edge s (1,1) s
)";

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Suffix comparison of the Thue-Morse word using the popcount formula.
char tm_suffix_order(Index i, Index j) {
    for (Index k = 0; k < 4096; ++k) {
        const int a = std::popcount(i + k) & 1;
        const int b = std::popcount(j + k) & 1;
        if (a != b) return a < b ? '<' : '>';
    }
    return '?';
}

// Evaluation after feeding `extra` additional (0,0) pairs first.
Output evaluate_padded(const PairAutomaton& aut, Index i, Index j, std::size_t extra) {
    std::size_t state = aut.initial();
    for (std::size_t k = 0; k < extra; ++k) state = *aut.next(state, 0, 0);
    std::size_t len = 0;
    for (Index v = std::max(i, j); v != 0; v /= aut.base()) ++len;
    for (std::size_t k = len; k-- > 0;) {
        Index p = 1;
        for (std::size_t e = 0; e < k; ++e) p *= aut.base();
        state = *aut.next(state, static_cast<unsigned>(i / p % aut.base()), static_cast<unsigned>(j / p % aut.base()));
    }
    return aut.states()[state].output;
}

}  // namespace

TEST_CASE("Thue-Morse automaton on the reference pairs") {
    const PairAutomaton aut = tm_automaton();
    CHECK(evaluate(aut, 0, 1) == Output::less);
    CHECK(evaluate(aut, 0, 2) == Output::less);
    CHECK(evaluate(aut, 1, 2) == Output::greater);
    CHECK(evaluate(aut, 0, 3) == Output::greater);
    CHECK(evaluate(aut, 0, 0) == Output::equal);
    CHECK(evaluate(aut, 5, 5) == Output::equal);
    CHECK(evaluate(aut, 2, 1) == Output::less);
    CHECK(aut.states().size() == 8);
}

TEST_CASE("Thue-Morse automaton against the suffix oracles") {
    const PairAutomaton aut = tm_automaton();
    CHECK(crosscheck(aut, word_permutation(thue_morse_word(), 2), 512).empty());
    for (Index i = 0; i < 256; ++i) {
        for (Index j = 0; j < 256; ++j) {
            if (i != j) REQUIRE(static_cast<char>(evaluate(aut, i, j)) == tm_suffix_order(i, j));
        }
    }
}

TEST_CASE("antisymmetry and zero padding") {
    const PairAutomaton aut = tm_automaton();
    REQUIRE(aut.next(aut.initial(), 0, 0) == aut.initial());
    for (Index i = 0; i < 512; ++i) {
        REQUIRE(evaluate(aut, i, i) == Output::equal);
        for (Index j = i + 1; j < 512; ++j) {
            const Output a = evaluate(aut, i, j);
            const Output b = evaluate(aut, j, i);
            REQUIRE(a != Output::equal);
            REQUIRE(b == (a == Output::less ? Output::greater : Output::less));
        }
    }
    for (Index i = 0; i < 64; ++i) {
        for (Index j = 0; j < 64; ++j) {
            for (std::size_t extra : {1, 2, 5}) REQUIRE(evaluate_padded(aut, i, j, extra) == evaluate(aut, i, j));
        }
    }
}

TEST_CASE("crosscheck finds disagreements") {
    const auto mismatches =
        crosscheck(PairAutomaton::parse(kAlwaysLess), word_permutation(thue_morse_word(), 2), 8);
    CHECK_FALSE(mismatches.empty());
    CHECK(std::find(mismatches.begin(), mismatches.end(), std::pair<Index, Index>(0, 3)) != mismatches.end());

    const PairAutomaton numeric = PairAutomaton::parse(kNumericOrder);
    CHECK(crosscheck(numeric, monotone_permutation(), 200).empty());
    CHECK(crosscheck(numeric, automaton_permutation(numeric), 100).empty());
    CHECK(crosscheck(tm_automaton(), automaton_permutation(tm_automaton()), 100).empty());
    CHECK(factor(automaton_permutation(tm_automaton()), 0, 4).to_string() == "2431");
}

TEST_CASE("the shipped table") {
    const std::string text = read_file(std::string(PERMLAB_SOURCE_DIR) + "/data/thue_morse.aut");
    REQUIRE_FALSE(text.empty());
    CHECK(text == tm_automaton_table());
    const PairAutomaton parsed = PairAutomaton::parse(text);
    CHECK(parsed.serialize() == tm_automaton().serialize());

    std::istringstream lines(text);
    std::string line;
    std::size_t edges = 0;
    std::size_t from_oracle = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("edge", 0) != 0) continue;
        ++edges;
        const bool figure = line.find("# figure") != std::string::npos;
        const bool oracle = line.find("# oracle") != std::string::npos;
        CHECK(figure != oracle);
        from_oracle += oracle ? 1 : 0;
    }
    CHECK(edges == 32);
    CHECK(from_oracle > 0);
    for (const auto& s : parsed.states()) {
        for (unsigned a = 0; a < 2; ++a) {
            for (unsigned b = 0; b < 2; ++b) CHECK(parsed.next(*parsed.find_state(s.name), a, b).has_value());
        }
    }
}

TEST_CASE("serialization round trip") {
    const PairAutomaton numeric = PairAutomaton::parse(kNumericOrder);
    const PairAutomaton again = PairAutomaton::parse(numeric.serialize());
    CHECK(again.serialize() == numeric.serialize());
    for (Index i = 0; i < 40; ++i) {
        for (Index j = 0; j < 40; ++j) CHECK(evaluate(again, i, j) == evaluate(numeric, i, j));
    }
}

TEST_CASE("malformed automata") {
    CHECK_THROWS_AS(PairAutomaton::parse("state a out < initial\n"), MalformedAutomaton);
    CHECK_THROWS_AS(PairAutomaton::parse("k=2\nstate a out <\n"), MalformedAutomaton);
    CHECK_THROWS_AS(PairAutomaton::parse("k=2\nstate a out ? initial\n"), MalformedAutomaton);
    CHECK_THROWS_AS(PairAutomaton::parse("k=2\nstate a out < initial\nedge a (0,2) a\n"), MalformedAutomaton);
    CHECK_THROWS_AS(PairAutomaton::parse("k=2\nstate a out < initial\nedge a (0,0) b\n"), MalformedAutomaton);
    CHECK_THROWS_AS(PairAutomaton::parse("k=2\nstate a out < initial\nstate b out >\n"
                                         "edge a (0,0) a\nedge a (0,0) b\n"),
                    MalformedAutomaton);
    CHECK_THROWS_AS(PairAutomaton::parse("k=2\nfoo\n"), MalformedAutomaton);

    const PairAutomaton partial = PairAutomaton::parse("k=2\nstate a out < initial\nedge a (0,0) a\n");
    CHECK(evaluate(partial, 0, 0) == Output::less);
    CHECK_THROWS_AS(evaluate(partial, 1, 0), MalformedAutomaton);
    const PairAutomaton all_equal = PairAutomaton::parse(
        "k=2\nstate e out = initial\nedge e (0,0) e\nedge e (0,1) e\nedge e (1,0) e\nedge e (1,1) e\n");
    CHECK_THROWS_AS(factor(automaton_permutation(all_equal), 0, 3), MalformedAutomaton);
}
