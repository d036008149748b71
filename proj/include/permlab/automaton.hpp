#pragma once

// Comparison automata: DFAs that read the base-k digits of a pair (i, j),
// most significant first and zero-padded to equal length, and output the
// order relation between the i-th and j-th elements of a permutation.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permlab/permutation_view.hpp"

namespace permlab {

enum class Output : char { less = '<', equal = '=', greater = '>' };

class PairAutomaton {
public:
    struct State {
        std::string name;
        Output output;
    };

    PairAutomaton(unsigned base, std::vector<State> states, std::size_t initial);

    void add_edge(std::size_t from, unsigned d1, unsigned d2, std::size_t to);

    unsigned base() const { return base_; }
    std::size_t initial() const { return initial_; }
    const std::vector<State>& states() const { return states_; }
    std::optional<std::size_t> next(std::size_t state, unsigned d1, unsigned d2) const;
    std::optional<std::size_t> find_state(std::string_view name) const;

    /// Parses the plain-text table format:
    ///   k=<base>
    ///   state <name> out <|>|= [initial]
    ///   edge <from> (<d1>,<d2>) <to>
    /// Text after '#' is a comment.
    static PairAutomaton parse(std::string_view text);
    std::string serialize() const;

private:
    unsigned base_;
    std::vector<State> states_;
    std::size_t initial_;
    std::map<std::pair<std::size_t, unsigned>, std::size_t> edges_;
};

/// Throws MalformedAutomaton when a needed transition is missing.
Output evaluate(const PairAutomaton& aut, Index i, Index j);

/// The 8-state comparator of the Thue-Morse permutation.
PairAutomaton tm_automaton();

/// Shipped text table of tm_automaton(), with a provenance note per edge.
std::string_view tm_automaton_table();

/// Every pair i < j < bound on which evaluate disagrees with gamma_of.
std::vector<std::pair<Index, Index>> crosscheck(const PairAutomaton& aut, const PermutationView& p, Index bound);

/// The permutation whose comparator is the automaton itself.
PermutationView automaton_permutation(PairAutomaton aut);

}  // namespace permlab
