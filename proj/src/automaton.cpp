#include "permlab/automaton.hpp"

#include <algorithm>
#include <sstream>

namespace permlab {

namespace detail {
extern const std::string_view kThueMorseAutomatonTable;
}

namespace {

std::optional<Output> parse_output(std::string_view token) {
    if (token == "<") return Output::less;
    if (token == ">") return Output::greater;
    if (token == "=") return Output::equal;
    return std::nullopt;
}

std::vector<unsigned> digits_msd_first(Index value, unsigned base) {
    std::vector<unsigned> out;
    while (value != 0) {
        out.push_back(static_cast<unsigned>(value % base));
        value /= base;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

PairAutomaton::PairAutomaton(unsigned base, std::vector<State> states, std::size_t initial)
    : base_(base), states_(std::move(states)), initial_(initial) {
    if (base_ < 2) throw MalformedAutomaton("automaton base must be at least 2");
    if (initial_ >= states_.size()) throw MalformedAutomaton("initial state out of range");
}

void PairAutomaton::add_edge(std::size_t from, unsigned d1, unsigned d2, std::size_t to) {
    if (from >= states_.size() || to >= states_.size()) throw MalformedAutomaton("edge endpoint out of range");
    if (d1 >= base_ || d2 >= base_) throw MalformedAutomaton("edge digit outside the base");
    const auto [it, inserted] = edges_.emplace(std::pair{from, d1 * base_ + d2}, to);
    if (!inserted && it->second != to) {
        throw MalformedAutomaton("conflicting edges from " + states_[from].name);
    }
}

std::optional<std::size_t> PairAutomaton::next(std::size_t state, unsigned d1, unsigned d2) const {
    const auto it = edges_.find({state, d1 * base_ + d2});
    if (it == edges_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> PairAutomaton::find_state(std::string_view name) const {
    for (std::size_t s = 0; s < states_.size(); ++s) {
        if (states_[s].name == name) return s;
    }
    return std::nullopt;
}

PairAutomaton PairAutomaton::parse(std::string_view text) {
    unsigned base = 0;
    std::vector<State> states;
    std::optional<std::size_t> initial;
    struct PendingEdge {
        std::string from, to;
        unsigned d1, d2;
        std::size_t line;
    };
    std::vector<PendingEdge> pending;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    const auto fail = [&](const std::string& what) {
        throw MalformedAutomaton("line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string head;
        if (!(tokens >> head)) continue;
        if (head.rfind("k=", 0) == 0) {
            try {
                base = static_cast<unsigned>(std::stoul(head.substr(2)));
            } catch (const std::exception&) {
                fail("bad base");
            }
        } else if (head == "state") {
            std::string name, out_kw, out, flag;
            if (!(tokens >> name >> out_kw >> out) || out_kw != "out") fail("expected: state <name> out <rel>");
            const auto output = parse_output(out);
            if (!output) fail("unknown output '" + out + "'");
            if (tokens >> flag) {
                if (flag != "initial") fail("unexpected token '" + flag + "'");
                if (initial) fail("second initial state");
                initial = states.size();
            }
            for (const State& s : states) {
                if (s.name == name) fail("duplicate state '" + name + "'");
            }
            states.push_back({name, *output});
        } else if (head == "edge") {
            std::string from, digits, to;
            if (!(tokens >> from >> digits >> to)) fail("expected: edge <from> (<d1>,<d2>) <to>");
            unsigned d1 = 0;
            unsigned d2 = 0;
            char open = 0, comma = 0, close = 0;
            std::istringstream pair(digits);
            if (!(pair >> open >> d1 >> comma >> d2 >> close) || open != '(' || comma != ',' || close != ')') {
                fail("bad digit pair '" + digits + "'");
            }
            pending.push_back({from, to, d1, d2, line_no});
        } else {
            fail("unknown directive '" + head + "'");
        }
    }
    if (base == 0) throw MalformedAutomaton("missing k=<base> header");
    if (!initial) throw MalformedAutomaton("no initial state");

    PairAutomaton aut(base, std::move(states), *initial);
    for (const PendingEdge& e : pending) {
        line_no = e.line;
        const auto from = aut.find_state(e.from);
        const auto to = aut.find_state(e.to);
        if (!from || !to) fail("edge mentions an undeclared state");
        aut.add_edge(*from, e.d1, e.d2, *to);
    }
    return aut;
}

std::string PairAutomaton::serialize() const {
    std::string out = "k=" + std::to_string(base_) + "\n";
    for (std::size_t s = 0; s < states_.size(); ++s) {
        out += "state " + states_[s].name + " out " + static_cast<char>(states_[s].output);
        if (s == initial_) out += " initial";
        out += "\n";
    }
    for (const auto& [key, to] : edges_) {
        const auto& [from, digits] = key;
        out += "edge " + states_[from].name + " (" + std::to_string(digits / base_) + "," +
               std::to_string(digits % base_) + ") " + states_[to].name + "\n";
    }
    return out;
}

Output evaluate(const PairAutomaton& aut, Index i, Index j) {
    std::vector<unsigned> a = digits_msd_first(i, aut.base());
    std::vector<unsigned> b = digits_msd_first(j, aut.base());
    const std::size_t length = std::max(a.size(), b.size());
    a.insert(a.begin(), length - a.size(), 0);
    b.insert(b.begin(), length - b.size(), 0);
    std::size_t state = aut.initial();
    for (std::size_t k = 0; k < length; ++k) {
        const auto next = aut.next(state, a[k], b[k]);
        if (!next) {
            throw MalformedAutomaton("no transition from " + aut.states()[state].name + " on (" +
                                     std::to_string(a[k]) + "," + std::to_string(b[k]) + ")");
        }
        state = *next;
    }
    return aut.states()[state].output;
}

std::string_view tm_automaton_table() { return detail::kThueMorseAutomatonTable; }

PairAutomaton tm_automaton() {
    static const PairAutomaton aut = PairAutomaton::parse(detail::kThueMorseAutomatonTable);
    return aut;
}

std::vector<std::pair<Index, Index>> crosscheck(const PairAutomaton& aut, const PermutationView& p, Index bound) {
    std::vector<std::pair<Index, Index>> mismatches;
    for (Index j = 1; j < bound; ++j) {
        for (Index i = 0; i < j; ++i) {
            const Output out = evaluate(aut, i, j);
            const Relation expected = p.gamma(i, j);
            if (static_cast<char>(out) != to_char(expected)) mismatches.emplace_back(i, j);
        }
    }
    std::sort(mismatches.begin(), mismatches.end());
    return mismatches;
}

PermutationView automaton_permutation(PairAutomaton aut) {
    return PermutationView("automaton", [aut = std::move(aut)](Index i, Index j) {
        switch (evaluate(aut, i, j)) {
            case Output::less:
                return Relation::less;
            case Output::greater:
                return Relation::greater;
            case Output::equal:
                break;
        }
        throw MalformedAutomaton("automaton outputs '=' on the off-diagonal pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    });
}

}  // namespace permlab
