#include "permlab/words.hpp"

#include <random>

namespace permlab {

std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view text,
                                                                  char separator) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(separator, start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view item = text.substr(start, end - start);
        if (!item.empty()) {
            const std::size_t eq = item.find('=');
            if (eq == std::string_view::npos) {
                throw ParseError("expected key=value, got '" + std::string(item) + "'");
            }
            out.emplace_back(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
        }
        start = end + 1;
    }
    return out;
}

namespace {

std::vector<Symbol> parse_digits(std::string_view text) {
    std::vector<Symbol> out;
    out.reserve(text.size());
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw ParseError("expected digit symbols, got '" + std::string(text) + "'");
        out.push_back(static_cast<Symbol>(ch - '0'));
    }
    return out;
}

unsigned parse_unsigned(std::string_view text, std::string_view what) {
    try {
        std::size_t used = 0;
        const unsigned long value = std::stoul(std::string(text), &used);
        if (used != text.size()) throw std::invalid_argument("trailing");
        return static_cast<unsigned>(value);
    } catch (const std::exception&) {
        throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
}

}  // namespace

// --- Morphism --------------------------------------------------------------

Morphism::Morphism(std::vector<std::vector<Symbol>> images) : images_(std::move(images)) {
    if (images_.empty()) throw ConstructionError("morphism needs at least one rule");
    if (images_.size() > 10) throw ConstructionError("alphabets larger than 10 are not supported");
    for (const auto& img : images_) {
        if (img.empty()) throw ConstructionError("morphism images must be non-empty");
        for (Symbol s : img) {
            if (s >= images_.size()) {
                throw ConstructionError("image symbol " + std::to_string(s) + " outside the alphabet");
            }
        }
    }
}

Morphism Morphism::parse(std::string_view rules) {
    std::vector<std::vector<Symbol>> images;
    std::vector<bool> seen;
    std::size_t start = 0;
    while (start < rules.size()) {
        std::size_t end = rules.find(',', start);
        if (end == std::string_view::npos) end = rules.size();
        std::string_view rule = rules.substr(start, end - start);
        std::size_t arrow_len = 2;
        std::size_t arrow = rule.find("->");
        if (arrow == std::string_view::npos) {
            arrow = rule.find("→");
            arrow_len = std::string_view("→").size();
        }
        if (arrow == std::string_view::npos) throw ParseError("morphism rule '" + std::string(rule) + "' lacks an arrow");
        const auto lhs = parse_digits(rule.substr(0, arrow));
        if (lhs.size() != 1) throw ParseError("morphism rule '" + std::string(rule) + "' must map one symbol");
        const Symbol s = lhs.front();
        if (images.size() <= s) {
            images.resize(s + 1);
            seen.resize(s + 1, false);
        }
        if (seen[s]) throw ParseError("duplicate rule for symbol " + std::to_string(s));
        seen[s] = true;
        images[s] = parse_digits(rule.substr(arrow + arrow_len));
        start = end + 1;
    }
    for (std::size_t s = 0; s < seen.size(); ++s) {
        if (!seen[s]) throw ParseError("missing rule for symbol " + std::to_string(s));
    }
    try {
        return Morphism(std::move(images));
    } catch (const ConstructionError& e) {
        throw ParseError(e.what());
    }
}

bool Morphism::prolongable_at(Symbol seed) const {
    if (seed >= images_.size()) return false;
    const auto& img = images_[seed];
    return img.size() >= 2 && img.front() == seed;
}

std::vector<Symbol> Morphism::apply(const std::vector<Symbol>& word) const {
    std::vector<Symbol> out;
    for (Symbol s : word) {
        const auto& img = images_.at(s);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

std::string Morphism::to_string() const {
    std::string out;
    for (std::size_t s = 0; s < images_.size(); ++s) {
        if (s) out += ',';
        out += std::to_string(s) + "->";
        for (Symbol x : images_[s]) out += static_cast<char>('0' + x);
    }
    return out;
}

// --- InfiniteWord ----------------------------------------------------------

struct InfiniteWord::Impl {
    std::string name;
    unsigned alphabet_size = 2;
    Extender extend;
    ClosedForm closed;
    AppendOnlyMemo<Symbol> memo;
};

InfiniteWord InfiniteWord::from_extender(std::string name, unsigned alphabet_size, Extender extend) {
    auto impl = std::make_shared<Impl>();
    impl->name = std::move(name);
    impl->alphabet_size = alphabet_size;
    impl->extend = std::move(extend);
    return InfiniteWord(std::move(impl));
}

InfiniteWord InfiniteWord::from_closed_form(std::string name, unsigned alphabet_size, ClosedForm rule) {
    auto impl = std::make_shared<Impl>();
    impl->name = std::move(name);
    impl->alphabet_size = alphabet_size;
    impl->closed = std::move(rule);
    return InfiniteWord(std::move(impl));
}

void InfiniteWord::ensure(Index count) const {
    if (impl_->closed) return;
    impl_->memo.ensure(count, impl_->extend);
}

Symbol InfiniteWord::at(Index i) const {
    if (impl_->closed) return impl_->closed(i);
    if (i >= impl_->memo.size()) ensure(i + 1);
    return impl_->memo[i];
}

std::vector<Symbol> InfiniteWord::prefix(std::size_t count) const {
    ensure(count);
    std::vector<Symbol> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = at(i);
    return out;
}

unsigned InfiniteWord::alphabet_size() const { return impl_->alphabet_size; }

const std::string& InfiniteWord::name() const { return impl_->name; }

// --- generators ------------------------------------------------------------

InfiniteWord morphic_word(const Morphism& m, Symbol seed, std::string name) {
    if (!m.prolongable_at(seed)) {
        throw ConstructionError("morphism " + m.to_string() + " is not prolongable at " +
                                std::to_string(seed));
    }
    if (name.empty()) name = "morphic:" + m.to_string() + ";seed=" + std::to_string(seed);
    // Invariant: the memo equals m(memo[0..next)), a prefix of the fixed point.
    auto extend = [m, seed, next = Index{0}](AppendOnlyMemo<Symbol>::Writer& out) mutable {
        const Symbol s = (next == 0) ? seed : out[next];
        for (Symbol x : m.image(s)) out.push_back(x);
        ++next;
    };
    return InfiniteWord::from_extender(std::move(name), m.alphabet_size(), std::move(extend));
}

InfiniteWord mechanical_word(const ExactReal& alpha, const ExactReal& rho) {
    if (alpha.sign() < 0 || compare(alpha, ExactReal(1)) != std::strong_ordering::less) {
        throw ConstructionError("mechanical slope must lie in [0, 1), got " + alpha.to_string());
    }
    std::string name = "mech:alpha=" + alpha.to_string() + ",rho=" + rho.to_string();
    auto extend = [alpha, rho, n = Index{0}, previous = rho.floor()](
                      AppendOnlyMemo<Symbol>::Writer& out) mutable {
        const ExactReal next_point = ExactReal(static_cast<long long>(n + 1)) * alpha + rho;
        BigInt current = next_point.floor();
        out.push_back(static_cast<Symbol>(current - previous));
        previous = std::move(current);
        ++n;
    };
    return InfiniteWord::from_extender(std::move(name), 2, std::move(extend));
}

InfiniteWord ultimately_periodic_word(std::vector<Symbol> u, std::vector<Symbol> v,
                                      unsigned alphabet_size) {
    if (v.empty()) throw ConstructionError("periodic part must be non-empty");
    std::string name = "ultper:u=";
    for (Symbol s : u) name += static_cast<char>('0' + s);
    name += ",v=";
    for (Symbol s : v) name += static_cast<char>('0' + s);
    for (const auto* part : {&u, &v}) {
        for (Symbol s : *part) {
            if (s >= alphabet_size) throw ConstructionError("symbol outside the alphabet");
        }
    }
    auto rule = [u = std::move(u), v = std::move(v)](Index i) -> Symbol {
        if (i < u.size()) return u[i];
        return v[(i - u.size()) % v.size()];
    };
    return InfiniteWord::from_closed_form(std::move(name), alphabet_size, std::move(rule));
}

InfiniteWord constant_word(Symbol s, unsigned alphabet_size) {
    return ultimately_periodic_word({}, {s}, alphabet_size);
}

InfiniteWord random_word(std::uint64_t seed, unsigned alphabet_size) {
    if (alphabet_size < 1 || alphabet_size > 10) throw ConstructionError("alphabet size must be in [1, 10]");
    auto extend = [engine = std::mt19937_64(seed), alphabet_size](AppendOnlyMemo<Symbol>::Writer& out) mutable {
        out.push_back(static_cast<Symbol>(engine() % alphabet_size));
    };
    return InfiniteWord::from_extender("random:seed=" + std::to_string(seed) + ",q=" +
                                           std::to_string(alphabet_size),
                                       alphabet_size, std::move(extend));
}

InfiniteWord thue_morse_word() { return morphic_word(Morphism({{0, 1}, {1, 0}}), 0, "tm"); }

InfiniteWord fibonacci_word() { return morphic_word(Morphism({{0, 1}, {0}}), 0, "fib"); }

InfiniteWord period_doubling_word() { return morphic_word(Morphism({{0, 1}, {0, 0}}), 0, "pd"); }

InfiniteWord parse_word_spec(std::string_view spec, std::uint64_t default_seed) {
    const std::size_t colon = spec.find(':');
    const std::string_view head = spec.substr(0, colon);
    const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

    if (head == "tm") return thue_morse_word();
    if (head == "pd") return period_doubling_word();
    if (head == "fib") return fibonacci_word();
    if (head == "const") {
        Symbol s = 0;
        for (const auto& [k, v] : parse_key_values(rest)) {
            if (k == "s") s = static_cast<Symbol>(parse_unsigned(v, "symbol"));
            else throw ParseError("unknown const key '" + k + "'");
        }
        return constant_word(s, std::max<unsigned>(2, s + 1));
    }
    if (head == "mech") {
        ExactReal alpha;
        ExactReal rho;
        bool have_alpha = false;
        for (const auto& [k, v] : parse_key_values(rest)) {
            if (k == "alpha") {
                alpha = parse_exact_real(v);
                have_alpha = true;
            } else if (k == "rho") {
                rho = parse_exact_real(v);
            } else {
                throw ParseError("unknown mech key '" + k + "'");
            }
        }
        if (!have_alpha) throw ParseError("mech spec needs alpha=");
        try {
            return mechanical_word(alpha, rho);
        } catch (const ConstructionError& e) {
            throw ParseError(e.what());
        }
    }
    if (head == "morphic") {
        const std::size_t semi = rest.find(';');
        const Morphism m = Morphism::parse(rest.substr(0, semi));
        Symbol seed = 0;
        if (semi != std::string_view::npos) {
            for (const auto& [k, v] : parse_key_values(rest.substr(semi + 1))) {
                if (k == "seed") seed = static_cast<Symbol>(parse_unsigned(v, "seed"));
                else throw ParseError("unknown morphic key '" + k + "'");
            }
        }
        return morphic_word(m, seed);
    }
    if (head == "ultper") {
        std::string_view body = rest;
        // Tolerate a leading descriptive token such as "uvvv...:".
        if (const std::size_t c = body.find(':'); c != std::string_view::npos &&
                                                   body.substr(0, c).find('=') == std::string_view::npos) {
            body = body.substr(c + 1);
        }
        std::vector<Symbol> u;
        std::vector<Symbol> v;
        unsigned q = 0;
        for (const auto& [k, val] : parse_key_values(body)) {
            if (k == "u") u = parse_digits(val);
            else if (k == "v") v = parse_digits(val);
            else if (k == "q") q = parse_unsigned(val, "alphabet size");
            else throw ParseError("unknown ultper key '" + k + "'");
        }
        if (v.empty()) throw ParseError("ultper spec needs a non-empty v=");
        if (q == 0) {
            q = 2;
            for (Symbol s : u) q = std::max<unsigned>(q, s + 1u);
            for (Symbol s : v) q = std::max<unsigned>(q, s + 1u);
        }
        return ultimately_periodic_word(std::move(u), std::move(v), q);
    }
    if (head == "random") {
        std::uint64_t seed = default_seed;
        unsigned q = 2;
        for (const auto& [k, v] : parse_key_values(rest)) {
            if (k == "seed") seed = parse_unsigned(v, "seed");
            else if (k == "q") q = parse_unsigned(v, "alphabet size");
            else throw ParseError("unknown random key '" + k + "'");
        }
        return random_word(seed, q);
    }
    throw ParseError("unknown word spec '" + std::string(spec) + "'; grammar: " + std::string(kWordSpecGrammar));
}

}  // namespace permlab
