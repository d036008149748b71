#include "permlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "permlab/analysis.hpp"
#include "permlab/automaton.hpp"
#include "permlab/errors.hpp"
#include "permlab/finewilf.hpp"
#include "permlab/genperm.hpp"
#include "permlab/makarov.hpp"
#include "permlab/pattern.hpp"
#include "permlab/words.hpp"

namespace permlab::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kAsymptoticNote = "p(n+1) = 2^n (n - c + O(n 2^(-n/2))), constant c not computed";

// Thrown by handlers for bad flag combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string format;
    std::size_t lookahead = kDefaultLookahead;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
};

Json pattern_json(const Pattern& pat) {
    Json a = Json::array();
    for (std::uint32_t r : pat.ranks()) a.push_back(r);
    return a;
}

Json optional_pattern_json(const std::optional<Pattern>& pat) { return pat ? pattern_json(*pat) : Json(); }

Json classes_json(const std::vector<std::vector<std::size_t>>& classes) {
    Json a = Json::array();
    for (const auto& c : classes) a.push_back(c);
    return a;
}

std::string classes_text(const std::vector<std::vector<std::size_t>>& classes) {
    std::string s;
    for (const auto& c : classes) {
        if (!s.empty()) s += ' ';
        s += '{';
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(c[k]);
        }
        s += '}';
    }
    return s;
}

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::string format_or(const Settings& s, const std::string& fallback) {
    return s.format.empty() ? fallback : s.format;
}

void reject_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
    if (std::find(allowed.begin(), allowed.end(), format) != allowed.end()) return;
    std::string list;
    for (std::string_view a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw UsageError("output format '" + format + "' is not available here (use " + list + ")");
}

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string xml_escape(std::string_view s) {
    std::string r;
    for (char c : s) {
        switch (c) {
            case '<': r += "&lt;"; break;
            case '>': r += "&gt;"; break;
            case '&': r += "&amp;"; break;
            case '"': r += "&quot;"; break;
            default: r += c;
        }
    }
    return r;
}

// ---- factor / gamma / period ----------------------------------------------

int cmd_factor(const Settings& s, std::ostream& out, const std::string& spec, Index start, std::size_t length) {
    const std::string fmt = format_or(s, "human");
    reject_format(fmt, {"human", "json", "csv"});
    const Pattern pat = factor(parse_permutation_spec(spec, s.lookahead, s.seed), start, length);
    if (fmt == "json") {
        emit_json(out, Json{{"command", "factor"}, {"perm", spec}, {"start", start}, {"length", length},
                            {"pattern", pattern_json(pat)}});
    } else if (fmt == "csv") {
        out << "position,rank\n";
        for (std::size_t i = 0; i < pat.size(); ++i) out << start + i << ',' << pat[i] << '\n';
    } else {
        out << pat.to_string() << '\n';
    }
    return kExitOk;
}

int cmd_gamma(const Settings& s, std::ostream& out, const std::string& spec, Index i, Index j) {
    const std::string fmt = format_or(s, "human");
    reject_format(fmt, {"human", "json", "csv"});
    const Relation r = gamma_of(parse_permutation_spec(spec, s.lookahead, s.seed), i, j);
    const std::string rel(1, to_char(r));
    if (fmt == "json") {
        emit_json(out, Json{{"command", "gamma"}, {"perm", spec}, {"i", i}, {"j", j}, {"relation", rel}});
    } else if (fmt == "csv") {
        out << "i,j,relation\n" << i << ',' << j << ',' << rel << '\n';
    } else {
        out << rel << '\n';
    }
    return kExitOk;
}

int cmd_period(const Settings& s, std::ostream& out, const std::string& spec, std::size_t M, std::size_t t_max) {
    const std::string fmt = format_or(s, "human");
    reject_format(fmt, {"human", "json", "csv"});
    const auto t = detect_period(parse_permutation_spec(spec, s.lookahead, s.seed), M, t_max);
    if (fmt == "json") {
        emit_json(out, Json{{"command", "period"}, {"perm", spec}, {"M", M}, {"t_max", t_max},
                            {"period", t ? Json(*t) : Json()}});
    } else if (fmt == "csv") {
        out << "M,t_max,period\n" << M << ',' << t_max << ',' << (t ? std::to_string(*t) : "") << '\n';
    } else if (t) {
        out << "period " << *t << " (consistent with the first " << M << " positions)\n";
    } else {
        out << "no period <= " << t_max << " within the first " << M << " positions\n";
    }
    return kExitOk;
}

// ---- complexity ------------------------------------------------------------

struct ComplexityArgs {
    std::string perm;
    std::string word;
    std::string kind = "factor";
    std::vector<std::size_t> ns;
    std::string window;
    std::size_t M = kDefaultScanBound;
    std::size_t T = kDefaultMaxSpread;
    bool no_saturation = false;
};

int cmd_complexity(const Settings& s, std::ostream& out, const ComplexityArgs& a) {
    const std::string fmt = format_or(s, "human");
    reject_format(fmt, {"human", "json", "csv"});
    if (a.perm.empty() == a.word.empty()) throw UsageError("complexity needs exactly one of --perm and --word");

    std::optional<PermutationView> perm;
    std::optional<InfiniteWord> word;
    if (!a.perm.empty()) perm = parse_permutation_spec(a.perm, s.lookahead, s.seed);
    else word = parse_word_spec(a.word, s.seed);

    std::optional<Window> window;
    std::vector<std::size_t> ns = a.ns;
    if (a.kind == "window") {
        if (a.window.empty()) throw UsageError("--kind window needs --window, e.g. --window 0,2");
        window = Window::parse(a.window);
        ns = {window->size()};
    } else if (ns.empty()) {
        throw UsageError("--n is required for --kind " + a.kind);
    }

    std::vector<ComplexityReport> reports;
    for (std::size_t n : ns) {
        auto compute = [&](std::size_t M, std::size_t T) -> ComplexityReport {
            if (a.kind == "factor") return perm ? factor_complexity(*perm, n, M) : word_factor_complexity(*word, n, M);
            if (a.kind == "maxpattern") {
                return perm ? max_pattern_complexity(*perm, n, T, M) : word_max_pattern_complexity(*word, n, T, M);
            }
            return perm ? s_complexity(*perm, *window, M) : word_s_complexity(*word, *window, M);
        };
        reports.push_back(a.no_saturation ? compute(a.M, a.T) : with_saturation(compute, a.M, a.T));
    }

    const std::string symbol = a.kind == "factor" ? "p" : a.kind == "maxpattern" ? "p*" : "p_S";
    const auto bound = [](const ComplexityReport& r) { return r.saturated ? "saturated" : "lower"; };
    if (fmt == "json") {
        Json rows = Json::array();
        for (const auto& r : reports) {
            rows.push_back(Json{{"n", r.n}, {"value", r.value}, {"bound", bound(r)}, {"M", r.scan_bound},
                                {"T", r.max_spread}, {"windows_tried", r.windows_tried}});
        }
        Json doc{{"command", "complexity"}, {"kind", a.kind}};
        if (perm) doc["perm"] = a.perm;
        else doc["word"] = a.word;
        if (window) doc["window"] = window->to_string();
        doc["rows"] = std::move(rows);
        emit_json(out, doc);
    } else if (fmt == "csv") {
        out << "n,value,bound,M,T\n";
        for (const auto& r : reports) {
            out << r.n << ',' << r.value << ',' << bound(r) << ',' << r.scan_bound << ',' << r.max_spread << '\n';
        }
    } else {
        for (const auto& r : reports) {
            out << symbol << '(' << r.n << ") " << (r.saturated ? "=" : "≥") << ' ' << r.value << "  (";
            if (window) out << "S=" << window->to_string() << ", ";
            out << "M=" << r.scan_bound;
            if (a.kind == "maxpattern") out << ", T=" << r.max_spread << ", windows=" << r.windows_tried;
            out << ")\n";
        }
    }
    return kExitOk;
}

// ---- finewilf --------------------------------------------------------------

int cmd_finewilf_words(const Settings& s, std::ostream& out, std::size_t p, std::size_t q) {
    const std::string fmt = format_or(s, "human");
    reject_format(fmt, {"human", "json"});
    const PeriodSpec spec(p, q);
    const std::size_t periods[] = {p, q};
    const std::size_t length = p + q - spec.g;
    const auto classes = word_period_classes(length, periods);
    bool residues = classes.size() == spec.g;
    for (std::size_t c = 0; residues && c < classes.size(); ++c) {
        for (std::size_t i : classes[c]) residues = residues && i % spec.g == c;
    }
    std::optional<std::vector<std::vector<std::size_t>>> shorter;
    if (length > 1) shorter = word_period_classes(length - 1, periods);
    const bool tight = !shorter || shorter->size() > spec.g;
    const bool confirmed = residues && tight;

    if (fmt == "json") {
        emit_json(out, Json{{"command", "finewilf words"},
                            {"p", p},
                            {"q", q},
                            {"gcd", spec.g},
                            {"length", length},
                            {"classes", classes_json(classes)},
                            {"shorter_classes", shorter ? classes_json(*shorter) : Json()},
                            {"confirmed", confirmed}});
    } else {
        out << "length " << length << ": " << classes.size() << " class" << (classes.size() == 1 ? "" : "es")
            << (residues ? " (residues mod " + std::to_string(spec.g) + ")" : " (NOT residues mod gcd)") << ": "
            << classes_text(classes) << '\n';
        if (shorter) {
            out << "length " << length - 1 << ": " << shorter->size() << " classes: " << classes_text(*shorter)
                << '\n';
        }
        out << (confirmed ? "confirmed" : "FAILED") << '\n';
    }
    return confirmed ? kExitOk : kExitVerificationFailed;
}

int cmd_finewilf_perms(const Settings& s, std::ostream& out, std::size_t p, std::size_t q,
                       std::optional<std::size_t> n) {
    const std::string fmt = format_or(s, "human");
    reject_format(fmt, {"human", "json"});
    const PeriodSpec spec(p, q);
    if (!n && spec.g == 1) {
        const Theorem2Report r = verify_theorem2(p, q, s.budget);
        if (fmt == "json") {
            emit_json(out, Json{{"command", "finewilf perms"},
                                {"p", p},
                                {"q", q},
                                {"length", r.length},
                                {"periodic_count", r.periodic_count},
                                {"monotone_only", r.confirmed()},
                                {"counterexample", optional_pattern_json(r.counterexample)},
                                {"witness_length", r.witness_length},
                                {"witness", optional_pattern_json(r.witness)}});
        } else if (r.confirmed()) {
            out << "monotone-only at length " << r.length << "; witness at " << r.witness_length << ": "
                << (r.witness ? r.witness->to_string() : "none") << '\n';
        } else {
            out << "counterexample at length " << r.length << ": " << r.counterexample->to_string() << '\n';
        }
        return r.confirmed() ? kExitOk : kExitVerificationFailed;
    }
    const std::size_t length = n.value_or(p + q);
    const Theorem3Report r = verify_theorem3(p, q, length, s.budget);
    if (fmt == "json") {
        emit_json(out, Json{{"command", "finewilf perms"},
                            {"p", p},
                            {"q", q},
                            {"n", r.n},
                            {"gcd", r.g},
                            {"factor_bound", r.factor_bound},
                            {"patterns_checked", r.patterns_checked},
                            {"factors_checked", r.factors_checked},
                            {"confirmed", r.confirmed()},
                            {"counterexample", optional_pattern_json(r.counterexample)},
                            {"offending_factor", optional_pattern_json(r.offending_factor)}});
    } else if (r.confirmed()) {
        out << "all factors of length <= " << r.factor_bound << " of the " << r.patterns_checked << ' ' << p << ','
            << q << "-periodic patterns of length " << r.n << " are " << r.g << "-periodic\n";
    } else {
        out << "counterexample: " << r.counterexample->to_string() << " has factor "
            << r.offending_factor->to_string() << " that is not " << r.g << "-periodic\n";
    }
    return r.confirmed() ? kExitOk : kExitVerificationFailed;
}

int cmd_finewilf_witness(const Settings& s, std::ostream& out, std::size_t p, std::size_t q, std::size_t n) {
    const std::string fmt = format_or(s, "human");
    reject_format(fmt, {"human", "json"});
    const auto w = find_nongcd_witness(p, q, n, s.budget);
    if (fmt == "json") {
        emit_json(out, Json{{"command", "finewilf witness"}, {"p", p}, {"q", q}, {"n", n},
                            {"gcd", PeriodSpec(p, q).g}, {"witness", optional_pattern_json(w)}});
    } else {
        out << (w ? w->to_string() : "none") << '\n';
    }
    return kExitOk;
}

// ---- makarov / squares -----------------------------------------------------

int cmd_makarov_table(const Settings& s, std::ostream& out, std::uint64_t max_n) {
    const std::string fmt = format_or(s, "csv");
    reject_format(fmt, {"human", "json", "csv"});
    const auto rows = complexity_table(max_n);
    bool agree = true;
    for (const auto& r : rows) agree = agree && (!r.oracle || BigInt(*r.oracle) == r.psi);
    if (fmt == "json") {
        Json a = Json::array();
        for (const auto& r : rows) {
            a.push_back(Json{{"t", r.t},
                             {"psi", r.psi.str()},
                             {"oracle", r.oracle ? Json(*r.oracle) : Json()},
                             {"p", r.p_next.str()}});
        }
        emit_json(out, Json{{"command", "makarov table"}, {"max_n", max_n}, {"rows", a},
                            {"asymptotic", kAsymptoticNote}, {"oracle_agrees", agree}});
    } else if (fmt == "csv") {
        out << "t,psi,oracle,p\n";
        for (const auto& r : rows) {
            out << r.t << ',' << r.psi << ',' << (r.oracle ? std::to_string(*r.oracle) : "") << ',' << r.p_next
                << '\n';
        }
    } else {
        for (const auto& r : rows) {
            out << "t=" << r.t << " psi=" << r.psi << " oracle=" << (r.oracle ? std::to_string(*r.oracle) : "-")
                << " p(" << r.t + 1 << ")=" << r.p_next << '\n';
        }
        out << "reference: " << kAsymptoticNote << '\n';
    }
    return agree ? kExitOk : kExitVerificationFailed;
}

int cmd_squares(const Settings& s, std::ostream& out, const std::string& pattern, std::optional<std::size_t> count) {
    const std::string fmt = format_or(s, "human");
    reject_format(fmt, {"human", "json"});
    if (pattern.empty() == !count.has_value()) throw UsageError("squares needs exactly one of --pattern and --count");
    if (count) {
        const std::uint64_t c = count_square_free(*count);
        if (fmt == "json") emit_json(out, Json{{"command", "squares"}, {"n", *count}, {"square_free", c}});
        else out << "square-free permutations of length " << *count << ": " << c << '\n';
        return kExitOk;
    }
    const Pattern pat = Pattern::parse(pattern);
    const bool sq = is_square(pat);
    const bool sf = is_square_free(pat);
    if (fmt == "json") {
        emit_json(out, Json{{"command", "squares"}, {"pattern", pattern_json(pat)}, {"square", sq},
                            {"square_free", sf}});
    } else {
        out << pat.to_string() << ": " << (sq ? "square" : "not a square") << ", "
            << (sf ? "square-free" : "not square-free") << '\n';
    }
    return kExitOk;
}

// ---- automaton -------------------------------------------------------------

PairAutomaton load_automaton(const std::string& file) {
    if (file.empty()) return tm_automaton();
    std::ifstream in(file);
    if (!in) throw Error("cannot read automaton file '" + file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return PairAutomaton::parse(buffer.str());
}

int cmd_automaton_check(const Settings& s, std::ostream& out, const std::string& file, const std::string& spec,
                        Index bound) {
    const std::string fmt = format_or(s, "human");
    reject_format(fmt, {"human", "json"});
    const PairAutomaton aut = load_automaton(file);
    const PermutationView p = parse_permutation_spec(spec, s.lookahead, s.seed);
    const auto mismatches = crosscheck(aut, p, bound);
    if (fmt == "json") {
        Json a = Json::array();
        for (auto [i, j] : mismatches) a.push_back(Json::array({i, j}));
        emit_json(out, Json{{"command", "automaton check"}, {"automaton", file.empty() ? "tm" : file},
                            {"perm", spec}, {"N", bound}, {"mismatches", a}});
    } else if (mismatches.empty()) {
        out << "no mismatches for i < j < " << bound << '\n';
    } else {
        out << mismatches.size() << " mismatching pairs\n";
        for (auto [i, j] : mismatches) {
            out << '(' << i << ',' << j << "): automaton " << static_cast<char>(evaluate(aut, i, j))
                << ", permutation " << to_char(gamma_of(p, i, j)) << '\n';
        }
    }
    return mismatches.empty() ? kExitOk : kExitVerificationFailed;
}

int cmd_automaton_eval(const Settings& s, std::ostream& out, const std::string& file, Index i, Index j) {
    const std::string fmt = format_or(s, "human");
    reject_format(fmt, {"human", "json"});
    const std::string rel(1, static_cast<char>(evaluate(load_automaton(file), i, j)));
    if (fmt == "json") {
        emit_json(out, Json{{"command", "automaton eval"}, {"automaton", file.empty() ? "tm" : file}, {"i", i},
                            {"j", j}, {"relation", rel}});
    } else {
        out << rel << '\n';
    }
    return kExitOk;
}

int cmd_automaton_dump(const Settings& s, std::ostream& out) {
    const std::string fmt = format_or(s, "human");
    reject_format(fmt, {"human", "json"});
    if (fmt == "json") emit_json(out, Json{{"command", "automaton dump-tm"}, {"table", tm_automaton_table()}});
    else out << tm_automaton_table();
    return kExitOk;
}

// ---- plot / word -----------------------------------------------------------

int cmd_plot(const Settings& s, std::ostream& out, const std::string& spec, std::size_t count,
             const std::string& pattern, const std::vector<std::size_t>& witness, const std::string& path) {
    const std::string fmt = format_or(s, "svg");
    reject_format(fmt, {"svg"});
    const int sources = !spec.empty() + !pattern.empty() + !witness.empty();
    if (sources != 1) throw UsageError("plot needs exactly one of --perm, --pattern and --witness");

    std::string svg;
    if (!spec.empty()) {
        if (count == 0 || count > 10000) throw UsageError("--N must be in [1, 10000]");
        svg = plot_svg(parse_permutation_spec(spec, s.lookahead, s.seed), count);
    } else if (!pattern.empty()) {
        const Pattern pat = Pattern::parse(pattern);
        svg = plot_svg(pat.ranks(), pat.to_string());
    } else {
        if (witness.size() != 3) throw UsageError("--witness takes p,q,n");
        const auto w = find_nongcd_witness(witness[0], witness[1], witness[2], s.budget);
        if (!w) throw Error("no witness exists for these periods and length");
        svg = plot_svg(w->ranks(), std::to_string(witness[0]) + "- and " + std::to_string(witness[1]) +
                                       "-periodic, not " + std::to_string(PeriodSpec(witness[0], witness[1]).g) +
                                       "-periodic: " + w->to_string());
    }
    if (path.empty()) {
        out << svg;
    } else {
        std::ofstream file(path);
        if (!file) throw Error("cannot write '" + path + "'");
        file << svg;
    }
    return kExitOk;
}

int cmd_word(const Settings& s, std::ostream& out, const std::string& spec, std::size_t start, std::size_t length) {
    const std::string fmt = format_or(s, "human");
    reject_format(fmt, {"human", "json"});
    const InfiniteWord w = parse_word_spec(spec, s.seed);
    std::string digits;
    Json symbols = Json::array();
    for (std::size_t i = start; i < start + length; ++i) {
        const unsigned c = w.at(i);
        digits += std::to_string(c);
        symbols.push_back(c);
    }
    if (fmt == "json") {
        emit_json(out, Json{{"command", "word"}, {"word", spec}, {"start", start}, {"symbols", symbols}});
    } else {
        out << digits << '\n';
    }
    return kExitOk;
}

std::string help_footer() {
    std::string f;
    f += "Permutation specs: ";
    f += kPermutationSpecGrammar;
    f += "\nWord specs: ";
    f += kWordSpecGrammar;
    f += "\nReals: p, p/q, sqrtD, (a+b sqrtD)/c.";
    f += "\nAutomaton files: 'k=<base>', then 'state <name> out <|>|= [initial]', then "
         "'edge <from> (<d1>,<d2>) <to>'; '#' starts a comment.";
    f += "\nExit status: 0 ok, 1 verification failed, 2 usage or evaluation error.";
    f += "\nPERMLAB_BUDGET overrides the default enumeration budget.";
    return f;
}

}  // namespace

std::string plot_svg(std::span<const std::uint32_t> ranks, std::string_view title) {
    constexpr double size = 480;
    constexpr double margin = 48;
    const double n = static_cast<double>(std::max<std::size_t>(ranks.size(), 1));
    const double cell = (size - 2 * margin) / n;
    const double radius = std::clamp(cell * 0.35, 1.0, 4.0);

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
    s += "<rect width=\"480\" height=\"480\" fill=\"white\"/>\n";
    s += "<text x=\"240\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
         xml_escape(title) + "</text>\n";
    const std::string lo = fixed2(margin);
    const std::string hi = fixed2(size - margin);
    s += "<line x1=\"" + lo + "\" y1=\"" + hi + "\" x2=\"" + hi + "\" y2=\"" + hi + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + lo + "\" y1=\"" + hi + "\" x2=\"" + lo + "\" y2=\"" + lo + "\" stroke=\"black\"/>\n";
    s += "<text x=\"240\" y=\"468\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
         "position i</text>\n";
    s += "<text x=\"16\" y=\"240\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 16 240)\">rank among the first " +
         std::to_string(ranks.size()) + "</text>\n";
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        const double x = margin + (static_cast<double>(i) + 0.5) * cell;
        const double y = size - margin - (static_cast<double>(ranks[i]) - 0.5) * cell;
        s += "<circle cx=\"" + fixed2(x) + "\" cy=\"" + fixed2(y) + "\" r=\"" + fixed2(radius) + "\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

std::string plot_svg(const PermutationView& p, std::size_t count) {
    std::vector<std::uint32_t> ranks = window_ranks(p, 0, count);
    for (auto& r : ranks) ++r;
    return plot_svg(ranks, p.name() + ", first " + std::to_string(count) + " elements");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with infinite permutations", "permlab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer(help_footer());

    Settings settings;
    settings.budget = default_budget();
    app.add_option("--format", settings.format, "Output format (default depends on the command)")
        ->check(CLI::IsMember({"human", "json", "csv", "svg"}));
    app.add_option("--lookahead", settings.lookahead, "Symbols compared before a word comparison gives up")
        ->capture_default_str();
    app.add_option("--seed", settings.seed, "Seed for random word specs without an explicit seed")
        ->capture_default_str();
    app.add_option("--budget", settings.budget, "Backtracking node budget for enumerations")->capture_default_str();

    std::string perm;
    std::string word;
    std::string file;
    std::string pattern;
    std::string out_path;
    Index start = 0;
    Index i = 0;
    Index j = 0;
    std::size_t length = 0;
    std::size_t p = 0;
    std::size_t q = 0;
    std::optional<std::size_t> n_opt;
    std::size_t n = 0;
    std::size_t M = 512;
    std::size_t t_max = 64;
    std::uint64_t max_n = 12;
    Index bound = 512;
    std::size_t plot_n = 40;
    std::vector<std::size_t> witness;
    ComplexityArgs cx;

    auto* factor_cmd = app.add_subcommand("factor", "Pattern of a block of consecutive positions");
    factor_cmd->add_option("--perm", perm, "Permutation spec")->required();
    factor_cmd->add_option("--start", start, "First position (0-based)")->capture_default_str();
    factor_cmd->add_option("--len", length, "Block length")->required()->check(CLI::PositiveNumber);

    auto* gamma_cmd = app.add_subcommand("gamma", "Relation between two positions");
    gamma_cmd->add_option("--perm", perm, "Permutation spec")->required();
    gamma_cmd->add_option("--i", i, "First position")->required();
    gamma_cmd->add_option("--j", j, "Second position")->required();

    auto* complexity_cmd = app.add_subcommand("complexity", "Factor, window or maximal pattern complexity");
    auto* cx_perm = complexity_cmd->add_option("--perm", cx.perm, "Permutation spec");
    auto* cx_word = complexity_cmd->add_option("--word", cx.word, "Word spec");
    cx_perm->excludes(cx_word);
    complexity_cmd->add_option("--kind", cx.kind, "factor, maxpattern or window")
        ->check(CLI::IsMember({"factor", "maxpattern", "window"}))
        ->capture_default_str();
    complexity_cmd->add_option("--n", cx.ns, "Lengths, e.g. --n 1,2,3")->delimiter(',');
    complexity_cmd->add_option("--window", cx.window, "Offsets for --kind window, e.g. 0,2");
    complexity_cmd->add_option("--M", cx.M, "Scan bound: positions 0..M-1 are read")->capture_default_str();
    complexity_cmd->add_option("--T", cx.T, "Largest window spread")->capture_default_str();
    complexity_cmd->add_flag("--no-saturation", cx.no_saturation, "Skip the rerun at doubled M and T");

    auto* period_cmd = app.add_subcommand("period", "Smallest period consistent with a prefix");
    period_cmd->add_option("--perm", perm, "Permutation spec")->required();
    period_cmd->add_option("--M", M, "Scan bound")->capture_default_str();
    period_cmd->add_option("--t-max", t_max, "Largest period tried")->capture_default_str();

    auto* finewilf_cmd = app.add_subcommand("finewilf", "Periodicity of finite words and permutations");
    finewilf_cmd->require_subcommand(1);
    auto* fw_words = finewilf_cmd->add_subcommand("words", "Period classes of word positions");
    fw_words->add_option("--p", p)->required()->check(CLI::PositiveNumber);
    fw_words->add_option("--q", q)->required()->check(CLI::PositiveNumber);
    auto* fw_perms = finewilf_cmd->add_subcommand("perms", "Permutations with two periods");
    fw_perms->add_option("--p", p)->required()->check(CLI::PositiveNumber);
    fw_perms->add_option("--q", q)->required()->check(CLI::PositiveNumber);
    fw_perms->add_option("--n", n_opt, "Length; checks short factors for gcd-periodicity");
    auto* fw_witness = finewilf_cmd->add_subcommand("witness", "Least p,q-periodic pattern that is not gcd-periodic");
    fw_witness->add_option("--p", p)->required()->check(CLI::PositiveNumber);
    fw_witness->add_option("--q", q)->required()->check(CLI::PositiveNumber);
    fw_witness->add_option("--n", n)->required()->check(CLI::PositiveNumber);

    auto* makarov_cmd = app.add_subcommand("makarov", "Counting primitive words and maximal complexity");
    makarov_cmd->require_subcommand(1);
    auto* mk_table = makarov_cmd->add_subcommand("table", "Rows t, psi(t), enumeration count, p(t+1)");
    mk_table->add_option("--max-n", max_n, "Last t")->capture_default_str()->check(CLI::PositiveNumber);

    auto* squares_cmd = app.add_subcommand("squares", "Squares and square-free permutations");
    squares_cmd->add_option("--pattern", pattern, "Pattern to test, e.g. 1324");
    squares_cmd->add_option("--count", n_opt, "Count square-free permutations of this length");

    auto* automaton_cmd = app.add_subcommand("automaton", "Pair automata deciding the order relation");
    automaton_cmd->require_subcommand(1);
    auto* au_check = automaton_cmd->add_subcommand("check", "Compare an automaton with a permutation");
    au_check->add_option("--file", file, "Automaton table (default: built-in Thue-Morse)");
    perm = "wordperm:tm";
    au_check->add_option("--perm", perm, "Permutation spec")->capture_default_str();
    au_check->add_option("--N", bound, "Check all i < j < N")->capture_default_str();
    auto* au_eval = automaton_cmd->add_subcommand("eval", "Output of an automaton on (i, j)");
    au_eval->add_option("--file", file, "Automaton table (default: built-in Thue-Morse)");
    au_eval->add_option("--i", i)->required();
    au_eval->add_option("--j", j)->required();
    auto* au_dump = automaton_cmd->add_subcommand("dump-tm", "Print the built-in Thue-Morse table");

    auto* plot_cmd = app.add_subcommand("plot", "SVG scatter of positions against ranks");
    auto* pl_perm = plot_cmd->add_option("--perm", perm, "Permutation spec");
    plot_cmd->add_option("--N", plot_n, "Number of positions")->capture_default_str();
    plot_cmd->add_option("--pattern", pattern, "Finite pattern");
    plot_cmd->add_option("--witness", witness, "p,q,n of a witness search")->delimiter(',');
    plot_cmd->add_option("--out", out_path, "Write to this file instead of standard output");

    auto* word_cmd = app.add_subcommand("word", "Symbols of a word");
    word_cmd->add_option("--word", word, "Word spec")->required();
    word_cmd->add_option("--start", start, "First position")->capture_default_str();
    word_cmd->add_option("--len", length, "Number of symbols")->required();

    std::vector<const char*> argv{"permlab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*factor_cmd) return cmd_factor(settings, out, perm, start, length);
        if (*gamma_cmd) return cmd_gamma(settings, out, perm, i, j);
        if (*complexity_cmd) return cmd_complexity(settings, out, cx);
        if (*period_cmd) return cmd_period(settings, out, perm, M, t_max);
        if (*fw_words) return cmd_finewilf_words(settings, out, p, q);
        if (*fw_perms) return cmd_finewilf_perms(settings, out, p, q, n_opt);
        if (*fw_witness) return cmd_finewilf_witness(settings, out, p, q, n);
        if (*mk_table) return cmd_makarov_table(settings, out, max_n);
        if (*squares_cmd) return cmd_squares(settings, out, pattern, n_opt);
        if (*au_check) return cmd_automaton_check(settings, out, file, perm, bound);
        if (*au_eval) return cmd_automaton_eval(settings, out, file, i, j);
        if (*au_dump) return cmd_automaton_dump(settings, out);
        if (*plot_cmd) return cmd_plot(settings, out, pl_perm->count() ? perm : "", plot_n, pattern, witness, out_path);
        if (*word_cmd) return cmd_word(settings, out, word, start, length);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "no command given\n";
    return kExitUsage;
}

}  // namespace permlab::cli
