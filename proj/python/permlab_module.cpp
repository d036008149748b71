#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <sstream>

#include "permlab/analysis.hpp"
#include "permlab/automaton.hpp"
#include "permlab/cli.hpp"
#include "permlab/errors.hpp"
#include "permlab/finewilf.hpp"
#include "permlab/genperm.hpp"
#include "permlab/makarov.hpp"

namespace py = pybind11;
using namespace permlab;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

std::vector<std::uint32_t> ranks_of(const Pattern& p) { return {p.ranks().begin(), p.ranks().end()}; }

py::dict report_dict(const ComplexityReport& r) {
    py::dict d;
    d["n"] = r.n;
    d["value"] = r.value;
    d["scan_bound"] = r.scan_bound;
    d["windows_tried"] = r.windows_tried;
    d["max_spread"] = r.max_spread;
    d["saturated"] = r.saturated;
    return d;
}

py::object optional_pattern(const std::optional<Pattern>& p) {
    return p ? py::cast(*p) : py::object(py::none());
}

}  // namespace

PYBIND11_MODULE(_permlab, m) {
    m.doc() = "Infinite permutations, their factors and complexities, with exact arithmetic.";
    py::register_exception<Error>(m, "Error");

    py::class_<Pattern>(m, "Pattern")
        .def(py::init([](const std::vector<std::uint32_t>& ranks) { return Pattern(ranks); }))
        .def_static("parse", &Pattern::parse)
        .def_property_readonly("ranks", &ranks_of)
        .def("factor", &Pattern::factor)
        .def("is_monotone", &Pattern::is_monotone)
        .def("is_periodic", [](const Pattern& p, std::size_t t) { return is_t_periodic(p, t); })
        .def("__len__", &Pattern::size)
        .def("__str__", &Pattern::to_string)
        .def("__repr__", [](const Pattern& p) { return "Pattern('" + p.to_string() + "')"; })
        .def("__eq__", [](const Pattern& a, const Pattern& b) { return a == b; })
        .def("__hash__", [](const Pattern& p) { return py::hash(py::str(p.to_string())); });

    py::class_<PermutationView>(m, "Permutation")
        .def(py::init([](const std::string& spec, std::size_t lookahead, std::uint64_t seed) {
                 return parse_permutation_spec(spec, lookahead, seed);
             }),
             py::arg("spec"), py::arg("lookahead") = kDefaultLookahead, py::arg("seed") = 0)
        .def_property_readonly("name", &PermutationView::name)
        .def("gamma", [](const PermutationView& p, Index i, Index j) { return std::string(1, to_char(p.gamma(i, j))); })
        .def("factor", [](const PermutationView& p, Index s, std::size_t n) { return factor(p, s, n); })
        .def("representative", [](const PermutationView& p, Index i) { return p.representative(i).to_string(); })
        .def("detect_period", &detect_period, py::arg("scan_bound") = 512, py::arg("t_max") = 64);

    m.def("word_prefix", [](const std::string& spec, std::size_t n, std::uint64_t seed) {
        return parse_word_spec(spec, seed).prefix(n);
    }, py::arg("spec"), py::arg("n"), py::arg("seed") = 0);

    m.def("factor_complexity", [](const std::string& spec, std::size_t n, std::size_t scan_bound, bool word,
                                  std::uint64_t seed) {
        if (word) return report_dict(word_factor_complexity(parse_word_spec(spec, seed), n, scan_bound));
        return report_dict(factor_complexity(parse_permutation_spec(spec, kDefaultLookahead, seed), n, scan_bound));
    }, py::arg("spec"), py::arg("n"), py::arg("scan_bound") = kDefaultScanBound, py::arg("word") = false,
       py::arg("seed") = 0);

    m.def("max_pattern_complexity", [](const std::string& spec, std::size_t n, std::size_t max_spread,
                                       std::size_t scan_bound, bool word, bool saturation, std::uint64_t seed) {
        std::function<ComplexityReport(std::size_t, std::size_t)> compute;
        if (word) {
            const InfiniteWord w = parse_word_spec(spec, seed);
            compute = [w, n](std::size_t M, std::size_t T) { return word_max_pattern_complexity(w, n, T, M); };
        } else {
            const PermutationView p = parse_permutation_spec(spec, kDefaultLookahead, seed);
            compute = [p, n](std::size_t M, std::size_t T) { return max_pattern_complexity(p, n, T, M); };
        }
        return report_dict(saturation ? with_saturation(compute, scan_bound, max_spread)
                                      : compute(scan_bound, max_spread));
    }, py::arg("spec"), py::arg("n"), py::arg("max_spread") = kDefaultMaxSpread,
       py::arg("scan_bound") = kDefaultScanBound, py::arg("word") = false, py::arg("saturation") = true,
       py::arg("seed") = 0);

    m.def("word_period_classes", [](std::size_t length, const std::vector<std::size_t>& periods) {
        return word_period_classes(length, periods);
    });
    m.def("enumerate_periodic_patterns", [](std::size_t length, const std::vector<std::size_t>& periods,
                                            std::uint64_t budget) {
        return enumerate_periodic_patterns(length, periods, budget);
    }, py::arg("length"), py::arg("periods"), py::arg("budget") = default_budget());

    m.def("verify_theorem2", [](std::size_t p, std::size_t q) {
        const auto r = verify_theorem2(p, q);
        py::dict d;
        d["length"] = r.length;
        d["periodic_count"] = r.periodic_count;
        d["confirmed"] = r.confirmed();
        d["counterexample"] = optional_pattern(r.counterexample);
        d["witness_length"] = r.witness_length;
        d["witness"] = optional_pattern(r.witness);
        return d;
    });
    m.def("verify_theorem3", [](std::size_t p, std::size_t q, std::size_t n) {
        const auto r = verify_theorem3(p, q, n);
        py::dict d;
        d["g"] = r.g;
        d["factor_bound"] = r.factor_bound;
        d["patterns_checked"] = r.patterns_checked;
        d["confirmed"] = r.confirmed();
        d["counterexample"] = optional_pattern(r.counterexample);
        return d;
    });
    m.def("find_nongcd_witness", [](std::size_t p, std::size_t q, std::size_t n) {
        return optional_pattern(find_nongcd_witness(p, q, n));
    });

    m.def("psi", [](std::uint64_t t) { return to_py(psi(t)); });
    m.def("max_complexity", [](std::uint64_t n_plus_1) { return to_py(max_complexity(n_plus_1)); });
    m.def("count_primitive_words", &count_primitive_words);

    m.def("is_square", &is_square);
    m.def("is_square_free", &is_square_free);
    m.def("count_square_free", &count_square_free);

    m.def("tm_automaton_table", [] { return std::string(tm_automaton_table()); });
    m.def("automaton_check", [](const std::optional<std::string>& text, const std::string& spec, Index bound) {
        const PairAutomaton aut = text ? PairAutomaton::parse(*text) : tm_automaton();
        return crosscheck(aut, parse_permutation_spec(spec), bound);
    }, py::arg("text") = py::none(), py::arg("spec") = "wordperm:tm", py::arg("bound") = 512);
    m.def("automaton_eval", [](Index i, Index j, const std::optional<std::string>& text) {
        const PairAutomaton aut = text ? PairAutomaton::parse(*text) : tm_automaton();
        return std::string(1, static_cast<char>(evaluate(aut, i, j)));
    }, py::arg("i"), py::arg("j"), py::arg("text") = py::none());

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
