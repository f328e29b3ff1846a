#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "combilang/automaton.hpp"
#include "combilang/catalan.hpp"
#include "combilang/distribution.hpp"
#include "combilang/grammar.hpp"
#include "combilang/graph.hpp"
#include "combilang/horn.hpp"
#include "combilang/partition.hpp"
#include "combilang/tableaux.hpp"

namespace py = pybind11;
using namespace combilang;

namespace {

py::object to_py(const BigInt& x) { return py::int_(py::str(to_string(x))); }

py::object to_py(const Rational& x)
{
    static const auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(BigInt(numerator(x))), to_py(BigInt(denominator(x))));
}

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

py::list triples(const HornSet& h)
{
    py::list out;
    for (const auto& t : h.triples)
        out.append(py::make_tuple(t.i, t.j, t.k));
    return out;
}

Multigraph graph_of(int n, const std::vector<std::pair<int, int>>& edges) { return Multigraph(n, edges); }

} // namespace

PYBIND11_MODULE(combilang, m)
{
    m.doc() = "Combinatorics on words, partitions, tableaux, grammars and graphs";

    m.def(
        "lr_coefficient",
        [](const std::vector<int>& outer, const std::vector<int>& inner, const std::vector<int>& content) {
            return to_py(lr_coefficient(to_partition(outer), to_partition(inner), to_partition(content)));
        },
        py::arg("outer"), py::arg("inner"), py::arg("content"));

    m.def("horn_u", [](int n, int r) { return triples(compute_u(n, r)); }, py::arg("n"), py::arg("r"));
    m.def("horn_t", [](int n, int r) { return triples(compute_t(n, r)); }, py::arg("n"), py::arg("r"));
    m.def(
        "is_admissible",
        [](const std::vector<int>& lambda, const std::vector<int>& mu, const std::vector<int>& nu, int n) {
            return is_admissible(to_partition(lambda), to_partition(mu), to_partition(nu), n);
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("n"));

    m.def(
        "set_partitions", [](int n) {
            std::vector<std::string> out;
            for (const auto& sp : enumerate_set_partitions(n))
                out.push_back(partition_to_word(sp).str());
            return out;
        },
        py::arg("n"), "Restricted growth words of all set partitions of {1..n}.");
    m.def("partition_of_word", [](const std::string& w) { return word_to_partition(RgsWord(w)).str(); });

    m.def("automaton_accepts",
          [](const std::string& json, const std::string& word) {
              return FiniteAutomaton::from_json(json).accepts(std::string_view(word));
          },
          py::arg("machine_json"), py::arg("word"));

    m.def("grammar_count", [](const std::string& text, std::size_t n) { return to_py(count_words(Grammar::parse(text), n)); },
          py::arg("grammar"), py::arg("n"));
    m.def("grammar_sample",
          [](const std::string& text, std::size_t n, std::uint64_t seed) {
              return sample_uniform(Grammar::parse(text), n, seed).str();
          },
          py::arg("grammar"), py::arg("n"), py::arg("seed"));

    m.def("spectrum", [](int n, const std::vector<std::pair<int, int>>& edges) { return spectrum(graph_of(n, edges)).eigenvalues; },
          py::arg("n"), py::arg("edges"));
    m.def("betweenness",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
              py::list out;
              for (const auto& x : betweenness(graph_of(n, edges)))
                  out.append(to_py(x));
              return out;
          },
          py::arg("n"), py::arg("edges"));

    m.def("is_catalan", [](const std::string& w) { return is_catalan(w); });
    m.def("count_pi1_star", [](const std::string& w, int n) { return to_py(count_pi1_star(w, n)); }, py::arg("word"),
          py::arg("n"));
    m.def("pu_limit", [](const std::string& w) { return to_py(pu_limit(w)); });

    m.def(
        "horn_probability",
        [](const std::vector<int>& gamma, const std::vector<int>& lambda, const std::vector<int>& mu, int n) {
            return to_py(horn_probability(to_partition(gamma), to_partition(lambda), to_partition(mu), n).probability);
        },
        py::arg("gamma"), py::arg("lam"), py::arg("mu"), py::arg("n"));
}
