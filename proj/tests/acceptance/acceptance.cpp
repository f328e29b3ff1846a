// Acceptance checks: one PASS/FAIL line per criterion. Exit status is the
// number of failures (0 when everything passes).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "combilang/automaton.hpp"
#include "combilang/catalan.hpp"
#include "combilang/distribution.hpp"
#include "combilang/grammar.hpp"
#include "combilang/graph.hpp"
#include "combilang/horn.hpp"
#include "combilang/partition.hpp"
#include "combilang/rng.hpp"
#include "combilang/tableaux.hpp"

using namespace combilang;

namespace {

// Pinned tolerances and limits.
constexpr double horn_table_seconds = 1.0;
constexpr double horn_lr_seconds = 60.0;
constexpr double catalan_seconds = 30.0;
constexpr double ratio_tol = 0.02;
constexpr double mc_tol = 0.01;
constexpr std::uint64_t mc_samples = 1000000;
constexpr std::uint64_t mc_seed = 7;
constexpr std::uint64_t sampling_seed = 42;
constexpr int sampling_draws = 10000;
constexpr int sampling_low = 1800;
constexpr int sampling_high = 2200;
constexpr std::uint64_t xn_samples = 100000;
constexpr std::uint64_t xn_seed = 5;
constexpr double tv_tol = 0.02;
constexpr double eig_tol = 1e-8;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::set<IndexTriple> as_set(const HornSet& h) { return {h.triples.begin(), h.triples.end()}; }

std::set<IndexTriple> fixture_triples(const nlohmann::json& list)
{
    std::set<IndexTriple> out;
    for (const auto& t : list)
        out.insert({t[0].get<IndexSet>(), t[1].get<IndexSet>(), t[2].get<IndexSet>()});
    return out;
}

Outcome horn_table()
{
    Outcome o;
    std::ifstream in(COMBILANG_DATA_DIR "/horn_table.json");
    if (!in) {
        o.require(false, "missing horn_table.json");
        return o;
    }
    const auto table = nlohmann::json::parse(in);
    const auto start = Clock::now();
    int equal_rows = 0;
    for (const auto& row : table["rows"]) {
        const int n = row["n"], r = row["r"];
        const auto u = as_set(compute_u(n, r));
        const auto t = as_set(compute_t(n, r));
        const auto tag = "(" + std::to_string(n) + "," + std::to_string(r) + ")";
        o.require(u == fixture_triples(row["U"]), "U" + tag + " differs");
        o.require(t == fixture_triples(row["T"]), "T" + tag + " differs");
        equal_rows += u == t ? 1 : 0;
    }
    o.require(compute_u(4, 2).size() == 27, "|U(4,2)| != 27");
    o.require(compute_t(4, 2).size() == 21, "|T(4,2)| != 21");
    o.require(equal_rows == 5, "U = T on " + std::to_string(equal_rows) + " rows, expected 5");
    const double secs = seconds_since(start);
    o.require(secs < horn_table_seconds, "took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail = "6 rows exact, |U(4,2)|=27, |T(4,2)|=21";
    return o;
}

Outcome horn_lr()
{
    Outcome o;
    const auto start = Clock::now();
    HornCalculator calc(1);
    std::vector<Partition> parts;
    for (int w = 0; w <= 12; ++w)
        for (auto& p : partitions_of(w, 3, 4))
            parts.push_back(p);
    long long checked = 0, mismatches = 0;
    for (const auto& lambda : parts)
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                const bool horn = is_admissible(lambda, mu, nu, 3, calc);
                const bool lr = lambda.weight() + mu.weight() == nu.weight() && lr_coefficient(nu, lambda, mu) > 0;
                mismatches += horn != lr ? 1 : 0;
                ++checked;
            }
    o.require(mismatches == 0, std::to_string(mismatches) + " disagreements");
    const double secs = seconds_since(start);
    o.require(secs < horn_lr_seconds, "took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail = std::to_string(checked) + " triples agree";
    return o;
}

Outcome lr_values()
{
    Outcome o;
    for (int w = 0; w <= 6; ++w)
        for (const auto& lambda : partitions_of(w))
            o.require(lr_coefficient(lambda, lambda, Partition()) == 1, "identity fails at " + lambda.str());
    o.require(lr_coefficient(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})) == 2, "c(321;21,21) != 2");
    long long pairs = 0;
    for (int w = 0; w <= 8; ++w)
        for (const auto& nu : partitions_of(w))
            for (int lw = 0; lw <= w; ++lw)
                for (const auto& lambda : partitions_of(lw))
                    for (const auto& mu : partitions_of(w - lw)) {
                        o.require(lr_coefficient(nu, lambda, mu) == lr_coefficient(nu, mu, lambda),
                                  "asymmetric at " + nu.str());
                        ++pairs;
                    }
    if (o.pass)
        o.detail = "identity, c=2, symmetry over " + std::to_string(pairs) + " triples";
    return o;
}

Outcome catalan_limits()
{
    Outcome o;
    const auto start = Clock::now();
    for (int n = 1; n <= 100; ++n)
        o.require(count_pi1_star("aa", n) == n * (n + 1) / 2, "aa count wrong at n=" + std::to_string(n));
    const double ratio = to_double(pu_ratio("abba", 60));
    o.require(std::abs(ratio - 1.0 / 3) < ratio_tol, "abba ratio " + std::to_string(ratio));
    const auto aa = pu_integral("aa", mc_samples, mc_seed);
    const auto abba = pu_integral("abba", mc_samples, mc_seed);
    o.require(std::abs(aa.estimate - 0.5) < mc_tol, "aa integral " + std::to_string(aa.estimate));
    o.require(std::abs(abba.estimate - 1.0 / 3) < mc_tol, "abba integral " + std::to_string(abba.estimate));
    for (const char* w : {"aa", "aabb", "abba"})
        for (int n = 1; n <= 8; ++n)
            o.require(count_pi1_star(w, n) == count_pi1_by_definition(w, n, MatchReading::Equivalence),
                      std::string("brute force differs for ") + w + " n=" + std::to_string(n));
    const double secs = seconds_since(start);
    o.require(secs < catalan_seconds, "took " + std::to_string(secs) + " s");
    if (o.pass) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "abba ratio(60)=%.6f, MC aa=%.6f abba=%.6f", ratio, aa.estimate,
                      abba.estimate);
        o.detail = buf;
    }
    return o;
}

Outcome rgs_bijection()
{
    Outcome o;
    // Bell numbers by the Bell triangle.
    std::vector<long long> bell{1};
    std::vector<long long> row{1};
    for (int i = 1; i <= 8; ++i) {
        bell.push_back(row.back());
        std::vector<long long> next{row.back()};
        for (auto x : row)
            next.push_back(next.back() + x);
        row = next;
    }
    const std::vector<long long> expected{1, 1, 2, 5, 15, 52, 203, 877, 4140};
    o.require(bell == expected, "Bell triangle disagrees with listed values");
    for (int n = 1; n <= 8; ++n) {
        const auto all = enumerate_set_partitions(n);
        o.require(static_cast<long long>(all.size()) == bell[static_cast<std::size_t>(n)],
                  "count wrong at n=" + std::to_string(n));
        for (const auto& sp : all)
            if (word_to_partition(partition_to_word(sp)) != sp) {
                o.require(false, "roundtrip fails for " + sp.str());
                break;
            }
    }
    if (o.pass)
        o.detail = "roundtrip n<=8, counts 1,1,2,5,15,52,203,877,4140";
    return o;
}

Outcome fixture_automaton()
{
    Outcome o;
    const auto m = FiniteAutomaton::load(COMBILANG_DATA_DIR "/sample_automaton.json");
    for (const char* w : {"a", "baa", "bbb", "bbaaab"})
        o.require(m.accepts(std::string_view(w)), std::string("rejects ") + w);
    for (const char* w : {"", "b", "ab", "ba", "aa"})
        o.require(!m.accepts(std::string_view(w)), std::string("accepts '") + w + "'");
    const auto expr = RationalExpr::parse("((ba)*b)*+((ba)*a)*");
    const auto diff = compare_languages(m, from_expr(expr, m.alphabet()), 6);
    auto show = [](const std::vector<std::string>& ws) {
        std::string s;
        for (const auto& w : ws)
            s += " " + (w.empty() ? std::string("(empty)") : w);
        return s.empty() ? std::string(" none") : s;
    };
    std::printf("  info: machine vs %s up to length 6\n", expr.str().c_str());
    std::printf("  info: only machine:%s\n", show(diff.only_first).c_str());
    std::printf("  info: only expression:%s\n", show(diff.only_second).c_str());
    if (o.pass)
        o.detail = "listed words accepted, listed non-words rejected";
    return o;
}

Outcome grammar_generation()
{
    Outcome o;
    const GrammarEngine e(Grammar::parse("S -> a S b S | ;\n"), 10);
    const long long dyck[] = {1, 1, 2, 5, 14, 42};
    for (std::size_t n = 0; n <= 10; n += 2)
        o.require(e.count_words(n) == dyck[n / 2], "Dyck count wrong at length " + std::to_string(n));
    Rng rng(sampling_seed);
    std::map<std::string, int> freq;
    for (int t = 0; t < sampling_draws; ++t)
        ++freq[e.sample(6, rng).str()];
    o.require(freq.size() == 5, std::to_string(freq.size()) + " distinct words");
    std::string counts;
    for (const auto& [w, c] : freq) {
        o.require(c >= sampling_low && c <= sampling_high, w + " drawn " + std::to_string(c) + " times");
        counts += (counts.empty() ? "" : ", ") + w + "=" + std::to_string(c);
    }
    if (o.pass)
        o.detail = "Dyck 1,1,2,5,14,42; seed 42: " + counts;
    return o;
}

Outcome occurrence_distribution()
{
    Outcome o;
    const auto ab = make_alphabet("ab");
    const auto exact = xn_distribution(UniformWords{ab}, 3, "aa", ExactMode{});
    const std::map<std::size_t, Rational> expected{{0, Rational(5, 8)}, {1, Rational(1, 4)}, {2, Rational(1, 8)}};
    o.require(exact.probabilities == expected, "exact distribution " + exact.to_json());
    const auto mc = xn_distribution(UniformWords{ab}, 3, "aa", MonteCarloMode{xn_samples, xn_seed});
    const double tv = total_variation(mc, exact);
    o.require(tv < tv_tol, "total variation " + std::to_string(tv));
    if (o.pass)
        o.detail = exact.to_json() + ", MC total variation " + std::to_string(tv);
    return o;
}

Outcome graph_properties()
{
    Outcome o;
    std::mt19937_64 gen(500);
    for (int t = 0; t < 500; ++t) {
        const int n = 1 + static_cast<int>(gen() % 12);
        const int m = static_cast<int>(gen() % 41);
        std::vector<std::pair<int, int>> edges;
        for (int e = 0; e < m; ++e)
            edges.emplace_back(1 + static_cast<int>(gen() % static_cast<unsigned>(n)),
                               1 + static_cast<int>(gen() % static_cast<unsigned>(n)));
        o.require(handshake_check(Multigraph(n, edges)), "handshake fails");
    }
    const auto two = spectrum(cycle_graph(3).disjoint_union(cycle_graph(3)));
    o.require(two.multiplicity_of(2.0, eig_tol) == 2, "eigenvalue 2 multiplicity != 2");
    const auto c6 = spectrum(cycle_graph(6));
    bool minus_two = false;
    for (double x : c6.eigenvalues)
        minus_two = minus_two || std::abs(x + 2) < eig_tol;
    o.require(minus_two, "C6 lacks -2");
    o.require(is_configuration(cycle_graph(6), 3, 3, 2, 2), "C6 not a (3,3,2,2) configuration");
    o.require(!is_configuration(complete_bipartite_graph(2, 2), 2, 2, 2, 2), "K22 accepted");
    o.require(betweenness(Multigraph(3, {{1, 2}, {2, 3}})) == std::vector<Rational>{0, 1, 0},
              "path betweenness wrong");
    if (o.pass)
        o.detail = "handshake x500, spectra, configurations, betweenness";
    return o;
}

Outcome distribution_formula()
{
    Outcome o;
    const Partition g({3, 2, 1}), l({2, 1});
    const auto h = horn_probability(g, l, l, 3);
    o.require(h.probability == Rational(1, 48), "probability " + to_pq(h.probability));
    o.require(h.lr_coefficient == 2, "coefficient " + to_string(h.lr_coefficient));
    o.require(enumerate_lr_fillings(SkewShape(g, l), l).size() == 2, "filling enumeration disagrees");
    const DataTable t({"age", "sex"}, {"r1", "r2", "r3"}, {{"30", "F"}, {"30", "M"}, {"30", "F"}});
    const auto r = uniform_reidentification({"30", "F"}, t, {"age", "sex"});
    o.require(r.probabilities == std::vector<Rational>{Rational(1, 2), 0, Rational(1, 2)}, "linkage " + r.to_json());
    if (o.pass)
        o.detail = "P = 1/48 with c = 2; two matches get 1/2 each";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"horn table reproduction", horn_table},
        {"horn / LR equivalence", horn_lr},
        {"LR values", lr_values},
        {"catalan limits", catalan_limits},
        {"RGS bijection", rgs_bijection},
        {"fixture automaton", fixture_automaton},
        {"grammar generation", grammar_generation},
        {"occurrence distribution", occurrence_distribution},
        {"graph properties", graph_properties},
        {"distribution formula", distribution_formula},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = Clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s %2zu %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    seconds_since(start), o.detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
