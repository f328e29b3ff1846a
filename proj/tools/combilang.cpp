// Command-line front end: one subcommand per module.
// Exit status: 0 success, 1 negative verdict, 2 usage or data error.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "combilang/automaton.hpp"
#include "combilang/catalan.hpp"
#include "combilang/distribution.hpp"
#include "combilang/exact.hpp"
#include "combilang/grammar.hpp"
#include "combilang/graph.hpp"
#include "combilang/horn.hpp"
#include "combilang/partition.hpp"
#include "combilang/series.hpp"
#include "combilang/tableaux.hpp"

using nlohmann::json;
using namespace combilang;

namespace {

struct Global {
    std::string format = "text";
    unsigned jobs = 1;
    bool json() const { return format == "json"; }
};

void emit(const Global& g, const json& doc, const std::string& text)
{
    if (g.json())
        std::cout << doc.dump() << '\n';
    else
        std::cout << text;
}

std::string decimal(double x, int digits)
{
    if (std::abs(x) < 0.5 * std::pow(10.0, -digits))
        x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

// ---------------------------------------------------------------------------

struct HornArgs {
    int n = 0;
    std::optional<int> r;
    std::string set = "T";
    std::optional<std::string> lambda, mu, nu;
};

int run_horn(const Global& g, const HornArgs& a)
{
    HornCalculator calc(g.jobs);
    if (a.lambda || a.mu || a.nu) {
        if (!a.lambda || !a.mu || !a.nu)
            throw CLI::ValidationError("--lambda, --mu and --nu go together");
        const auto lambda = Partition::parse(*a.lambda);
        const auto mu = Partition::parse(*a.mu);
        const auto nu = Partition::parse(*a.nu);
        const bool ok = is_admissible(lambda, mu, nu, a.n, calc);
        emit(g,
             {{"n", a.n},
              {"lambda", lambda.parts()},
              {"mu", mu.parts()},
              {"nu", nu.parts()},
              {"admissible", ok}},
             ok ? "admissible\n" : "not admissible\n");
        return ok ? 0 : 1;
    }
    if (!a.r)
        throw CLI::ValidationError("--r is required when listing triples");
    if (a.set != "U" && a.set != "T")
        throw CLI::ValidationError("--set must be U or T");
    const HornSet hs = a.set == "U" ? calc.compute_u(a.n, *a.r) : *calc.compute_t(a.n, *a.r);
    if (g.json())
        std::cout << hs.to_json() << '\n';
    else
        std::cout << hs.to_text();
    return 0;
}

// ---------------------------------------------------------------------------

struct LrArgs {
    std::string outer, inner, content;
    bool list = false;
};

int run_lr(const Global& g, const LrArgs& a)
{
    const auto outer = Partition::parse(a.outer);
    const auto inner = Partition::parse(a.inner);
    const auto content = Partition::parse(a.content);
    const BigInt c = lr_coefficient(outer, inner, content);
    json doc = {{"outer", outer.parts()}, {"inner", inner.parts()}, {"content", content.parts()},
                {"coefficient", to_string(c)}};
    std::string text = to_string(c) + "\n";
    if (a.list && c > 0) {
        const auto fillings = enumerate_lr_fillings(SkewShape(outer, inner), content);
        doc["fillings"] = json::array();
        for (const auto& f : fillings) {
            doc["fillings"].push_back(f.entries);
            text += "\n";
            for (const auto& row : f.entries) {
                std::string line;
                for (std::size_t i = 0; i < row.size(); ++i)
                    line += (i ? " " : "") + std::to_string(row[i]);
                text += (line.empty() ? "." : line) + "\n";
            }
        }
    } else if (a.list) {
        doc["fillings"] = json::array();
    }
    emit(g, doc, text);
    return 0;
}

// ---------------------------------------------------------------------------

struct PartitionArgs {
    std::string set, word, parts, gens, pattern;
    int n = 0;
    int k = 2;
    std::optional<long long> member;
    long long bound = 0;
    bool count_only = false;
};

int run_partition_word(const Global& g, const PartitionArgs& a)
{
    const auto sp = SetPartition::parse(a.set);
    const auto w = partition_to_word(sp);
    emit(g, {{"partition", sp.str()}, {"word", w.str()}}, w.str() + "\n");
    return 0;
}

int run_partition_set(const Global& g, const PartitionArgs& a)
{
    try {
        const auto sp = word_to_partition(RgsWord(a.word));
        emit(g, {{"word", a.word}, {"partition", sp.str()}}, sp.str() + "\n");
        return 0;
    } catch (const RgsError& e) {
        emit(g, {{"word", a.word}, {"error", e.what()}, {"position", e.position()}},
             std::string("invalid at position ") + std::to_string(e.position()) + ": " + e.what() + "\n");
        return 1;
    }
}

int run_partition_enumerate(const Global& g, const PartitionArgs& a)
{
    SetPartitionStream stream(a.n);
    json list = json::array();
    std::string text;
    std::size_t count = 0;
    while (auto sp = stream.next()) {
        ++count;
        if (a.count_only)
            continue;
        const auto w = partition_to_word(*sp);
        list.push_back({{"partition", sp->str()}, {"word", w.str()}});
        text += w.str() + " " + sp->str() + "\n";
    }
    json doc = {{"n", a.n}, {"count", count}};
    if (!a.count_only)
        doc["partitions"] = list;
    emit(g, doc, a.count_only ? std::to_string(count) + "\n" : text);
    return 0;
}

int run_partition_regular(const Global& g, const PartitionArgs& a)
{
    const auto p = Partition::parse(a.parts);
    const bool ok = is_k_regular(p, a.k);
    emit(g, {{"partition", p.parts()}, {"k", a.k}, {"regular", ok}}, ok ? "true\n" : "false\n");
    return ok ? 0 : 1;
}

int run_partition_semigroup(const Global& g, const PartitionArgs& a)
{
    const auto s = NumericalSemigroup::parse(a.gens);
    json doc = {{"generators", s.generators()}, {"conductor", s.conductor()}, {"frobenius", s.frobenius()}};
    std::string text = "conductor " + std::to_string(s.conductor()) + "\nfrobenius " +
                       std::to_string(s.frobenius()) + "\n";
    int status = 0;
    if (a.member) {
        const bool in = semigroup_member(s, *a.member);
        doc["member"] = {{"value", *a.member}, {"contains", in}};
        text += std::to_string(*a.member) + (in ? " is a member\n" : " is not a member\n");
        status = in ? status : 1;
    }
    if (!a.pattern.empty()) {
        const auto p = LinearPattern::parse(a.pattern);
        const long long bound = a.bound > 0 ? a.bound : s.conductor() + 20;
        const auto v = pattern_admitted(s, p, bound);
        doc["pattern"] = {{"coefficients", p.coefficients()},
                          {"bound", v.bound},
                          {"admitted", v.admitted},
                          {"counterexample", v.counterexample}};
        if (v.admitted) {
            text += "pattern admitted up to " + std::to_string(v.bound) + "\n";
        } else {
            std::string tuple;
            for (std::size_t i = 0; i < v.counterexample.size(); ++i)
                tuple += (i ? "," : "") + std::to_string(v.counterexample[i]);
            text += "counterexample (" + tuple + ")\n";
            status = 1;
        }
    }
    emit(g, doc, text);
    return status;
}

// ---------------------------------------------------------------------------

struct AutomatonArgs {
    std::string machine, word, expr, alphabet;
    std::size_t max_len = 6;
};

int run_automaton_run(const Global& g, const AutomatonArgs& a)
{
    const auto m = FiniteAutomaton::load(a.machine);
    const bool ok = m.accepts(std::string_view(a.word));
    emit(g, {{"word", a.word}, {"accepted", ok}}, ok ? "accept\n" : "reject\n");
    return ok ? 0 : 1;
}

int run_automaton_language(const Global& g, const AutomatonArgs& a)
{
    const auto m = FiniteAutomaton::load(a.machine);
    const auto lang = enumerate_language(m, a.max_len);
    std::string text;
    for (const auto& w : lang.strings())
        text += (w.empty() ? "1" : w) + "\n";
    emit(g, {{"max_len", a.max_len}, {"words", lang.strings()}}, text);
    return 0;
}

int run_automaton_compare(const Global& g, const AutomatonArgs& a)
{
    const auto m = FiniteAutomaton::load(a.machine);
    const auto e = RationalExpr::parse(a.expr);
    const auto other = from_expr(e, m.alphabet());
    const auto diff = compare_languages(m, other, a.max_len);
    auto show = [](const std::vector<std::string>& ws) {
        std::string s;
        for (const auto& w : ws)
            s += " " + (w.empty() ? std::string("1") : w);
        return s;
    };
    emit(g,
         {{"expression", e.str()},
          {"max_len", diff.max_len},
          {"equal", diff.equal()},
          {"only_machine", diff.only_first},
          {"only_expression", diff.only_second}},
         "expression " + e.str() + "\nmax length " + std::to_string(diff.max_len) + "\nonly machine:" +
             show(diff.only_first) + "\nonly expression:" + show(diff.only_second) + "\n");
    return 0;
}

int run_automaton_from_expr(const Global&, const AutomatonArgs& a)
{
    const auto m = from_expr(RationalExpr::parse(a.expr), make_alphabet(a.alphabet));
    std::cout << m.to_json() << '\n';
    return 0;
}

// ---------------------------------------------------------------------------

struct GrammarArgs {
    std::string file, pattern, source, alphabet = "ab", lang, word;
    std::size_t n = 0;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    bool tally = false;
};

int run_grammar_count(const Global& g, const GrammarArgs& a)
{
    const GrammarEngine engine(Grammar::load(a.file), a.n);
    const BigInt words = engine.count_words(a.n);
    emit(g, {{"n", a.n}, {"count", to_string(words)}, {"derivations", to_string(engine.derivations(a.n))}},
         to_string(words) + "\n");
    return 0;
}

int run_grammar_sample(const Global& g, const GrammarArgs& a)
{
    if (!a.seed)
        throw CLI::ValidationError("sampling requires --seed");
    const GrammarEngine engine(Grammar::load(a.file), a.n);
    Rng rng(*a.seed);
    const std::uint64_t count = a.samples.value_or(1);
    std::vector<std::string> words;
    std::map<std::string, std::uint64_t> tally;
    for (std::uint64_t t = 0; t < count; ++t) {
        auto w = engine.sample(a.n, rng).str();
        if (a.tally)
            ++tally[w];
        else
            words.push_back(std::move(w));
    }
    json doc = {{"n", a.n}, {"seed", *a.seed}, {"samples", count}};
    std::string text;
    if (a.tally) {
        doc["tally"] = tally;
        for (const auto& [w, c] : tally)
            text += w + " " + std::to_string(c) + "\n";
    } else {
        doc["words"] = words;
        for (const auto& w : words)
            text += w + "\n";
    }
    emit(g, doc, text);
    return 0;
}

int run_grammar_xn(const Global& g, const GrammarArgs& a)
{
    WordSource source;
    if (a.source == "uniform") {
        source = UniformWords{make_alphabet(a.alphabet)};
    } else if (a.source == "grammar") {
        if (a.file.empty())
            throw CLI::ValidationError("--source grammar requires --file");
        source = GrammarWords{std::make_shared<const GrammarEngine>(Grammar::load(a.file), a.n)};
    } else {
        throw CLI::ValidationError("--source must be uniform or grammar");
    }
    DistributionMode mode = ExactMode{};
    if (a.samples) {
        if (!a.seed)
            throw CLI::ValidationError("Monte-Carlo mode requires --seed");
        mode = MonteCarloMode{*a.samples, *a.seed};
    }
    const auto d = xn_distribution(source, a.n, a.pattern, mode);
    std::string text;
    for (const auto& [k, p] : d.probabilities)
        text += std::to_string(k) + " " + to_pq(p) + "\n";
    if (g.json())
        std::cout << d.to_json() << '\n';
    else
        std::cout << text;
    return 0;
}

int run_grammar_member(const Global& g, const GrammarArgs& a)
{
    bool ok = false;
    if (!a.file.empty()) {
        const auto grammar = Grammar::load(a.file);
        const GrammarEngine engine(grammar, std::max<std::size_t>(a.word.size(), 1));
        ok = engine.derives(Word::parse(grammar.terminals(), a.word));
    } else if (!a.lang.empty()) {
        ok = parametric_member(parse_parametric(a.lang), a.word);
    } else {
        throw CLI::ValidationError("give --file or --lang");
    }
    emit(g, {{"word", a.word}, {"member", ok}}, ok ? "true\n" : "false\n");
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct GraphArgs {
    std::string edges, set;
    bool spectrum = false;
    std::vector<int> config;
    double tol = 1e-10;
    int from = 1, to = 1, length = 0;
};

int run_graph_metrics(const Global& g, const GraphArgs& a)
{
    const auto graph = Multigraph::load_edge_list(a.edges);
    json doc;
    std::string text;
    doc["n"] = graph.n();
    doc["edges"] = graph.edge_count();
    std::vector<std::int64_t> degrees;
    for (int v = 1; v <= graph.n(); ++v)
        degrees.push_back(degree(graph, v));
    doc["degrees"] = degrees;
    doc["handshake"] = handshake_check(graph);
    const auto comps = components(graph);
    doc["components"] = comps;
    const bool connected = comps.size() <= 1;
    doc["connected"] = connected;
    const auto bip = is_bipartite(graph);
    doc["bipartite"] = bip.bipartite;
    if (!bip.bipartite)
        doc["odd_closed_walk"] = bip.odd_closed_walk;
    const bool regular = graph.n() > 0 && is_k_regular(graph, degrees.front());
    doc["regular_degree"] = regular ? json(degrees.front()) : json(nullptr);

    const auto bc = betweenness(graph, g.jobs);
    doc["betweenness"] = json::array();
    for (const auto& x : bc)
        doc["betweenness"].push_back(to_pq(x));

    text += "vertices " + std::to_string(graph.n()) + "\nedges " + std::to_string(graph.edge_count()) + "\n";
    text += "components " + std::to_string(comps.size()) + "\n";
    text += std::string("bipartite ") + (bip.bipartite ? "yes" : "no") + "\n";
    text += "regular " + (regular ? std::to_string(degrees.front()) : std::string("no")) + "\n";
    text += "betweenness";
    for (const auto& x : bc)
        text += " " + to_pq(x);
    text += "\n";

    if (connected && graph.n() > 0) {
        const auto ds = distance_stats(graph);
        doc["average_distance"] = to_pq(ds.average);
        doc["diameter"] = ds.diameter;
        text += "average distance " + to_pq(ds.average) + "\ndiameter " + std::to_string(ds.diameter) + "\n";
    } else {
        doc["average_distance"] = nullptr;
        doc["diameter"] = nullptr;
    }

    if (a.spectrum) {
        const auto sp = spectrum(graph, a.tol);
        json eig = json::array();
        for (double x : sp.eigenvalues)
            eig.push_back(decimal(x, 12));
        json groups = json::array();
        text += "spectrum";
        for (const auto& grp : sp.groups) {
            groups.push_back({{"value", decimal(grp.value, 12)}, {"multiplicity", grp.multiplicity}});
            text += " " + decimal(grp.value, 12) + "^" + std::to_string(grp.multiplicity);
        }
        text += "\n";
        doc["spectrum"] = {{"eigenvalues", eig},
                           {"groups", groups},
                           {"largest", decimal(sp.largest(), 12)},
                           {"tolerance", sp.tol},
                           {"sweeps", sp.sweeps}};
    }

    int status = 0;
    if (!a.config.empty()) {
        if (a.config.size() != 4)
            throw CLI::ValidationError("--config takes v,b,r,k");
        const bool ok = is_configuration(graph, a.config[0], a.config[1], a.config[2], a.config[3]);
        doc["configuration"] = {{"v", a.config[0]}, {"b", a.config[1]}, {"r", a.config[2]},
                                {"k", a.config[3]}, {"holds", ok}};
        text += std::string("configuration ") + (ok ? "yes" : "no") + "\n";
        status = ok ? 0 : 1;
    }
    emit(g, doc, text);
    return status;
}

int run_graph_walks(const Global& g, const GraphArgs& a)
{
    const auto graph = Multigraph::load_edge_list(a.edges);
    const auto c = count_walks(graph, a.from, a.to, a.length);
    emit(g, {{"from", a.from}, {"to", a.to}, {"length", a.length}, {"walks", to_string(c)}}, to_string(c) + "\n");
    return 0;
}

int run_graph_from_partition(const Global& g, const GraphArgs& a)
{
    const auto graph = from_set_partition(SetPartition::parse(a.set));
    if (g.json()) {
        json edges = json::array();
        for (const auto& [u, v] : graph.edges())
            edges.push_back({u, v});
        std::cout << json{{"n", graph.n()}, {"edges", edges}}.dump() << '\n';
    } else {
        std::cout << graph.to_edge_list();
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct CatalanArgs {
    std::string word;
    int n = 0;
    bool brute = false;
    std::optional<std::uint64_t> mc;
    std::optional<std::uint64_t> seed;
};

int run_catalan_check(const Global& g, const CatalanArgs& a)
{
    const bool matched = is_pair_matched(a.word);
    const bool catalan = is_catalan(a.word);
    json doc = {{"word", a.word}, {"pair_matched", matched}, {"catalan", catalan}};
    std::string text = std::string("pair-matched ") + (matched ? "yes" : "no") + "\ncatalan " +
                       (catalan ? "yes" : "no") + "\n";
    if (catalan) {
        const auto s = catalan_structure(a.word);
        doc["generating_vertices"] = s.generators;
        doc["phi"] = s.phi;
        text += "generating vertices";
        for (auto v : s.generators)
            text += " " + std::to_string(v);
        text += "\nphi";
        for (auto v : s.phi)
            text += " " + std::to_string(v);
        text += "\n";
    }
    emit(g, doc, text);
    return catalan ? 0 : 1;
}

int run_catalan_count(const Global& g, const CatalanArgs& a)
{
    const BigInt c = count_pi1_star(a.word, a.n, g.jobs);
    const Rational ratio = pu_ratio(a.word, a.n, g.jobs);
    const Rational limit = pu_limit(a.word);
    json doc = {{"word", a.word}, {"n", a.n}, {"count", to_string(c)}, {"ratio", to_pq(ratio)},
                {"ratio_decimal", decimal(to_double(ratio), 6)}, {"limit", to_pq(limit)}};
    std::string text = "count " + to_string(c) + "\nratio " + to_pq(ratio) + " (" + decimal(to_double(ratio), 6) +
                       ")\nlimit " + to_pq(limit) + "\n";
    if (a.brute) {
        const auto eq = count_pi1_by_definition(a.word, a.n, MatchReading::Equivalence);
        const auto loose = count_pi1_by_definition(a.word, a.n, MatchReading::SameLetterOnly);
        doc["definition_scan"] = {{"equivalence", to_string(eq)}, {"same_letter_only", to_string(loose)}};
        text += "definition scan: equivalence " + to_string(eq) + ", same letter only " + to_string(loose) + "\n";
    }
    emit(g, doc, text);
    return 0;
}

int run_catalan_limit(const Global& g, const CatalanArgs& a)
{
    const auto poly = inner_integral_polynomial(a.word);
    const Rational limit = poly.integrate_unit();
    json doc = {{"word", a.word}, {"limit", to_pq(limit)}, {"inner_polynomial", poly.str()}};
    std::string text = "limit " + to_pq(limit) + "\ninner polynomial " + poly.str() + "\n";
    if (a.mc) {
        if (!a.seed)
            throw CLI::ValidationError("--mc requires --seed");
        const auto est = pu_integral(a.word, *a.mc, *a.seed);
        doc["monte_carlo"] = {{"estimate", decimal(est.estimate, 6)},
                              {"std_error", decimal(est.std_error, 6)},
                              {"samples", est.samples},
                              {"seed", *a.seed}};
        text += "monte carlo " + decimal(est.estimate, 6) + " +- " + decimal(est.std_error, 6) + " (" +
                std::to_string(est.samples) + " samples)\n";
    }
    emit(g, doc, text);
    return 0;
}

// ---------------------------------------------------------------------------

struct DistArgs {
    std::string table, cols, values, gamma, lambda, mu;
    int n = 0;
};

int run_dist_link(const Global& g, const DistArgs& a)
{
    const auto t = DataTable::load_csv(a.table);
    const auto r = uniform_reidentification(split(a.values, ','), t, split(a.cols, ','));
    std::string text;
    for (std::size_t i = 0; i < t.row_count(); ++i)
        text += t.index()[i] + " " + to_pq(r.probabilities[i]) + "\n";
    if (r.empty_match)
        text += "no matching row\n";
    if (g.json())
        std::cout << r.to_json() << '\n';
    else
        std::cout << text;
    return r.empty_match ? 1 : 0;
}

int run_dist_partition(const Global& g, const DistArgs& a)
{
    const auto sp = table_partition(DataTable::load_csv(a.table));
    emit(g, {{"partition", sp.str()}}, sp.str() + "\n");
    return 0;
}

int run_dist_horn_prob(const Global& g, const DistArgs& a)
{
    const auto hp =
        horn_probability(Partition::parse(a.gamma), Partition::parse(a.lambda), Partition::parse(a.mu), a.n);
    if (g.json())
        std::cout << hp.to_json() << '\n';
    else
        std::cout << to_pq(hp.probability) << "\nlr coefficient " << to_string(hp.lr_coefficient)
                  << "\ndenominator " << to_string(hp.denominator) << " = " << to_string(hp.box_strings) << " * "
                  << hp.symmetry_order << "\n";
    return 0;
}

// ---------------------------------------------------------------------------

struct SeriesArgs {
    std::string atoms;
    std::size_t order = 8;
    unsigned k = 1;
};

TruncatedSeries atoms_series(const SeriesArgs& a)
{
    std::vector<Rational> c;
    for (const auto& s : split(a.atoms, ','))
        c.push_back(parse_pq(s));
    c.resize(a.order + 1, Rational(0));
    return TruncatedSeries(std::move(c));
}

void print_series(const Global& g, const TruncatedSeries& s)
{
    if (g.json()) {
        std::cout << s.to_json() << '\n';
        return;
    }
    for (std::size_t i = 0; i <= s.order(); ++i)
        std::cout << (i ? " " : "") << to_pq(s[i]);
    std::cout << '\n';
}

int run_series_seq(const Global& g, const SeriesArgs& a)
{
    print_series(g, seq_ogf(atoms_series(a)));
    return 0;
}

int run_series_power(const Global& g, const SeriesArgs& a)
{
    print_series(g, seq_k_ogf(atoms_series(a), a.k));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Combinatorics on words, partitions, tableaux, grammars and graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    Global global;
    app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", global.jobs, "Worker threads for parallel enumerations")->check(CLI::Range(1u, 256u));

    std::function<int()> action;
    auto bind = [&](CLI::App* sub, auto fn, auto& args) {
        sub->callback([&action, &global, fn, &args] { action = [&global, fn, &args] { return fn(global, args); }; });
    };

    // horn
    HornArgs horn;
    auto* horn_cmd = app.add_subcommand("horn", "Horn index triples and admissibility");
    horn_cmd->add_option("--n", horn.n, "Ambient size")->required();
    horn_cmd->add_option("--r", horn.r, "Subset size");
    horn_cmd->add_option("--set", horn.set, "U or T");
    horn_cmd->add_option("--lambda", horn.lambda);
    horn_cmd->add_option("--mu", horn.mu);
    horn_cmd->add_option("--nu", horn.nu);
    bind(horn_cmd, run_horn, horn);

    // lr
    LrArgs lr;
    auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^outer_{inner,content}");
    lr_cmd->add_option("--outer", lr.outer)->required();
    lr_cmd->add_option("--inner", lr.inner)->required();
    lr_cmd->add_option("--content", lr.content)->required();
    lr_cmd->add_flag("--list", lr.list, "Print every filling");
    bind(lr_cmd, run_lr, lr);

    // partition
    PartitionArgs part;
    auto* part_cmd = app.add_subcommand("partition", "Set partitions, restricted growth words, semigroups");
    part_cmd->require_subcommand(1);
    auto* pw = part_cmd->add_subcommand("word", "Set partition to restricted growth word");
    pw->add_option("--set", part.set, "e.g. {1,3,5|2,4}")->required();
    bind(pw, run_partition_word, part);
    auto* ps = part_cmd->add_subcommand("set", "Restricted growth word to set partition");
    ps->add_option("--word", part.word)->required();
    bind(ps, run_partition_set, part);
    auto* pe = part_cmd->add_subcommand("enumerate", "All set partitions of {1..n}");
    pe->add_option("--n", part.n)->required()->check(CLI::Range(1, 12));
    pe->add_flag("--count", part.count_only);
    bind(pe, run_partition_enumerate, part);
    auto* pr = part_cmd->add_subcommand("regular", "No part divisible by k");
    pr->add_option("--parts", part.parts)->required();
    pr->add_option("--k", part.k);
    bind(pr, run_partition_regular, part);
    auto* psg = part_cmd->add_subcommand("semigroup", "Numerical semigroup membership and patterns");
    psg->add_option("--gens", part.gens)->required();
    psg->add_option("--member", part.member);
    psg->add_option("--pattern", part.pattern, "Linear coefficients, e.g. 1,-1");
    psg->add_option("--bound", part.bound);
    bind(psg, run_partition_semigroup, part);

    // automaton
    AutomatonArgs aut;
    auto* aut_cmd = app.add_subcommand("automaton", "Finite automata and rational expressions");
    aut_cmd->require_subcommand(1);
    auto* ar = aut_cmd->add_subcommand("run", "Accept or reject a word");
    ar->add_option("--machine", aut.machine)->required();
    ar->add_option("--word", aut.word)->required();
    bind(ar, run_automaton_run, aut);
    auto* al = aut_cmd->add_subcommand("language", "Accepted words up to a length");
    al->add_option("--machine", aut.machine)->required();
    al->add_option("--max-len", aut.max_len)->check(CLI::Range(0, 16));
    bind(al, run_automaton_language, aut);
    auto* ac = aut_cmd->add_subcommand("compare", "Symmetric difference against an expression");
    ac->add_option("--machine", aut.machine)->required();
    ac->add_option("--expr", aut.expr)->required();
    ac->add_option("--max-len", aut.max_len)->check(CLI::Range(0, 16));
    bind(ac, run_automaton_compare, aut);
    auto* ax = aut_cmd->add_subcommand("from-expr", "Build an automaton from an expression");
    ax->add_option("--expr", aut.expr)->required();
    ax->add_option("--alphabet", aut.alphabet)->required();
    bind(ax, run_automaton_from_expr, aut);

    // grammar
    GrammarArgs gram;
    auto* gram_cmd = app.add_subcommand("grammar", "Context-free counting, sampling and pattern laws");
    gram_cmd->require_subcommand(1);
    auto* gc = gram_cmd->add_subcommand("count", "Number of words of length n");
    gc->add_option("--file", gram.file)->required();
    gc->add_option("--n", gram.n)->required();
    bind(gc, run_grammar_count, gram);
    auto* gs = gram_cmd->add_subcommand("sample", "Uniform words of length n");
    gs->add_option("--file", gram.file)->required();
    gs->add_option("--n", gram.n)->required();
    gs->add_option("--samples", gram.samples);
    gs->add_option("--seed", gram.seed)->required();
    gs->add_flag("--tally", gram.tally, "Print frequencies instead of words");
    bind(gs, run_grammar_sample, gram);
    auto* gx = gram_cmd->add_subcommand("xn", "Law of the number of pattern occurrences");
    gx->add_option("--source", gram.source, "uniform or grammar")->required();
    gx->add_option("--file", gram.file);
    gx->add_option("--alphabet", gram.alphabet);
    gx->add_option("--n", gram.n)->required();
    gx->add_option("--pattern", gram.pattern)->required();
    gx->add_option("--samples", gram.samples);
    gx->add_option("--seed", gram.seed);
    bind(gx, run_grammar_xn, gram);
    auto* gm = gram_cmd->add_subcommand("member", "Membership in a grammar or a built-in language");
    gm->add_option("--file", gram.file);
    gm->add_option("--lang", gram.lang, "anbn, L1 or L2");
    gm->add_option("--word", gram.word)->required();
    bind(gm, run_grammar_member, gram);

    // graph
    GraphArgs graph;
    auto* graph_cmd = app.add_subcommand("graph", "Multigraph metrics");
    graph_cmd->require_subcommand(1);
    auto* gmx = graph_cmd->add_subcommand("metrics", "Degrees, components, distances, spectrum");
    gmx->add_option("--edges", graph.edges)->required();
    gmx->add_flag("--spectrum", graph.spectrum);
    gmx->add_option("--tol", graph.tol);
    gmx->add_option("--config", graph.config, "v,b,r,k")->delimiter(',')->expected(4);
    bind(gmx, run_graph_metrics, graph);
    auto* gw = graph_cmd->add_subcommand("walks", "Walks of a given length (loops have length 2)");
    gw->add_option("--edges", graph.edges)->required();
    gw->add_option("--from", graph.from)->required();
    gw->add_option("--to", graph.to)->required();
    gw->add_option("--length", graph.length)->required();
    bind(gw, run_graph_walks, graph);
    auto* gp = graph_cmd->add_subcommand("from-partition", "Block cliques of a set partition");
    gp->add_option("--set", graph.set)->required();
    bind(gp, run_graph_from_partition, graph);

    // catalan
    CatalanArgs cat;
    auto* cat_cmd = app.add_subcommand("catalan", "Catalan words and circuit counts");
    cat_cmd->require_subcommand(1);
    auto* cc = cat_cmd->add_subcommand("check", "Pair-matched and catalan tests");
    cc->add_option("--word", cat.word)->required();
    bind(cc, run_catalan_check, cat);
    auto* cn = cat_cmd->add_subcommand("count", "Exact circuit count and normalized ratio");
    cn->add_option("--word", cat.word)->required();
    cn->add_option("--n", cat.n)->required();
    cn->add_flag("--brute", cat.brute, "Also scan all circuits by the definition");
    bind(cn, run_catalan_count, cat);
    auto* cl = cat_cmd->add_subcommand("limit", "Exact limit and optional Monte-Carlo estimate");
    cl->add_option("--word", cat.word)->required();
    cl->add_option("--mc", cat.mc, "Sample count")->check(CLI::PositiveNumber);
    cl->add_option("--seed", cat.seed);
    bind(cl, run_catalan_limit, cat);

    // dist
    DistArgs dist;
    auto* dist_cmd = app.add_subcommand("dist", "Re-identification and the tableau probability formula");
    dist_cmd->require_subcommand(1);
    auto* dl = dist_cmd->add_subcommand("link", "Uniform re-identification over matching rows");
    dl->add_option("--table", dist.table)->required();
    dl->add_option("--cols", dist.cols)->required();
    dl->add_option("--values", dist.values)->required();
    bind(dl, run_dist_link, dist);
    auto* dp = dist_cmd->add_subcommand("partition", "Entry positions grouped by value");
    dp->add_option("--table", dist.table)->required();
    bind(dp, run_dist_partition, dist);
    auto* dh = dist_cmd->add_subcommand("horn-prob", "c^gamma_{lambda,mu} / (3 * 2^(n+2))");
    dh->add_option("--gamma", dist.gamma)->required();
    dh->add_option("--lambda", dist.lambda)->required();
    dh->add_option("--mu", dist.mu)->required();
    dh->add_option("--n", dist.n)->required();
    bind(dh, run_dist_horn_prob, dist);

    // series
    SeriesArgs ser;
    auto* ser_cmd = app.add_subcommand("series", "Truncated generating functions of sequence constructions");
    ser_cmd->require_subcommand(1);
    auto* sq = ser_cmd->add_subcommand("seq", "1 / (1 - A(z))");
    sq->add_option("--atoms", ser.atoms, "Coefficients of A(z), e.g. 0,1,1")->required();
    sq->add_option("--order", ser.order);
    bind(sq, run_series_seq, ser);
    auto* sp = ser_cmd->add_subcommand("power", "A(z)^k");
    sp->add_option("--atoms", ser.atoms)->required();
    sp->add_option("--k", ser.k)->required();
    sp->add_option("--order", ser.order);
    bind(sp, run_series_power, ser);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
