#include "combilang/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace combilang {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_ws(std::string_view s)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

} // namespace

Grammar::Grammar(std::vector<std::string> nonterminals, AlphabetPtr terminals,
                 std::vector<Production> productions, std::size_t start)
    : nonterminals_(std::move(nonterminals)), terminals_(std::move(terminals)),
      productions_(std::move(productions)), start_(start)
{
    if (start_ >= nonterminals_.size())
        throw std::invalid_argument("start symbol must be a nonterminal");
    for (const auto& p : productions_) {
        if (p.head >= nonterminals_.size())
            throw std::invalid_argument("production head out of range");
        for (const auto& s : p.body) {
            if (s.terminal ? s.index >= terminals_->size() : s.index >= nonterminals_.size())
                throw std::invalid_argument("production body references an undeclared symbol");
        }
    }
}

Grammar Grammar::parse(std::string_view text)
{
    struct RawLine {
        std::string head;
        std::vector<std::vector<std::string>> alternatives;
    };
    std::vector<RawLine> lines;
    std::vector<std::string> heads;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto body = trim(line);
        if (body.empty())
            continue;
        auto arrow = body.find("->");
        if (arrow == std::string_view::npos)
            throw std::invalid_argument("grammar line " + std::to_string(line_no) + ": missing '->'");
        auto head_tokens = split_ws(body.substr(0, arrow));
        if (head_tokens.size() != 1)
            throw std::invalid_argument("grammar line " + std::to_string(line_no) +
                                        ": the head must be a single symbol");
        RawLine raw{head_tokens[0], {}};
        auto rhs = body.substr(arrow + 2);
        std::size_t start = 0;
        for (;;) {
            auto bar = rhs.find('|', start);
            auto alt = split_ws(rhs.substr(start, bar == std::string_view::npos ? rhs.npos : bar - start));
            if (alt.empty())
                throw std::invalid_argument("grammar line " + std::to_string(line_no) +
                                            ": empty alternative (write ';' for the empty word)");
            if (alt.size() == 1 && alt[0] == ";")
                alt.clear();
            raw.alternatives.push_back(std::move(alt));
            if (bar == std::string_view::npos)
                break;
            start = bar + 1;
        }
        if (std::find(heads.begin(), heads.end(), raw.head) == heads.end())
            heads.push_back(raw.head);
        lines.push_back(std::move(raw));
    }
    if (lines.empty())
        throw std::invalid_argument("grammar has no productions");

    std::string letters;
    for (const auto& raw : lines)
        for (const auto& alt : raw.alternatives)
            for (const auto& tok : alt) {
                if (std::find(heads.begin(), heads.end(), tok) != heads.end())
                    continue;
                if (tok.size() != 1 || tok == ";")
                    throw std::invalid_argument("grammar symbol '" + tok +
                                                "' is neither a nonterminal nor a single-letter terminal");
                if (letters.find(tok[0]) == std::string::npos)
                    letters += tok[0];
            }
    if (letters.empty())
        throw std::invalid_argument("grammar has no terminal symbols");
    std::sort(letters.begin(), letters.end());
    auto alphabet = make_alphabet(letters);

    std::vector<Production> productions;
    for (const auto& raw : lines) {
        auto head = static_cast<std::size_t>(std::find(heads.begin(), heads.end(), raw.head) - heads.begin());
        for (const auto& alt : raw.alternatives) {
            Production p{head, {}};
            for (const auto& tok : alt) {
                auto it = std::find(heads.begin(), heads.end(), tok);
                if (it != heads.end())
                    p.body.push_back({false, static_cast<std::size_t>(it - heads.begin())});
                else
                    p.body.push_back({true, alphabet->index_of(tok[0])});
            }
            productions.push_back(std::move(p));
        }
    }
    return Grammar(std::move(heads), std::move(alphabet), std::move(productions), 0);
}

Grammar Grammar::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open grammar file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string Grammar::str() const
{
    std::string out;
    for (std::size_t a = 0; a < nonterminals_.size(); ++a) {
        std::string line = nonterminals_[a] + " ->";
        bool first = true;
        for (const auto& p : productions_) {
            if (p.head != a)
                continue;
            if (!first)
                line += " |";
            first = false;
            if (p.body.empty())
                line += " ;";
            for (const auto& s : p.body)
                line += " " + (s.terminal ? std::string(1, terminals_->letter(s.index)) : nonterminals_[s.index]);
        }
        if (!first)
            out += line + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------

GrammarEngine::GrammarEngine(Grammar grammar, std::size_t max_len)
    : grammar_(std::move(grammar)), max_len_(std::max(max_len, ambiguity_check_length))
{
    if (max_len > max_supported_length)
        throw std::out_of_range("grammar counting supports lengths up to " +
                                std::to_string(max_supported_length));

    const auto& prods = grammar_.productions();
    const std::size_t nts = grammar_.nonterminals().size();
    node_count_ = nts;
    for (const auto& p : prods) {
        item_base_.push_back(node_count_);
        node_count_ += p.body.size() + 1;
    }

    // Node n < nts is a nonterminal; item (p, i) stands for body[i..] of production p.
    auto fixpoint = [&](auto terminal_value) {
        std::vector<bool> v(node_count_, false);
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t p = 0; p < prods.size(); ++p) {
                const auto& body = prods[p].body;
                bool suffix = true; // body[i..] has the property
                for (std::size_t i = body.size() + 1; i-- > 0;) {
                    if (i < body.size())
                        suffix = suffix && (body[i].terminal ? terminal_value : v[body[i].index]);
                    if (suffix && !v[item_node(p, i)]) {
                        v[item_node(p, i)] = true;
                        changed = true;
                    }
                }
                if (v[item_node(p, 0)] && !v[prods[p].head]) {
                    v[prods[p].head] = true;
                    changed = true;
                }
            }
        }
        return v;
    };
    const auto productive = fixpoint(true);
    const auto nullable = fixpoint(false);

    std::vector<bool> reachable(node_count_, false);
    std::vector<std::size_t> stack{grammar_.start()};
    reachable[grammar_.start()] = true;
    while (!stack.empty()) {
        auto a = stack.back();
        stack.pop_back();
        for (std::size_t p = 0; p < prods.size(); ++p) {
            if (prods[p].head != a)
                continue;
            for (std::size_t i = 0; i <= prods[p].body.size(); ++i)
                reachable[item_node(p, i)] = true;
            for (const auto& s : prods[p].body)
                if (!s.terminal && !reachable[s.index]) {
                    reachable[s.index] = true;
                    stack.push_back(s.index);
                }
        }
    }

    std::vector<bool> live(node_count_);
    for (std::size_t v = 0; v < node_count_; ++v)
        live[v] = productive[v] && reachable[v];

    // deps[v]: nodes whose value at length n is needed for v at the same n.
    std::vector<std::vector<std::size_t>> deps(node_count_);
    for (std::size_t p = 0; p < prods.size(); ++p) {
        const auto& body = prods[p].body;
        if (live[prods[p].head] && live[item_node(p, 0)])
            deps[prods[p].head].push_back(item_node(p, 0));
        for (std::size_t i = 0; i < body.size(); ++i) {
            auto self = item_node(p, i);
            auto next = item_node(p, i + 1);
            if (!live[self] || body[i].terminal)
                continue;
            if (nullable[next] && live[body[i].index])
                deps[self].push_back(body[i].index);
            if (nullable[body[i].index] && live[next])
                deps[self].push_back(next);
        }
    }

    // Kahn's algorithm; leftover live nodes lie on a cycle.
    std::vector<std::size_t> pending(node_count_, 0);
    std::vector<std::vector<std::size_t>> users(node_count_);
    for (std::size_t v = 0; v < node_count_; ++v)
        for (auto d : deps[v]) {
            ++pending[v];
            users[d].push_back(v);
        }
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < node_count_; ++v)
        if (live[v] && pending[v] == 0)
            ready.push_back(v);
    for (std::size_t head = 0; head < ready.size(); ++head)
        for (auto u : users[ready[head]])
            if (--pending[u] == 0)
                ready.push_back(u);
    order_ = std::move(ready);
    const auto live_count = static_cast<std::size_t>(std::count(live.begin(), live.end(), true));
    if (order_.size() != live_count) {
        std::string culprit;
        for (std::size_t v = 0; v < nts; ++v)
            if (live[v] && pending[v] > 0) {
                culprit = grammar_.nonterminals()[v];
                break;
            }
        throw NonConvertibleGrammar("grammar has a cycle of unit/empty productions through '" + culprit +
                                    "': some words have infinitely many derivations");
    }

    table_.assign(node_count_, std::vector<BigInt>(max_len_ + 1, BigInt(0)));
    std::vector<std::size_t> production_of(node_count_, 0);
    std::vector<std::size_t> position_of(node_count_, 0);
    for (std::size_t p = 0; p < prods.size(); ++p)
        for (std::size_t i = 0; i <= prods[p].body.size(); ++i) {
            production_of[item_node(p, i)] = p;
            position_of[item_node(p, i)] = i;
        }

    for (std::size_t n = 0; n <= max_len_; ++n) {
        for (auto v : order_) {
            BigInt value = 0;
            if (v < nts) {
                for (std::size_t p = 0; p < prods.size(); ++p)
                    if (prods[p].head == v)
                        value += table_[item_node(p, 0)][n];
            } else {
                const auto p = production_of[v];
                const auto i = position_of[v];
                const auto& body = prods[p].body;
                if (i == body.size()) {
                    value = n == 0 ? 1 : 0;
                } else if (body[i].terminal) {
                    if (n >= 1)
                        value = table_[v + 1][n - 1];
                } else {
                    const auto& head = table_[body[i].index];
                    const auto& rest = table_[v + 1];
                    for (std::size_t l = 0; l <= n; ++l)
                        if (head[l] != 0 && rest[n - l] != 0)
                            value += head[l] * rest[n - l];
                }
            }
            table_[v][n] = std::move(value);
        }
    }

    // Desk-scale ambiguity check.
    constexpr std::uint64_t max_checked = std::uint64_t{1} << 16;
    for (std::size_t n = 0; n <= ambiguity_check_length; ++n) {
        const BigInt& total = table_[grammar_.start()][n];
        if (total > max_checked)
            continue;
        std::set<std::vector<Symbol>> words;
        const auto count = total.convert_to<std::uint64_t>();
        for (std::uint64_t r = 0; r < count; ++r) {
            std::vector<Symbol> out;
            unrank_node(grammar_.start(), n, BigInt(r), out);
            words.insert(std::move(out));
        }
        ambiguity_.checked_lengths.push_back(n);
        if (words.size() != count && !ambiguity_.ambiguous) {
            ambiguity_.ambiguous = true;
            ambiguity_.first_ambiguous_length = n;
        }
    }
}

void GrammarEngine::check_length(std::size_t n) const
{
    if (n > max_len_)
        throw std::out_of_range("length " + std::to_string(n) + " exceeds the engine's table (" +
                                std::to_string(max_len_) + ")");
}

const BigInt& GrammarEngine::derivations(std::size_t n) const
{
    return derivations(grammar_.start(), n);
}

const BigInt& GrammarEngine::derivations(std::size_t nonterminal, std::size_t n) const
{
    check_length(n);
    if (nonterminal >= grammar_.nonterminals().size())
        throw std::out_of_range("nonterminal index out of range");
    return table_[nonterminal][n];
}

BigInt GrammarEngine::count_words(std::size_t n) const
{
    if (ambiguity_.ambiguous)
        throw AmbiguousGrammar("grammar is ambiguous (two derivations of one word of length " +
                               std::to_string(ambiguity_.first_ambiguous_length) +
                               "); derivation counts would not count words");
    return derivations(n);
}

void GrammarEngine::unrank_node(std::size_t node, std::size_t n, BigInt rank, std::vector<Symbol>& out) const
{
    const auto& prods = grammar_.productions();
    const std::size_t nts = grammar_.nonterminals().size();
    for (;;) {
        if (node < nts) {
            bool found = false;
            for (std::size_t p = 0; p < prods.size(); ++p) {
                if (prods[p].head != node)
                    continue;
                const BigInt& c = table_[item_node(p, 0)][n];
                if (rank < c) {
                    node = item_node(p, 0);
                    found = true;
                    break;
                }
                rank -= c;
            }
            if (!found)
                throw std::out_of_range("derivation rank out of range");
            continue;
        }

        // Locate the production owning this item node.
        auto it = std::upper_bound(item_base_.begin(), item_base_.end(), node);
        const auto p = static_cast<std::size_t>(it - item_base_.begin()) - 1;
        const auto i = node - item_base_[p];
        const auto& body = prods[p].body;
        if (i == body.size())
            return;
        if (body[i].terminal) {
            out.push_back({static_cast<std::uint32_t>(body[i].index), +1});
            node = node + 1;
            n -= 1;
            continue;
        }
        const auto& head = table_[body[i].index];
        const auto& rest = table_[node + 1];
        bool found = false;
        for (std::size_t l = 0; l <= n; ++l) {
            if (head[l] == 0 || rest[n - l] == 0)
                continue;
            BigInt c = head[l] * rest[n - l];
            if (rank < c) {
                BigInt q, r;
                boost::multiprecision::divide_qr(rank, rest[n - l], q, r);
                unrank_node(body[i].index, l, std::move(q), out);
                node = node + 1;
                n -= l;
                rank = std::move(r);
                found = true;
                break;
            }
            rank -= c;
        }
        if (!found)
            throw std::out_of_range("derivation rank out of range");
    }
}

Word GrammarEngine::unrank(std::size_t n, const BigInt& rank) const
{
    check_length(n);
    if (rank < 0 || rank >= derivations(n))
        throw std::out_of_range("derivation rank out of range");
    std::vector<Symbol> out;
    unrank_node(grammar_.start(), n, rank, out);
    return Word(grammar_.terminals(), std::move(out));
}

Word GrammarEngine::sample(std::size_t n, Rng& rng) const
{
    check_length(n);
    if (ambiguity_.ambiguous)
        throw AmbiguousGrammar("uniform sampling over words needs an unambiguous grammar");
    const BigInt& total = derivations(n);
    if (total == 0)
        throw EmptySlice("the grammar derives no word of length " + std::to_string(n));
    return unrank(n, rng.uniform_below(total));
}

bool GrammarEngine::derives(const Word& w) const
{
    if (!(*w.alphabet() == *grammar_.terminals()))
        throw AlphabetMismatch();
    const auto& prods = grammar_.productions();
    const std::size_t nts = grammar_.nonterminals().size();
    const std::size_t len = w.size();
    for (const auto& s : w.symbols())
        if (s.sign < 0)
            return false;

    // can[(node * (len+1) + start) * (len+1) + span]
    const std::size_t stride = len + 1;
    std::vector<char> can(node_count_ * stride * stride, 0);
    auto at = [&](std::size_t node, std::size_t s, std::size_t l) -> char& {
        return can[(node * stride + s) * stride + l];
    };

    for (std::size_t l = 0; l <= len; ++l)
        for (std::size_t s = 0; s + l <= len; ++s)
            for (auto v : order_) {
                char ok = 0;
                if (v < nts) {
                    for (std::size_t p = 0; p < prods.size() && !ok; ++p)
                        if (prods[p].head == v)
                            ok = at(item_node(p, 0), s, l);
                } else {
                    auto it = std::upper_bound(item_base_.begin(), item_base_.end(), v);
                    const auto p = static_cast<std::size_t>(it - item_base_.begin()) - 1;
                    const auto i = v - item_base_[p];
                    const auto& body = prods[p].body;
                    if (i == body.size()) {
                        ok = l == 0;
                    } else if (body[i].terminal) {
                        ok = l >= 1 && w[s].letter == body[i].index && at(v + 1, s + 1, l - 1);
                    } else {
                        for (std::size_t a = 0; a <= l && !ok; ++a)
                            ok = at(body[i].index, s, a) && at(v + 1, s + a, l - a);
                    }
                }
                at(v, s, l) = ok;
            }
    return at(grammar_.start(), 0, len) != 0;
}

BigInt count_words(const Grammar& g, std::size_t n) { return GrammarEngine(g, n).count_words(n); }

Word sample_uniform(const Grammar& g, std::size_t n, std::uint64_t seed)
{
    GrammarEngine engine(g, n);
    Rng rng(seed);
    return engine.sample(n, rng);
}

// ---------------------------------------------------------------------------

ParametricLanguage parse_parametric(std::string_view name)
{
    if (name == "anbn")
        return ParametricLanguage::AnBn;
    if (name == "L1")
        return ParametricLanguage::L1;
    if (name == "L2")
        return ParametricLanguage::L2;
    throw std::invalid_argument("unknown parametric language '" + std::string(name) +
                                "' (expected anbn, L1 or L2)");
}

bool parametric_member(ParametricLanguage lang, std::string_view w)
{
    std::string_view letters = lang == ParametricLanguage::AnBn ? "ab" : lang == ParametricLanguage::L1 ? "abc" : "abcd";
    for (char c : w)
        if (letters.find(c) == std::string_view::npos)
            throw std::invalid_argument(std::string("letter '") + c + "' is foreign to the language");

    // Maximal blocks must be exactly the letters in order.
    std::vector<std::size_t> blocks;
    std::size_t pos = 0;
    for (char c : letters) {
        std::size_t start = pos;
        while (pos < w.size() && w[pos] == c)
            ++pos;
        blocks.push_back(pos - start);
    }
    if (pos != w.size())
        return false;
    if (std::any_of(blocks.begin(), blocks.end(), [](std::size_t b) { return b == 0; }))
        return false;
    switch (lang) {
    case ParametricLanguage::AnBn:
        return blocks[0] == blocks[1];
    case ParametricLanguage::L1:
        return blocks[0] == blocks[1] && blocks[1] == blocks[2];
    case ParametricLanguage::L2:
        return blocks[0] == blocks[2] && blocks[1] == blocks[3];
    }
    return false;
}

std::size_t pattern_occurrences(const Word& w, const Word& p)
{
    if (p.empty())
        throw std::invalid_argument("pattern must be nonempty");
    if (!w.same_alphabet(p))
        throw AlphabetMismatch();
    std::size_t count = 0;
    for (std::size_t i = 0; i + p.size() <= w.size(); ++i)
        if (std::equal(p.symbols().begin(), p.symbols().end(), w.symbols().begin() + static_cast<std::ptrdiff_t>(i)))
            ++count;
    return count;
}

std::size_t pattern_occurrences(std::string_view w, std::string_view p)
{
    if (p.empty())
        throw std::invalid_argument("pattern must be nonempty");
    std::size_t count = 0;
    for (std::size_t i = 0; i + p.size() <= w.size(); ++i)
        if (w.compare(i, p.size(), p) == 0)
            ++count;
    return count;
}

// ---------------------------------------------------------------------------

Rational OccurrenceDistribution::total() const
{
    Rational t = 0;
    for (const auto& [k, prob] : probabilities)
        t += prob;
    return t;
}

std::string OccurrenceDistribution::to_json() const
{
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& [k, prob] : probabilities)
        doc[std::to_string(k)] = to_pq(prob);
    return doc.dump();
}

namespace {

OccurrenceDistribution finish(std::size_t n, std::string_view pattern,
                              const std::map<std::size_t, std::uint64_t>& tally, std::uint64_t total,
                              std::uint64_t samples)
{
    OccurrenceDistribution d;
    d.n = n;
    d.pattern = std::string(pattern);
    d.samples = samples;
    for (const auto& [k, c] : tally)
        d.probabilities[k] = Rational(BigInt(c), BigInt(total));
    return d;
}

} // namespace

OccurrenceDistribution xn_distribution(const WordSource& source, std::size_t n, std::string_view pattern,
                                       const DistributionMode& mode)
{
    const AlphabetPtr alphabet = std::holds_alternative<UniformWords>(source)
                                     ? std::get<UniformWords>(source).alphabet
                                     : std::get<GrammarWords>(source).engine->grammar().terminals();
    const Word p = Word::parse(alphabet, pattern);
    if (p.empty())
        throw std::invalid_argument("pattern must be nonempty");

    std::map<std::size_t, std::uint64_t> tally;

    if (const auto* uniform = std::get_if<UniformWords>(&source)) {
        const std::uint64_t k = uniform->alphabet->size();
        if (std::holds_alternative<ExactMode>(mode)) {
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < n; ++i) {
                total *= k;
                if (total > max_exact_words)
                    throw std::length_error("exact mode needs |A|^n <= 2^24");
            }
            std::vector<Symbol> digits(n, Symbol{0, +1});
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                ++tally[pattern_occurrences(Word(alphabet, digits), p)];
                for (std::size_t pos = n; pos-- > 0;) {
                    if (++digits[pos].letter < k)
                        break;
                    digits[pos].letter = 0;
                }
            }
            return finish(n, pattern, tally, total, 0);
        }
        const auto& mc = std::get<MonteCarloMode>(mode);
        if (mc.samples == 0)
            throw std::invalid_argument("Monte-Carlo mode needs at least one sample");
        Rng rng(mc.seed);
        std::vector<Symbol> letters(n, Symbol{0, +1});
        for (std::uint64_t s = 0; s < mc.samples; ++s) {
            for (auto& sym : letters)
                sym.letter = static_cast<std::uint32_t>(rng.uniform_below(k));
            ++tally[pattern_occurrences(Word(alphabet, letters), p)];
        }
        return finish(n, pattern, tally, mc.samples, mc.samples);
    }

    const auto& engine = *std::get<GrammarWords>(source).engine;
    if (engine.ambiguity().ambiguous)
        throw AmbiguousGrammar("X_n over grammar words needs an unambiguous grammar");
    const BigInt& count = engine.derivations(n);
    if (count == 0)
        throw EmptySlice("the grammar derives no word of length " + std::to_string(n));
    if (std::holds_alternative<ExactMode>(mode)) {
        if (count > max_exact_words)
            throw std::length_error("exact mode needs at most 2^24 grammar words");
        const auto total = count.convert_to<std::uint64_t>();
        for (std::uint64_t r = 0; r < total; ++r)
            ++tally[pattern_occurrences(engine.unrank(n, BigInt(r)), p)];
        return finish(n, pattern, tally, total, 0);
    }
    const auto& mc = std::get<MonteCarloMode>(mode);
    if (mc.samples == 0)
        throw std::invalid_argument("Monte-Carlo mode needs at least one sample");
    Rng rng(mc.seed);
    for (std::uint64_t s = 0; s < mc.samples; ++s)
        ++tally[pattern_occurrences(engine.sample(n, rng), p)];
    return finish(n, pattern, tally, mc.samples, mc.samples);
}

double total_variation(const OccurrenceDistribution& p, const OccurrenceDistribution& q)
{
    std::set<std::size_t> keys;
    for (const auto& [k, v] : p.probabilities)
        keys.insert(k);
    for (const auto& [k, v] : q.probabilities)
        keys.insert(k);
    Rational sum = 0;
    for (auto k : keys) {
        Rational a = p.probabilities.count(k) ? p.probabilities.at(k) : Rational(0);
        Rational b = q.probabilities.count(k) ? q.probabilities.at(k) : Rational(0);
        sum += a > b ? a - b : b - a;
    }
    return to_double(sum / 2);
}

} // namespace combilang
