#include "combilang/automaton.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace combilang {

FiniteAutomaton::FiniteAutomaton(AlphabetPtr alphabet, std::vector<std::string> states,
                                 const std::vector<NamedTransition>& transitions,
                                 const std::vector<std::string>& initial,
                                 const std::vector<std::string>& final_states)
    : alphabet_(std::move(alphabet)), names_(std::move(states))
{
    if (alphabet_->is_signed())
        throw std::invalid_argument("automata run over unsigned alphabets");
    std::map<std::string, std::size_t> index;
    for (std::size_t s = 0; s < names_.size(); ++s)
        if (!index.emplace(names_[s], s).second)
            throw std::invalid_argument("duplicate state: " + names_[s]);
    auto lookup = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end())
            throw std::invalid_argument("undeclared state: " + name);
        return it->second;
    };

    for (const auto& t : transitions) {
        auto letter = alphabet_->index_of(t.letter);
        if (letter == Alphabet::npos)
            throw std::invalid_argument(std::string("transition letter '") + t.letter + "' not in alphabet");
        transitions_.push_back({lookup(t.from), static_cast<std::uint32_t>(letter), lookup(t.to)});
    }
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

    for (const auto& s : initial)
        initial_.push_back(lookup(s));
    for (const auto& s : final_states)
        final_.push_back(lookup(s));
    for (auto* v : {&initial_, &final_}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }

    is_final_.assign(names_.size(), false);
    for (auto f : final_)
        is_final_[f] = true;
    delta_.assign(names_.size() * alphabet_->size(), {});
    for (const auto& t : transitions_)
        delta_[t.from * alphabet_->size() + t.letter].push_back(t.to);
}

namespace {

std::string state_name(const nlohmann::json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    throw std::invalid_argument("state names must be strings or integers");
}

std::vector<std::string> state_list(const nlohmann::json& doc, const char* key)
{
    if (!doc.contains(key) || !doc[key].is_array())
        throw std::invalid_argument(std::string("automaton JSON needs an array \"") + key + "\"");
    std::vector<std::string> out;
    for (const auto& v : doc[key])
        out.push_back(state_name(v));
    return out;
}

} // namespace

FiniteAutomaton FiniteAutomaton::from_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed automaton JSON: ") + e.what());
    }
    std::string letters;
    if (!doc.contains("alphabet") || !doc["alphabet"].is_array())
        throw std::invalid_argument("automaton JSON needs an array \"alphabet\"");
    for (const auto& v : doc["alphabet"]) {
        auto s = v.get<std::string>();
        if (s.size() != 1)
            throw std::invalid_argument("alphabet letters must be single characters");
        letters += s;
    }
    std::vector<NamedTransition> transitions;
    if (!doc.contains("transitions") || !doc["transitions"].is_array())
        throw std::invalid_argument("automaton JSON needs an array \"transitions\"");
    for (const auto& t : doc["transitions"]) {
        if (!t.is_array() || t.size() != 3 || !t[1].is_string() || t[1].get<std::string>().size() != 1)
            throw std::invalid_argument("transitions must be [from, \"letter\", to]");
        transitions.push_back({state_name(t[0]), t[1].get<std::string>()[0], state_name(t[2])});
    }
    return FiniteAutomaton(make_alphabet(letters), state_list(doc, "states"), transitions,
                           state_list(doc, "initial"), state_list(doc, "final"));
}

FiniteAutomaton FiniteAutomaton::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open automaton file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

std::string FiniteAutomaton::to_json() const
{
    const bool numeric = std::all_of(names_.begin(), names_.end(), [](const std::string& s) {
        return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](char c) {
                   return c >= '0' && c <= '9';
               });
    });
    auto name = [&](std::size_t s) -> nlohmann::json {
        if (numeric)
            return std::stoi(names_[s]);
        return names_[s];
    };
    nlohmann::json doc;
    doc["states"] = nlohmann::json::array();
    for (std::size_t s = 0; s < names_.size(); ++s)
        doc["states"].push_back(name(s));
    doc["alphabet"] = nlohmann::json::array();
    for (char c : alphabet_->letters())
        doc["alphabet"].push_back(std::string(1, c));
    doc["initial"] = nlohmann::json::array();
    for (auto s : initial_)
        doc["initial"].push_back(name(s));
    doc["final"] = nlohmann::json::array();
    for (auto s : final_)
        doc["final"].push_back(name(s));
    doc["transitions"] = nlohmann::json::array();
    for (const auto& t : transitions_)
        doc["transitions"].push_back({name(t.from), std::string(1, alphabet_->letter(t.letter)), name(t.to)});
    return doc.dump();
}

std::vector<std::size_t> FiniteAutomaton::step(const std::vector<std::size_t>& states, std::uint32_t letter) const
{
    std::vector<std::size_t> next;
    for (auto s : states) {
        const auto& targets = delta_[s * alphabet_->size() + letter];
        next.insert(next.end(), targets.begin(), targets.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
}

bool FiniteAutomaton::any_final(const std::vector<std::size_t>& states) const
{
    return std::any_of(states.begin(), states.end(), [&](std::size_t s) { return is_final_[s]; });
}

bool FiniteAutomaton::accepts(const Word& w) const
{
    if (!(*w.alphabet() == *alphabet_))
        throw AlphabetMismatch();
    auto current = initial_;
    for (const auto& s : w.symbols()) {
        current = step(current, s.letter);
        if (current.empty())
            return false;
    }
    return any_final(current);
}

bool FiniteAutomaton::accepts(std::string_view w) const
{
    for (char c : w)
        if (c == '\'' || !alphabet_->contains(c))
            throw std::invalid_argument(std::string("letter '") + c + "' is foreign to the automaton");
    return accepts(Word::parse(alphabet_, w));
}

// ---------------------------------------------------------------------------

RationalExpr RationalExpr::empty()
{
    return RationalExpr(std::make_shared<const Node>(Node{Kind::Empty, 0, {}}));
}

RationalExpr RationalExpr::epsilon() { return star(empty()); }

RationalExpr RationalExpr::letter(char c)
{
    return RationalExpr(std::make_shared<const Node>(Node{Kind::Letter, c, {}}));
}

RationalExpr RationalExpr::unite(RationalExpr a, RationalExpr b)
{
    return RationalExpr(std::make_shared<const Node>(Node{Kind::Union, 0, {std::move(a), std::move(b)}}));
}

RationalExpr RationalExpr::product(RationalExpr a, RationalExpr b)
{
    return RationalExpr(std::make_shared<const Node>(Node{Kind::Product, 0, {std::move(a), std::move(b)}}));
}

RationalExpr RationalExpr::star(RationalExpr a)
{
    return RationalExpr(std::make_shared<const Node>(Node{Kind::Star, 0, {std::move(a)}}));
}

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    RationalExpr parse()
    {
        auto e = sum();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected character");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("rational expression: " + what + " at offset " + std::to_string(pos_));
    }

    void skip_space()
    {
        while (pos_ < text_.size() && text_[pos_] == ' ')
            ++pos_;
    }

    bool starts_atom()
    {
        skip_space();
        if (pos_ >= text_.size())
            return false;
        char c = text_[pos_];
        return c != '+' && c != '|' && c != ')' && c != '*';
    }

    RationalExpr sum()
    {
        auto e = prod();
        skip_space();
        while (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '|')) {
            ++pos_;
            e = RationalExpr::unite(e, prod());
            skip_space();
        }
        return e;
    }

    RationalExpr prod()
    {
        if (!starts_atom())
            fail("expected an operand");
        auto e = atom();
        while (starts_atom())
            e = RationalExpr::product(e, atom());
        return e;
    }

    RationalExpr atom()
    {
        auto e = base();
        skip_space();
        while (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            e = RationalExpr::star(e);
            skip_space();
        }
        return e;
    }

    RationalExpr base()
    {
        skip_space();
        char c = text_[pos_++];
        if (c == '(') {
            auto e = sum();
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                fail("missing ')'");
            ++pos_;
            return e;
        }
        if (c == '0')
            return RationalExpr::empty();
        if (c == '1')
            return RationalExpr::epsilon();
        return RationalExpr::letter(c);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

RationalExpr RationalExpr::parse(std::string_view text) { return ExprParser(text).parse(); }

std::string RationalExpr::str() const
{
    switch (kind()) {
    case Kind::Empty:
        return "0";
    case Kind::Letter:
        return std::string(1, symbol());
    case Kind::Union:
        return "(" + left().str() + "+" + right().str() + ")";
    case Kind::Product:
        return left().str() + right().str();
    case Kind::Star:
        if (left().kind() == Kind::Empty)
            return "1";
        if (left().kind() == Kind::Letter)
            return left().str() + "*";
        return "(" + left().str() + ")*";
    }
    return {};
}

namespace {

// Automaton with empty-label moves, used only while building from an expression.
struct EpsilonNfa {
    struct Edge {
        std::size_t from;
        int letter; // -1 for an empty-label move
        std::size_t to;
    };
    std::size_t states = 0;
    std::vector<Edge> edges;

    std::size_t add_state() { return states++; }
};

struct Fragment {
    std::size_t start;
    std::size_t accept;
};

Fragment build(EpsilonNfa& nfa, const RationalExpr& e, const Alphabet& alphabet)
{
    using Kind = RationalExpr::Kind;
    switch (e.kind()) {
    case Kind::Empty: {
        auto s = nfa.add_state();
        auto f = nfa.add_state();
        return {s, f};
    }
    case Kind::Letter: {
        auto idx = alphabet.index_of(e.symbol());
        if (idx == Alphabet::npos)
            throw std::invalid_argument(std::string("expression letter '") + e.symbol() + "' not in alphabet");
        auto s = nfa.add_state();
        auto f = nfa.add_state();
        nfa.edges.push_back({s, static_cast<int>(idx), f});
        return {s, f};
    }
    case Kind::Union: {
        auto a = build(nfa, e.left(), alphabet);
        auto b = build(nfa, e.right(), alphabet);
        auto s = nfa.add_state();
        auto f = nfa.add_state();
        nfa.edges.push_back({s, -1, a.start});
        nfa.edges.push_back({s, -1, b.start});
        nfa.edges.push_back({a.accept, -1, f});
        nfa.edges.push_back({b.accept, -1, f});
        return {s, f};
    }
    case Kind::Product: {
        auto a = build(nfa, e.left(), alphabet);
        auto b = build(nfa, e.right(), alphabet);
        nfa.edges.push_back({a.accept, -1, b.start});
        return {a.start, b.accept};
    }
    case Kind::Star: {
        auto a = build(nfa, e.left(), alphabet);
        auto s = nfa.add_state();
        auto f = nfa.add_state();
        nfa.edges.push_back({s, -1, a.start});
        nfa.edges.push_back({s, -1, f});
        nfa.edges.push_back({a.accept, -1, a.start});
        nfa.edges.push_back({a.accept, -1, f});
        return {s, f};
    }
    }
    throw std::logic_error("unknown expression node");
}

} // namespace

FiniteAutomaton from_expr(const RationalExpr& e, const AlphabetPtr& alphabet)
{
    EpsilonNfa nfa;
    const Fragment top = build(nfa, e, *alphabet);

    std::vector<std::vector<std::size_t>> eps(nfa.states);
    for (const auto& edge : nfa.edges)
        if (edge.letter < 0)
            eps[edge.from].push_back(edge.to);

    // closure[q]: states reachable from q by empty-label moves (q included).
    std::vector<std::vector<bool>> closure(nfa.states, std::vector<bool>(nfa.states, false));
    for (std::size_t q = 0; q < nfa.states; ++q) {
        std::vector<std::size_t> stack{q};
        closure[q][q] = true;
        while (!stack.empty()) {
            auto p = stack.back();
            stack.pop_back();
            for (auto r : eps[p])
                if (!closure[q][r]) {
                    closure[q][r] = true;
                    stack.push_back(r);
                }
        }
    }

    // q --a--> r whenever some p in closure(q) has p --a--> r.
    std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> moves(nfa.states);
    for (std::size_t q = 0; q < nfa.states; ++q)
        for (const auto& edge : nfa.edges)
            if (edge.letter >= 0 && closure[q][edge.from])
                moves[q].emplace_back(static_cast<std::uint32_t>(edge.letter), edge.to);

    // Keep states reachable from the start, numbered in discovery order.
    std::vector<long> number(nfa.states, -1);
    std::vector<std::size_t> order{top.start};
    number[top.start] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (const auto& [letter, r] : moves[order[head]])
            if (number[r] < 0) {
                number[r] = static_cast<long>(order.size());
                order.push_back(r);
            }

    std::vector<std::string> names;
    std::vector<std::string> finals;
    std::vector<FiniteAutomaton::NamedTransition> transitions;
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        names.push_back("q" + std::to_string(idx));
        if (closure[order[idx]][top.accept])
            finals.push_back(names.back());
    }
    for (std::size_t idx = 0; idx < order.size(); ++idx)
        for (const auto& [letter, r] : moves[order[idx]])
            transitions.push_back({names[idx], alphabet->letter(letter),
                                   "q" + std::to_string(number[r])});
    return FiniteAutomaton(alphabet, std::move(names), transitions, {"q0"}, finals);
}

FiniteLanguage enumerate_language(const FiniteAutomaton& m, std::size_t max_len)
{
    if (max_len > 16)
        throw std::out_of_range("language enumeration supports max_len <= 16");
    constexpr std::size_t max_words = std::size_t{1} << 22;

    std::set<Word> words;
    std::vector<Symbol> prefix;
    // Depth-first over prefixes whose reachable state set is nonempty.
    auto visit = [&](auto&& self, const std::vector<std::size_t>& states) -> void {
        if (m.any_final(states)) {
            words.emplace(m.alphabet(), prefix);
            if (words.size() > max_words)
                throw std::length_error("accepted language too large to enumerate");
        }
        if (prefix.size() == max_len)
            return;
        for (std::uint32_t a = 0; a < m.alphabet()->size(); ++a) {
            auto next = m.step(states, a);
            if (next.empty())
                continue;
            prefix.push_back({a, +1});
            self(self, next);
            prefix.pop_back();
        }
    };
    visit(visit, m.initial());
    return FiniteLanguage(m.alphabet(), max_len, std::move(words));
}

LanguageDiff compare_languages(const FiniteAutomaton& a, const FiniteAutomaton& b, std::size_t max_len)
{
    if (!(*a.alphabet() == *b.alphabet()))
        throw AlphabetMismatch();
    auto la = enumerate_language(a, max_len).strings();
    auto lb = enumerate_language(b, max_len).strings();
    LanguageDiff diff;
    diff.max_len = max_len;
    std::set_difference(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(diff.only_first));
    std::set_difference(lb.begin(), lb.end(), la.begin(), la.end(), std::back_inserter(diff.only_second));
    return diff;
}

} // namespace combilang
