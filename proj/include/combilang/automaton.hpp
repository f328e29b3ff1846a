#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "combilang/word.hpp"

namespace combilang {

struct Transition {
    std::size_t from = 0;
    std::uint32_t letter = 0;
    std::size_t to = 0;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Nondeterministic finite automaton without empty-label moves.
class FiniteAutomaton {
public:
    struct NamedTransition {
        std::string from;
        char letter;
        std::string to;
    };

    FiniteAutomaton(AlphabetPtr alphabet, std::vector<std::string> states,
                    const std::vector<NamedTransition>& transitions,
                    const std::vector<std::string>& initial, const std::vector<std::string>& final_states);

    /// {"states":[...], "alphabet":[...], "initial":[...], "final":[...],
    ///  "transitions":[[from,"a",to],...]}; state names may be numbers or strings.
    static FiniteAutomaton from_json(std::string_view text);
    static FiniteAutomaton load(const std::string& path);
    std::string to_json() const;

    const AlphabetPtr& alphabet() const { return alphabet_; }
    std::size_t state_count() const { return names_.size(); }
    const std::vector<std::string>& state_names() const { return names_; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    const std::vector<std::size_t>& initial() const { return initial_; }
    const std::vector<std::size_t>& final_states() const { return final_; }

    /// Subset simulation; throws on letters outside the alphabet.
    bool accepts(const Word& w) const;
    bool accepts(std::string_view w) const;

    /// Successor state set (sorted, deduplicated) of `states` under `letter`.
    std::vector<std::size_t> step(const std::vector<std::size_t>& states, std::uint32_t letter) const;
    bool any_final(const std::vector<std::size_t>& states) const;

private:
    AlphabetPtr alphabet_;
    std::vector<std::string> names_;
    std::vector<Transition> transitions_;
    std::vector<std::size_t> initial_;
    std::vector<std::size_t> final_;
    std::vector<bool> is_final_;
    // delta_[state * |A| + letter] -> targets
    std::vector<std::vector<std::size_t>> delta_;
};

/// Expression tree over {empty set, letter, union, product, star}.
class RationalExpr {
public:
    enum class Kind { Empty, Letter, Union, Product, Star };

    static RationalExpr empty();
    /// The empty word, written as star(empty).
    static RationalExpr epsilon();
    static RationalExpr letter(char c);
    static RationalExpr unite(RationalExpr a, RationalExpr b);
    static RationalExpr product(RationalExpr a, RationalExpr b);
    static RationalExpr star(RationalExpr a);

    /// Grammar: sum := prod ('+' prod)* ; prod := atom+ ; atom := base '*'* ;
    /// base := letter | '0' (empty set) | '1' (empty word) | '(' sum ')'.
    /// '|' is accepted as a synonym for '+'.
    static RationalExpr parse(std::string_view text);

    Kind kind() const { return node_->kind; }
    char symbol() const { return node_->symbol; }
    const RationalExpr& left() const { return node_->children.at(0); }
    const RationalExpr& right() const { return node_->children.at(1); }

    std::string str() const;

private:
    struct Node {
        Kind kind;
        char symbol = 0;
        std::vector<RationalExpr> children;
    };
    explicit RationalExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Compositional construction (union, product, star glued with empty-label
/// moves), followed by closure elimination of those moves and trimming.
FiniteAutomaton from_expr(const RationalExpr& e, const AlphabetPtr& alphabet);

/// All accepted words of length <= max_len (max_len <= 16).
FiniteLanguage enumerate_language(const FiniteAutomaton& m, std::size_t max_len);

struct LanguageDiff {
    std::size_t max_len = 0;
    std::vector<std::string> only_first;
    std::vector<std::string> only_second;
    bool equal() const { return only_first.empty() && only_second.empty(); }
};

/// Symmetric difference of two recognized languages restricted to length <= max_len.
LanguageDiff compare_languages(const FiniteAutomaton& a, const FiniteAutomaton& b, std::size_t max_len);

} // namespace combilang
