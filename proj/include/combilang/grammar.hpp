#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "combilang/exact.hpp"
#include "combilang/rng.hpp"
#include "combilang/word.hpp"

namespace combilang {

struct GrammarSymbol {
    bool terminal = false;
    std::size_t index = 0; // letter index for terminals, nonterminal index otherwise

    friend bool operator==(const GrammarSymbol&, const GrammarSymbol&) = default;
};

struct Production {
    std::size_t head = 0;
    std::vector<GrammarSymbol> body; // empty body derives the empty word
};

/// Context-free grammar. Text form, one head per line:
///
///     S -> a S b | ;
///
/// Tokens are whitespace separated; any token that heads a line is a
/// nonterminal, every other token must be a single-character terminal, and an
/// alternative consisting of ";" is the empty word. '#' starts a comment. The
/// head of the first line is the start symbol.
class Grammar {
public:
    Grammar(std::vector<std::string> nonterminals, AlphabetPtr terminals,
            std::vector<Production> productions, std::size_t start);

    static Grammar parse(std::string_view text);
    static Grammar load(const std::string& path);

    const std::vector<std::string>& nonterminals() const { return nonterminals_; }
    const AlphabetPtr& terminals() const { return terminals_; }
    const std::vector<Production>& productions() const { return productions_; }
    std::size_t start() const { return start_; }

    std::string str() const;

private:
    std::vector<std::string> nonterminals_;
    AlphabetPtr terminals_;
    std::vector<Production> productions_;
    std::size_t start_;
};

/// Some word has infinitely many derivations (a cycle of unit or empty
/// productions), so derivation counting cannot be normalized.
class NonConvertibleGrammar : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class AmbiguousGrammar : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class EmptySlice : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Result of the desk-scale ambiguity check: for each checked length the
/// derivations of the start symbol are unranked and their words deduplicated.
struct AmbiguityReport {
    bool ambiguous = false;
    std::size_t first_ambiguous_length = 0;
    std::vector<std::size_t> checked_lengths;
};

/// Exact derivation counts per (nonterminal, length), plus ranking and
/// uniform sampling of derivations. Every production is split into its
/// suffixes, which act as binary nodes; counts at the same length that depend
/// on each other through empty derivations are evaluated in dependency order.
///
/// Immutable after construction; queries are safe to call concurrently.
class GrammarEngine {
public:
    static constexpr std::size_t max_supported_length = 64;
    static constexpr std::size_t ambiguity_check_length = 10;

    GrammarEngine(Grammar grammar, std::size_t max_len);

    const Grammar& grammar() const { return grammar_; }
    std::size_t max_length() const { return max_len_; }

    /// Number of derivation trees of words of length n from the start symbol.
    const BigInt& derivations(std::size_t n) const;
    /// CountTable entry for a nonterminal.
    const BigInt& derivations(std::size_t nonterminal, std::size_t n) const;

    const AmbiguityReport& ambiguity() const { return ambiguity_; }

    /// Distinct words of length n; rejects grammars found ambiguous.
    BigInt count_words(std::size_t n) const;

    /// The derivation of the given rank (0 <= rank < derivations(n)).
    Word unrank(std::size_t n, const BigInt& rank) const;

    /// Uniform word of length n; rejects ambiguous grammars and empty slices.
    Word sample(std::size_t n, Rng& rng) const;

    /// Membership of w in L(G).
    bool derives(const Word& w) const;

private:
    std::size_t item_node(std::size_t production, std::size_t position) const
    {
        return item_base_[production] + position;
    }
    void check_length(std::size_t n) const;
    void unrank_node(std::size_t node, std::size_t n, BigInt rank, std::vector<Symbol>& out) const;

    Grammar grammar_;
    std::size_t max_len_;
    std::size_t node_count_ = 0;
    std::vector<std::size_t> item_base_;
    std::vector<std::size_t> order_; // same-length evaluation order (live nodes)
    std::vector<std::vector<BigInt>> table_; // [node][length]
    AmbiguityReport ambiguity_;
};

BigInt count_words(const Grammar& g, std::size_t n);
Word sample_uniform(const Grammar& g, std::size_t n, std::uint64_t seed);

enum class ParametricLanguage { AnBn, L1, L2 };

ParametricLanguage parse_parametric(std::string_view name);

/// a^n b^n (n >= 1), a^n b^n c^n (n >= 1), a^n b^m c^n d^m (n, m >= 1).
/// Throws on letters outside the language's alphabet.
bool parametric_member(ParametricLanguage lang, std::string_view w);

/// Overlapping occurrences of p in w.
std::size_t pattern_occurrences(const Word& w, const Word& p);
std::size_t pattern_occurrences(std::string_view w, std::string_view p);

// ---------------------------------------------------------------------------

struct UniformWords {
    AlphabetPtr alphabet;
};

struct GrammarWords {
    std::shared_ptr<const GrammarEngine> engine;
};

using WordSource = std::variant<UniformWords, GrammarWords>;

struct ExactMode {};

struct MonteCarloMode {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

using DistributionMode = std::variant<ExactMode, MonteCarloMode>;

/// Law of X_n, the number of occurrences of a pattern in a random length-n
/// word. Exact mode enumerates; Monte-Carlo mode reports empirical frequencies.
struct OccurrenceDistribution {
    std::size_t n = 0;
    std::string pattern;
    std::map<std::size_t, Rational> probabilities;
    std::uint64_t samples = 0; // 0 in exact mode

    Rational total() const;
    /// {"k": "p/q", ...}
    std::string to_json() const;
};

inline constexpr std::uint64_t max_exact_words = std::uint64_t{1} << 24;

OccurrenceDistribution xn_distribution(const WordSource& source, std::size_t n, std::string_view pattern,
                                       const DistributionMode& mode);

/// Sum over k of |p(k) - q(k)| / 2.
double total_variation(const OccurrenceDistribution& p, const OccurrenceDistribution& q);

} // namespace combilang
