#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace combilang {

/// Ordered set of single-character letters. A signed alphabet also carries a
/// formal inverse for each letter, written with a trailing apostrophe (a').
class Alphabet {
public:
    Alphabet(std::string_view letters, bool is_signed = false);

    std::size_t size() const { return letters_.size(); }
    bool is_signed() const { return signed_; }
    char letter(std::size_t index) const { return letters_.at(index); }
    const std::string& letters() const { return letters_; }

    /// Index of `c`, or npos if `c` is not a letter of this alphabet.
    std::size_t index_of(char c) const;
    bool contains(char c) const { return index_of(c) != npos; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string letters_;
    bool signed_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::string_view letters, bool is_signed = false);

struct Symbol {
    std::uint32_t letter = 0;
    std::int8_t sign = +1;

    Symbol inverse() const { return {letter, static_cast<std::int8_t>(-sign)}; }

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

class AlphabetMismatch : public std::invalid_argument {
public:
    AlphabetMismatch() : std::invalid_argument("words or languages over different alphabets") {}
};

/// An element of the free monoid over an alphabet (with inverses when the
/// alphabet is signed). The empty word is the identity.
class Word {
public:
    explicit Word(AlphabetPtr alphabet, std::vector<Symbol> symbols = {});

    /// Parses "ab'a": a letter followed by ' is its inverse.
    static Word parse(AlphabetPtr alphabet, std::string_view text);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    const Symbol& operator[](std::size_t i) const { return symbols_[i]; }

    std::string str() const;

    bool same_alphabet(const Word& other) const;

    // Shortlex order (length first, then symbols); alphabets are assumed equal.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) { return a.symbols_ == b.symbols_; }

private:
    AlphabetPtr alphabet_;
    std::vector<Symbol> symbols_;
};

Word concat(const Word& u, const Word& v);

/// Iterated cancellation of adjacent aa' and a'a factors.
Word reduce(const Word& w);

/// All rotations of w, deduplicated.
std::set<Word> cyclic_class(const Word& w);

// ---------------------------------------------------------------------------
// Finite languages

/// A finite set of words inside the universe of words of length <= bound.
class FiniteLanguage {
public:
    FiniteLanguage(AlphabetPtr alphabet, std::size_t length_bound, std::set<Word> words = {});

    static FiniteLanguage parse(AlphabetPtr alphabet, std::size_t length_bound,
                                const std::vector<std::string>& words);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    std::size_t length_bound() const { return bound_; }
    const std::set<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool contains(const Word& w) const { return words_.count(w) != 0; }
    bool contains(std::string_view w) const;

    /// Sorted (by string) JSON array of word strings.
    std::string to_json() const;
    std::vector<std::string> strings() const;

    friend bool operator==(const FiniteLanguage& a, const FiniteLanguage& b)
    {
        return *a.alphabet_ == *b.alphabet_ && a.bound_ == b.bound_ && a.words_ == b.words_;
    }

private:
    AlphabetPtr alphabet_;
    std::size_t bound_;
    std::set<Word> words_;
};

enum class LangOp { Union, Intersection, Complement, Product, LeftQuotient, Star };

struct LangOpResult {
    FiniteLanguage language;
    bool truncated = false; // product only: some words exceeded the result bound
};

FiniteLanguage lang_union(const FiniteLanguage& k, const FiniteLanguage& l);
FiniteLanguage lang_intersection(const FiniteLanguage& k, const FiniteLanguage& l);
/// Complement within all words of length <= l.length_bound().
FiniteLanguage lang_complement(const FiniteLanguage& l);
/// Product truncated at max(bounds); dropped words set `truncated`.
LangOpResult lang_product(const FiniteLanguage& k, const FiniteLanguage& l);
/// { u : ku in L for some k in K }.
FiniteLanguage lang_left_quotient(const FiniteLanguage& k, const FiniteLanguage& l);

/// Unary dispatch (Complement). Star is infinite and is rejected; build it
/// with automata::from_expr instead.
LangOpResult lang_op(LangOp op, const FiniteLanguage& l);
/// Binary dispatch (Union, Intersection, Product, LeftQuotient).
LangOpResult lang_op(LangOp op, const FiniteLanguage& k, const FiniteLanguage& l);

/// All words over the alphabet (inverse letters included when signed) with
/// length <= bound. Throws when the universe exceeds `max_words`.
std::vector<Word> all_words_up_to(const AlphabetPtr& alphabet, std::size_t bound,
                                  std::size_t max_words = std::size_t{1} << 22);

} // namespace combilang
