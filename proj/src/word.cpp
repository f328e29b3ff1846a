#include "combilang/word.hpp"

#include <algorithm>

#include <json.hpp>

namespace combilang {

Alphabet::Alphabet(std::string_view letters, bool is_signed) : letters_(letters), signed_(is_signed)
{
    if (letters_.empty())
        throw std::invalid_argument("alphabet must be nonempty");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        char c = letters_[i];
        if (c == '\'' || c <= ' ' || c > '~')
            throw std::invalid_argument(std::string("invalid alphabet letter: '") + c + "'");
        if (letters_.find(c, i + 1) != std::string::npos)
            throw std::invalid_argument(std::string("duplicate alphabet letter: '") + c + "'");
    }
}

std::size_t Alphabet::index_of(char c) const
{
    auto pos = letters_.find(c);
    return pos == std::string::npos ? npos : pos;
}

AlphabetPtr make_alphabet(std::string_view letters, bool is_signed)
{
    return std::make_shared<const Alphabet>(letters, is_signed);
}

Word::Word(AlphabetPtr alphabet, std::vector<Symbol> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols))
{
    if (!alphabet_)
        throw std::invalid_argument("word requires an alphabet");
    for (const auto& s : symbols_) {
        if (s.letter >= alphabet_->size())
            throw std::invalid_argument("letter index out of range");
        if (s.sign != 1 && s.sign != -1)
            throw std::invalid_argument("sign must be +1 or -1");
        if (s.sign == -1 && !alphabet_->is_signed())
            throw std::invalid_argument("inverse letter over an unsigned alphabet");
    }
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text)
{
    std::vector<Symbol> symbols;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        auto idx = alphabet->index_of(c);
        if (idx == Alphabet::npos)
            throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet");
        Symbol s{static_cast<std::uint32_t>(idx), +1};
        if (i + 1 < text.size() && text[i + 1] == '\'') {
            s.sign = -1;
            ++i;
        }
        symbols.push_back(s);
    }
    return Word(std::move(alphabet), std::move(symbols));
}

std::string Word::str() const
{
    std::string out;
    out.reserve(symbols_.size());
    for (const auto& s : symbols_) {
        out += alphabet_->letter(s.letter);
        if (s.sign < 0)
            out += '\'';
    }
    return out;
}

bool Word::same_alphabet(const Word& other) const
{
    return alphabet_ == other.alphabet_ || *alphabet_ == *other.alphabet_;
}

std::strong_ordering operator<=>(const Word& a, const Word& b)
{
    if (auto c = a.symbols_.size() <=> b.symbols_.size(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.symbols_.begin(), a.symbols_.end(),
                                                  b.symbols_.begin(), b.symbols_.end());
}

Word concat(const Word& u, const Word& v)
{
    if (!u.same_alphabet(v))
        throw AlphabetMismatch();
    std::vector<Symbol> out(u.symbols());
    out.insert(out.end(), v.symbols().begin(), v.symbols().end());
    return Word(u.alphabet(), std::move(out));
}

Word reduce(const Word& w)
{
    std::vector<Symbol> stack;
    for (const auto& s : w.symbols()) {
        if (!stack.empty() && stack.back() == s.inverse())
            stack.pop_back();
        else
            stack.push_back(s);
    }
    return Word(w.alphabet(), std::move(stack));
}

std::set<Word> cyclic_class(const Word& w)
{
    std::set<Word> out;
    const auto& s = w.symbols();
    if (s.empty()) {
        out.insert(w);
        return out;
    }
    for (std::size_t shift = 0; shift < s.size(); ++shift) {
        std::vector<Symbol> rot(s.begin() + static_cast<std::ptrdiff_t>(shift), s.end());
        rot.insert(rot.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(shift));
        out.emplace(w.alphabet(), std::move(rot));
    }
    return out;
}

// ---------------------------------------------------------------------------

FiniteLanguage::FiniteLanguage(AlphabetPtr alphabet, std::size_t length_bound, std::set<Word> words)
    : alphabet_(std::move(alphabet)), bound_(length_bound), words_(std::move(words))
{
    for (const auto& w : words_) {
        if (!(*w.alphabet() == *alphabet_))
            throw AlphabetMismatch();
        if (w.size() > bound_)
            throw std::invalid_argument("word '" + w.str() + "' exceeds the language length bound");
    }
}

FiniteLanguage FiniteLanguage::parse(AlphabetPtr alphabet, std::size_t length_bound,
                                     const std::vector<std::string>& words)
{
    std::set<Word> set;
    for (const auto& s : words)
        set.insert(Word::parse(alphabet, s));
    return FiniteLanguage(std::move(alphabet), length_bound, std::move(set));
}

bool FiniteLanguage::contains(std::string_view w) const
{
    return contains(Word::parse(alphabet_, w));
}

std::vector<std::string> FiniteLanguage::strings() const
{
    std::vector<std::string> out;
    out.reserve(words_.size());
    for (const auto& w : words_)
        out.push_back(w.str());
    std::sort(out.begin(), out.end());
    return out;
}

std::string FiniteLanguage::to_json() const { return nlohmann::json(strings()).dump(); }

namespace {

void require_same(const FiniteLanguage& k, const FiniteLanguage& l)
{
    if (!(*k.alphabet() == *l.alphabet()))
        throw AlphabetMismatch();
}

} // namespace

FiniteLanguage lang_union(const FiniteLanguage& k, const FiniteLanguage& l)
{
    require_same(k, l);
    std::set<Word> out = k.words();
    out.insert(l.words().begin(), l.words().end());
    return FiniteLanguage(k.alphabet(), std::max(k.length_bound(), l.length_bound()), std::move(out));
}

FiniteLanguage lang_intersection(const FiniteLanguage& k, const FiniteLanguage& l)
{
    require_same(k, l);
    std::set<Word> out;
    std::set_intersection(k.words().begin(), k.words().end(), l.words().begin(), l.words().end(),
                          std::inserter(out, out.end()));
    return FiniteLanguage(k.alphabet(), std::max(k.length_bound(), l.length_bound()), std::move(out));
}

FiniteLanguage lang_complement(const FiniteLanguage& l)
{
    std::set<Word> out;
    for (auto& w : all_words_up_to(l.alphabet(), l.length_bound()))
        if (!l.contains(w))
            out.insert(std::move(w));
    return FiniteLanguage(l.alphabet(), l.length_bound(), std::move(out));
}

LangOpResult lang_product(const FiniteLanguage& k, const FiniteLanguage& l)
{
    require_same(k, l);
    const std::size_t bound = std::max(k.length_bound(), l.length_bound());
    std::set<Word> out;
    bool truncated = false;
    for (const auto& u : k.words())
        for (const auto& v : l.words()) {
            if (u.size() + v.size() > bound) {
                truncated = true;
                continue;
            }
            out.insert(concat(u, v));
        }
    return {FiniteLanguage(k.alphabet(), bound, std::move(out)), truncated};
}

FiniteLanguage lang_left_quotient(const FiniteLanguage& k, const FiniteLanguage& l)
{
    require_same(k, l);
    std::set<Word> out;
    for (const auto& prefix : k.words())
        for (const auto& w : l.words()) {
            if (prefix.size() > w.size())
                continue;
            if (!std::equal(prefix.symbols().begin(), prefix.symbols().end(), w.symbols().begin()))
                continue;
            std::vector<Symbol> rest(w.symbols().begin() + static_cast<std::ptrdiff_t>(prefix.size()),
                                     w.symbols().end());
            out.emplace(l.alphabet(), std::move(rest));
        }
    return FiniteLanguage(l.alphabet(), l.length_bound(), std::move(out));
}

LangOpResult lang_op(LangOp op, const FiniteLanguage& l)
{
    switch (op) {
    case LangOp::Complement:
        return {lang_complement(l), false};
    case LangOp::Star:
        throw std::invalid_argument(
            "star of a language is infinite; build it as an automaton from a rational expression");
    default:
        throw std::invalid_argument("operation requires two languages");
    }
}

LangOpResult lang_op(LangOp op, const FiniteLanguage& k, const FiniteLanguage& l)
{
    switch (op) {
    case LangOp::Union:
        return {lang_union(k, l), false};
    case LangOp::Intersection:
        return {lang_intersection(k, l), false};
    case LangOp::Product:
        return lang_product(k, l);
    case LangOp::LeftQuotient:
        return {lang_left_quotient(k, l), false};
    case LangOp::Star:
        return lang_op(op, l);
    case LangOp::Complement:
        throw std::invalid_argument("complement takes a single language");
    }
    throw std::invalid_argument("unknown language operation");
}

std::vector<Word> all_words_up_to(const AlphabetPtr& alphabet, std::size_t bound, std::size_t max_words)
{
    std::vector<Symbol> letters;
    for (std::uint32_t i = 0; i < alphabet->size(); ++i) {
        letters.push_back({i, +1});
        if (alphabet->is_signed())
            letters.push_back({i, -1});
    }

    std::vector<Word> out;
    out.emplace_back(alphabet);
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= bound; ++len) {
        const std::size_t layer_end = out.size();
        if ((layer_end - layer_begin) * letters.size() + layer_end > max_words)
            throw std::length_error("word universe too large for the requested length bound");
        for (std::size_t i = layer_begin; i < layer_end; ++i)
            for (const auto& s : letters) {
                std::vector<Symbol> next = out[i].symbols();
                next.push_back(s);
                out.emplace_back(alphabet, std::move(next));
            }
        layer_begin = layer_end;
    }
    return out;
}

} // namespace combilang
