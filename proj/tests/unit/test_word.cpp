#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "combilang/series.hpp"
#include "combilang/word.hpp"

using namespace combilang;

namespace {

const AlphabetPtr ab = make_alphabet("ab");
const AlphabetPtr ab_signed = make_alphabet("ab", true);

Word w(const AlphabetPtr& a, const char* s) { return Word::parse(a, s); }

Word random_word(const AlphabetPtr& a, std::mt19937_64& gen, std::size_t max_len)
{
    std::vector<Symbol> s;
    const std::size_t len = gen() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
        const auto letter = static_cast<std::uint32_t>(gen() % a->size());
        const std::int8_t sign = a->is_signed() && (gen() & 1) ? -1 : +1;
        s.push_back({letter, sign});
    }
    return Word(a, s);
}

FiniteLanguage lang(const AlphabetPtr& a, std::size_t bound, std::vector<std::string> words)
{
    return FiniteLanguage::parse(a, bound, words);
}

} // namespace

TEST_CASE("alphabet validation")
{
    CHECK_THROWS(Alphabet(""));
    CHECK_THROWS(Alphabet("aa"));
    CHECK_THROWS(Alphabet("a'"));
    Alphabet abc("abc");
    CHECK(abc.index_of('c') == 2);
    CHECK(abc.index_of('z') == Alphabet::npos);
}

TEST_CASE("word parsing and printing")
{
    CHECK(w(ab_signed, "ab'a").str() == "ab'a");
    CHECK(w(ab, "").empty());
    CHECK_THROWS(w(ab, "a'"));
    CHECK_THROWS(w(ab, "abc"));
}

TEST_CASE("concatenation")
{
    CHECK(concat(w(ab, "ab"), w(ab, "ba")).str() == "abba");
    CHECK(concat(w(ab, ""), w(ab, "a")).str() == "a");
    CHECK(concat(w(ab_signed, "a"), w(ab_signed, "a'")).str() == "aa'");
    CHECK_THROWS_AS(concat(w(ab, "a"), Word::parse(make_alphabet("xy"), "x")), AlphabetMismatch);
}

TEST_CASE("concatenation is associative with the empty word as identity")
{
    std::mt19937_64 gen(11);
    const Word e(ab);
    for (int t = 0; t < 200; ++t) {
        const auto u = random_word(ab, gen, 6), v = random_word(ab, gen, 6), x = random_word(ab, gen, 6);
        CHECK(concat(concat(u, v), x) == concat(u, concat(v, x)));
        CHECK(concat(e, u) == u);
        CHECK(concat(u, e) == u);
        CHECK(concat(u, v).size() == u.size() + v.size());
    }
}

TEST_CASE("reduction")
{
    CHECK(reduce(w(ab_signed, "aa'b")).str() == "b");
    CHECK(reduce(w(ab_signed, "abb'a'")).empty());
    CHECK(reduce(w(ab_signed, "aba")).str() == "aba");
    CHECK(reduce(w(ab_signed, "a'a")).empty());
}

// Naive oracle: repeatedly delete the leftmost cancelling pair.
Word naive_reduce(Word x)
{
    for (bool changed = true; changed;) {
        changed = false;
        auto s = x.symbols();
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i].letter == s[i + 1].letter && s[i].sign == -s[i + 1].sign) {
                s.erase(s.begin() + static_cast<long>(i), s.begin() + static_cast<long>(i) + 2);
                x = Word(x.alphabet(), s);
                changed = true;
                break;
            }
    }
    return x;
}

TEST_CASE("reduction is idempotent and matches leftmost cancellation")
{
    std::mt19937_64 gen(5);
    for (int t = 0; t < 500; ++t) {
        const auto x = random_word(ab_signed, gen, 20);
        const auto r = reduce(x);
        CHECK(reduce(r) == r);
        CHECK(r == naive_reduce(x));
    }
}

TEST_CASE("cyclic classes")
{
    auto strs = [](const std::set<Word>& c) {
        std::set<std::string> s;
        for (const auto& x : c)
            s.insert(x.str());
        return s;
    };
    CHECK(strs(cyclic_class(w(ab, "aab"))) == std::set<std::string>{"aab", "aba", "baa"});
    CHECK(strs(cyclic_class(w(ab, "abab"))) == std::set<std::string>{"abab", "baba"});
    CHECK(strs(cyclic_class(w(ab, ""))) == std::set<std::string>{""});

    std::mt19937_64 gen(9);
    for (int t = 0; t < 300; ++t) {
        const auto x = random_word(ab, gen, 12);
        if (x.empty())
            continue;
        CHECK(x.size() % cyclic_class(x).size() == 0);
    }
}

TEST_CASE("finite language operations")
{
    const auto u = lang_union(lang(ab, 2, {"a"}), lang(ab, 2, {"b"}));
    CHECK(u.strings() == std::vector<std::string>{"a", "b"});

    const auto q = lang_left_quotient(lang(ab, 2, {"a"}), lang(ab, 2, {"ab", "aa"}));
    CHECK(q.strings() == std::vector<std::string>{"a", "b"});

    const auto c = lang_complement(lang(ab, 1, {"a", "b"}));
    CHECK(c.strings() == std::vector<std::string>{""});

    const auto i = lang_intersection(lang(ab, 2, {"a", "ab"}), lang(ab, 2, {"ab", "b"}));
    CHECK(i.strings() == std::vector<std::string>{"ab"});

    CHECK_THROWS_AS(lang_union(lang(ab, 1, {"a"}), lang(make_alphabet("xy"), 1, {"x"})), AlphabetMismatch);
    CHECK_THROWS(lang_op(LangOp::Star, lang(ab, 1, {"a"})));
    CHECK_THROWS(FiniteLanguage::parse(ab, 1, {"aa"}));
}

TEST_CASE("product flags truncation")
{
    const auto fits = lang_product(lang(ab, 2, {"a"}), lang(ab, 1, {"b"}));
    CHECK_FALSE(fits.truncated);
    CHECK(fits.language.strings() == std::vector<std::string>{"ab"});

    const auto cut = lang_product(lang(ab, 2, {"ab"}), lang(ab, 2, {"a", "ba"}));
    CHECK(cut.truncated);
    CHECK(cut.language.size() == 0);
    CHECK(cut.language.length_bound() == 2);
}

TEST_CASE("left quotient matches its definition on random languages")
{
    std::mt19937_64 gen(3);
    const auto universe = all_words_up_to(ab, 3);
    for (int t = 0; t < 50; ++t) {
        std::set<Word> ks, ls;
        for (const auto& x : universe) {
            if (gen() % 4 == 0)
                ks.insert(x);
            if (gen() % 3 == 0)
                ls.insert(x);
        }
        const FiniteLanguage k(ab, 3, ks), l(ab, 3, ls);
        const auto q = lang_left_quotient(k, l);
        for (const auto& u : universe) {
            bool expected = false;
            for (const auto& x : ks)
                expected = expected || ls.count(concat(x, u)) != 0;
            CHECK(q.contains(u) == expected);
        }
    }
}

TEST_CASE("complement involution and De Morgan within the bounded universe")
{
    std::mt19937_64 gen(17);
    const auto universe = all_words_up_to(ab, 3);
    CHECK(universe.size() == 15);
    for (int t = 0; t < 50; ++t) {
        std::set<Word> ks, ls;
        for (const auto& x : universe) {
            if (gen() & 1)
                ks.insert(x);
            if (gen() & 1)
                ls.insert(x);
        }
        const FiniteLanguage k(ab, 3, ks), l(ab, 3, ls);
        CHECK(lang_complement(lang_complement(l)) == l);
        CHECK(lang_complement(lang_union(k, l)) == lang_intersection(lang_complement(k), lang_complement(l)));
        CHECK(lang_complement(lang_intersection(k, l)) == lang_union(lang_complement(k), lang_complement(l)));
    }
}

TEST_CASE("language JSON is a sorted array")
{
    CHECK(lang(ab, 2, {"b", "ab", ""}).to_json() == R"(["","ab","b"])");
}

// ---------------------------------------------------------------------------

TEST_CASE("SEQ generating function")
{
    auto ints = [](const TruncatedSeries& s) {
        std::vector<long long> out;
        for (const auto& c : s.coefficients())
            out.push_back(static_cast<long long>(numerator(c)));
        return out;
    };
    CHECK(ints(seq_ogf(TruncatedSeries::from_ints({0, 2}, 4))) == std::vector<long long>{1, 2, 4, 8, 16});
    CHECK(ints(seq_ogf(TruncatedSeries::from_ints({0, 1}, 3))) == std::vector<long long>{1, 1, 1, 1});
    CHECK(ints(seq_ogf(TruncatedSeries::from_ints({0, 1, 1}, 4))) == std::vector<long long>{1, 1, 2, 3, 5});
    CHECK_THROWS(seq_ogf(TruncatedSeries::from_ints({1, 1}, 3)));
}

TEST_CASE("k-th power of an atom series")
{
    CHECK(seq_k_ogf(TruncatedSeries::from_ints({0, 2}, 3), 3)[3] == 8);
    CHECK(seq_k_ogf(TruncatedSeries::from_ints({0, 5, 7}, 4), 0) == TruncatedSeries::one(4));
    CHECK(seq_k_ogf(TruncatedSeries::from_ints({0, 1}, 3), 2) == TruncatedSeries::from_ints({0, 0, 1, 0}, 3));
}

// Compositions of n into parts 1 and 2, counted directly.
long long compositions_12(int n)
{
    if (n < 0)
        return 0;
    if (n == 0)
        return 1;
    return compositions_12(n - 1) + compositions_12(n - 2);
}

TEST_CASE("SEQ coefficients equal exhaustive word counts")
{
    for (int size = 1; size <= 4; ++size) {
        const std::string letters = std::string("abcd").substr(0, static_cast<std::size_t>(size));
        const auto alpha = make_alphabet(letters);
        const auto s = seq_ogf(TruncatedSeries::from_ints({0, size}, 10));
        std::vector<long long> by_length(11, 0);
        for (const auto& x : all_words_up_to(alpha, 10))
            ++by_length[x.size()];
        for (int n = 0; n <= 10; ++n)
            CHECK(s[static_cast<std::size_t>(n)] == by_length[static_cast<std::size_t>(n)]);
    }
    const auto fib = seq_ogf(TruncatedSeries::from_ints({0, 1, 1}, 12));
    for (int n = 0; n <= 12; ++n)
        CHECK(fib[static_cast<std::size_t>(n)] == compositions_12(n));
}

TEST_CASE("series arithmetic truncates and round-trips through JSON")
{
    const auto a = TruncatedSeries::from_ints({1, 2, 3}, 2);
    const auto b = TruncatedSeries::from_ints({1, 1}, 1);
    CHECK((a * b).order() == 1);
    CHECK((a + b).order() == 1);
    const TruncatedSeries r({Rational(1, 3), Rational(-2, 5)});
    CHECK(r.to_json() == R"(["1/3","-2/5"])");
    CHECK(TruncatedSeries::from_json(r.to_json()) == r);
}
