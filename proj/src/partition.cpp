#include "combilang/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace combilang {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::int64_t> parse_int_list(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '(' && text.back() == ')')
        text = trim(text.substr(1, text.size() - 2));
    std::vector<std::int64_t> out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        auto item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        if (item.empty())
            throw std::invalid_argument("empty entry in integer list");
        std::size_t used = 0;
        std::string s(item);
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: " + s);
        }
        if (used != s.size())
            throw std::invalid_argument("not an integer: " + s);
        out.push_back(v);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace

Partition::Partition(std::vector<int> parts)
{
    for (int p : parts) {
        if (p < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
        if (p > 0)
            parts_.push_back(p);
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    for (auto v : parse_int_list(text))
        parts.push_back(static_cast<int>(v));
    return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(std::size_t n) const
{
    std::vector<int> out = parts_;
    if (out.size() < n)
        out.resize(n, 0);
    return out;
}

bool Partition::fits_in(const Partition& outer) const
{
    if (length() > outer.length())
        return false;
    for (std::size_t i = 0; i < length(); ++i)
        if (parts_[i] > outer[i])
            return false;
    return true;
}

std::string Partition::str() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Partition> partitions_of(int weight, int max_parts, int max_part)
{
    std::vector<Partition> out;
    if (weight < 0)
        return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_parts >= 0 && static_cast<int>(cur.size()) >= max_parts)
            return;
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(weight, max_part >= 0 ? max_part : weight);
    return out;
}

bool is_k_regular(const Partition& p, int k)
{
    if (k < 2)
        throw std::invalid_argument("k-regularity needs k >= 2");
    return std::none_of(p.parts().begin(), p.parts().end(), [k](int x) { return x % k == 0; });
}

// ---------------------------------------------------------------------------

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks))
{
    if (n_ < 0)
        throw std::invalid_argument("set partition size must be nonnegative");
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    int covered = 0;
    for (auto& b : blocks_) {
        if (b.empty())
            throw std::invalid_argument("set partition blocks must be nonempty");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > n_)
                throw std::invalid_argument("set partition element out of range: " + std::to_string(x));
            if (seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("set partition blocks overlap at " + std::to_string(x));
            seen[static_cast<std::size_t>(x)] = true;
            ++covered;
        }
    }
    if (covered != n_)
        throw std::invalid_argument("set partition blocks do not cover {1.." + std::to_string(n_) + "}");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::parse(std::string_view text)
{
    text = trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw std::invalid_argument("set partition must look like {1,3,5|2,4}");
    text = text.substr(1, text.size() - 2);
    std::vector<std::vector<int>> blocks;
    int n = 0;
    if (!trim(text).empty()) {
        std::size_t start = 0;
        for (;;) {
            auto bar = text.find('|', start);
            auto item = text.substr(start, bar == std::string_view::npos ? text.npos : bar - start);
            std::vector<int> block;
            for (auto v : parse_int_list(item))
                block.push_back(static_cast<int>(v));
            n += static_cast<int>(block.size());
            blocks.push_back(std::move(block));
            if (bar == std::string_view::npos)
                break;
            start = bar + 1;
        }
    }
    return SetPartition(n, std::move(blocks));
}

std::string SetPartition::str() const
{
    std::string out = "{";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b)
            out += '|';
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(blocks_[b][i]);
        }
    }
    return out + "}";
}

namespace {

// Returns the first violating 0-based position, or npos.
std::size_t first_rgs_violation(const std::string& w)
{
    char next_new = 'a';
    for (std::size_t i = 0; i < w.size(); ++i) {
        char c = w[i];
        if (c < 'a' || c > 'z' || c > next_new)
            return i;
        if (c == next_new)
            ++next_new;
    }
    return std::string::npos;
}

} // namespace

RgsWord::RgsWord(std::string word) : word_(std::move(word))
{
    auto bad = first_rgs_violation(word_);
    if (bad != std::string::npos)
        throw RgsError(bad + 1, "not a restricted growth word: letter '" + std::string(1, word_[bad]) +
                                    "' at position " + std::to_string(bad + 1));
}

RgsWord partition_to_word(const SetPartition& sp)
{
    if (sp.block_count() > 26)
        throw std::invalid_argument("more than 26 blocks cannot be written with letters a..z");
    std::string w(static_cast<std::size_t>(sp.n()), '?');
    for (std::size_t k = 0; k < sp.block_count(); ++k)
        for (int i : sp.blocks()[k])
            w[static_cast<std::size_t>(i - 1)] = static_cast<char>('a' + k);
    return RgsWord(std::move(w));
}

SetPartition word_to_partition(const RgsWord& w)
{
    std::vector<std::vector<int>> blocks;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto k = static_cast<std::size_t>(w.str()[i] - 'a');
        if (k == blocks.size())
            blocks.emplace_back();
        blocks[k].push_back(static_cast<int>(i + 1));
    }
    return SetPartition(static_cast<int>(w.size()), std::move(blocks));
}

SetPartitionStream::SetPartitionStream(int n) : n_(n)
{
    if (n < 1 || n > 12)
        throw std::out_of_range("set partition enumeration supports 1 <= n <= 12");
    code_.assign(static_cast<std::size_t>(n), 0);
    prefix_max_.assign(static_cast<std::size_t>(n), 0);
}

std::optional<SetPartition> SetPartitionStream::next()
{
    if (done_)
        return std::nullopt;
    if (started_) {
        // prefix_max_[i] = max(code_[0..i]); position i may grow up to prefix_max_[i-1] + 1.
        int i = n_ - 1;
        while (i >= 1 && code_[static_cast<std::size_t>(i)] > prefix_max_[static_cast<std::size_t>(i - 1)])
            --i;
        if (i < 1) {
            done_ = true;
            return std::nullopt;
        }
        auto ui = static_cast<std::size_t>(i);
        ++code_[ui];
        prefix_max_[ui] = std::max(prefix_max_[ui - 1], code_[ui]);
        for (std::size_t j = ui + 1; j < code_.size(); ++j) {
            code_[j] = 0;
            prefix_max_[j] = prefix_max_[ui];
        }
    }
    started_ = true;
    std::string w;
    for (int c : code_)
        w += static_cast<char>('a' + c);
    return word_to_partition(RgsWord(std::move(w)));
}

std::vector<SetPartition> enumerate_set_partitions(int n)
{
    SetPartitionStream stream(n);
    std::vector<SetPartition> out;
    while (auto sp = stream.next())
        out.push_back(std::move(*sp));
    return out;
}

// ---------------------------------------------------------------------------

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators) : gens_(std::move(generators))
{
    if (gens_.empty())
        throw std::invalid_argument("numerical semigroup needs at least one generator");
    std::int64_t g = 0;
    for (auto x : gens_) {
        if (x <= 0)
            throw std::invalid_argument("semigroup generators must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1)
        throw std::invalid_argument("semigroup generators must have gcd 1");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());

    // Conductor: start of the first run of min(generators) consecutive members.
    const std::int64_t run_needed = gens_.front();
    std::vector<bool> member;
    std::int64_t run = 0;
    for (std::int64_t x = 0;; ++x) {
        bool in = x == 0;
        for (auto gen : gens_)
            if (gen <= x && member[static_cast<std::size_t>(x - gen)]) {
                in = true;
                break;
            }
        member.push_back(in);
        run = in ? run + 1 : 0;
        if (run == run_needed) {
            conductor_ = x - run_needed + 1;
            break;
        }
    }
    member.resize(static_cast<std::size_t>(conductor_));
    table_ = std::move(member);
}

NumericalSemigroup NumericalSemigroup::parse(std::string_view text)
{
    return NumericalSemigroup(parse_int_list(text));
}

bool NumericalSemigroup::contains(std::int64_t x) const
{
    if (x < 0)
        return false;
    if (x >= conductor_)
        return true;
    return table_[static_cast<std::size_t>(x)];
}

bool semigroup_member(const NumericalSemigroup& s, std::int64_t x)
{
    if (x < 0)
        throw std::invalid_argument("semigroup membership is defined for x >= 0");
    return s.contains(x);
}

LinearPattern::LinearPattern(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients))
{
    if (coeffs_.empty())
        throw std::invalid_argument("pattern needs at least one variable");
    for (auto c : coeffs_)
        if (c == 0)
            throw std::invalid_argument("pattern coefficients must be nonzero");
}

LinearPattern LinearPattern::parse(std::string_view text) { return LinearPattern(parse_int_list(text)); }

std::int64_t LinearPattern::evaluate(const std::vector<std::int64_t>& values) const
{
    if (values.size() != coeffs_.size())
        throw std::invalid_argument("pattern arity mismatch");
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        sum += coeffs_[i] * values[i];
    return sum;
}

PatternVerdict pattern_admitted(const NumericalSemigroup& s, const LinearPattern& p, std::int64_t bound)
{
    if (bound < s.conductor())
        throw std::invalid_argument("pattern bound must be at least the conductor (" +
                                    std::to_string(s.conductor()) + ")");
    std::vector<std::int64_t> members;
    for (std::int64_t x = 0; x <= bound; ++x)
        if (s.contains(x))
            members.push_back(x);

    PatternVerdict verdict;
    verdict.bound = bound;
    std::vector<std::int64_t> tuple;
    // Tuples s_1 >= s_2 >= ... in lexicographic order of member indices.
    std::function<bool(std::size_t)> rec = [&](std::size_t cap) {
        if (tuple.size() == p.arity()) {
            if (!s.contains(p.evaluate(tuple))) {
                verdict.admitted = false;
                verdict.counterexample = tuple;
                return true;
            }
            return false;
        }
        for (std::size_t i = 0; i <= cap; ++i) {
            tuple.push_back(members[i]);
            bool found = rec(i);
            tuple.pop_back();
            if (found)
                return true;
        }
        return false;
    };
    for (std::size_t first = 0; first < members.size() && verdict.admitted; ++first) {
        tuple.push_back(members[first]);
        rec(first);
        tuple.pop_back();
    }
    return verdict;
}

} // namespace combilang
