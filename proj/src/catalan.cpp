#include "combilang/catalan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

#include "combilang/rng.hpp"

namespace combilang {

Circuit::Circuit(int n, std::vector<int> values) : n_(n), values_(std::move(values))
{
    if (n_ < 1)
        throw std::invalid_argument("circuit range size must be positive");
    if (values_.size() < 2)
        throw std::invalid_argument("a circuit needs length at least 1");
    for (int v : values_)
        if (v < 1 || v > n_)
            throw std::invalid_argument("circuit value " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    if (values_.front() != values_.back())
        throw std::invalid_argument("a circuit must end where it starts");
}

LinkFunction parse_link_function(std::string_view name)
{
    if (name == "hankel")
        return LinkFunction::Hankel;
    if (name == "wigner")
        return LinkFunction::Wigner;
    throw std::invalid_argument("unknown link function: " + std::string(name));
}

LinkValue link_value(LinkFunction link, int i, int j)
{
    switch (link) {
    case LinkFunction::Hankel:
        return {i + j, 0};
    case LinkFunction::Wigner:
        return {std::min(i, j), std::max(i, j)};
    }
    throw std::logic_error("unhandled link function");
}

std::vector<LinkValue> l_values(const Circuit& pi, LinkFunction link)
{
    std::vector<LinkValue> out;
    for (std::size_t i = 1; i <= pi.length(); ++i)
        out.push_back(link_value(link, pi[i - 1], pi[i]));
    return out;
}

namespace {

char rgs_letter(std::size_t index)
{
    static constexpr std::string_view letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    if (index >= letters.size())
        throw std::out_of_range("more than 52 distinct link values");
    return letters[index];
}

} // namespace

std::string match_word(const Circuit& pi, LinkFunction link)
{
    std::map<LinkValue, std::size_t> seen;
    std::string out;
    for (const auto& v : l_values(pi, link)) {
        auto [it, inserted] = seen.emplace(v, seen.size());
        out += rgs_letter(it->second);
    }
    return out;
}

bool circuits_equivalent(const Circuit& a, const Circuit& b, LinkFunction link)
{
    if (a.length() != b.length())
        throw std::invalid_argument("circuits of different lengths");
    return match_word(a, link) == match_word(b, link);
}

bool is_pair_matched(std::string_view w)
{
    std::map<char, int> count;
    for (char c : w)
        ++count[c];
    return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 2; });
}

bool is_catalan(std::string_view w)
{
    if (!is_pair_matched(w))
        return false;
    std::string stack;
    for (char c : w) {
        if (!stack.empty() && stack.back() == c)
            stack.pop_back();
        else
            stack.push_back(c);
    }
    return stack.empty();
}

CatalanStructure catalan_structure(std::string_view w)
{
    if (!is_catalan(w))
        throw std::invalid_argument("not a catalan word: \"" + std::string(w) + "\"");
    CatalanStructure s;
    s.k = w.size() / 2;
    s.phi.assign(w.size() + 1, 0);
    s.partner.assign(w.size() + 1, 0);
    s.generators.push_back(0);
    std::map<char, std::size_t> opened;
    for (std::size_t j = 1; j <= w.size(); ++j) {
        auto it = opened.find(w[j - 1]);
        if (it == opened.end()) {
            opened.emplace(w[j - 1], j);
            s.generators.push_back(j);
            s.phi[j] = j;
        } else {
            const std::size_t i = it->second;
            s.partner[i] = j;
            s.partner[j] = i;
            s.phi[j] = s.phi[i - 1];
        }
    }
    return s;
}

std::vector<std::size_t> generating_vertices(std::string_view w) { return catalan_structure(w).generators; }

std::size_t phi(std::string_view w, std::size_t j)
{
    auto s = catalan_structure(w);
    if (j >= s.phi.size())
        throw std::out_of_range("position beyond the word");
    return s.phi[j];
}

namespace {

void check_count_args(const CatalanStructure& s, int n)
{
    if (s.k > max_count_pairs)
        throw std::out_of_range("counting supports at most " + std::to_string(max_count_pairs) + " letter pairs");
    if (n < 1 || n > max_count_n)
        throw std::out_of_range("n must lie in 1.." + std::to_string(max_count_n));
}

struct PositionPlan {
    bool opening;
    std::size_t partner; // for closing positions
};

// Depth-first over positions 1..2k with pi(0) fixed.
class PiEnumerator {
public:
    PiEnumerator(const CatalanStructure& s, int n) : h_(2 * s.k), n_(n)
    {
        plan_.resize(h_ + 1);
        for (std::size_t j = 1; j <= h_; ++j)
            plan_[j] = {s.phi[j] == j, s.partner[j]};
    }

    std::uint64_t count_from(int start)
    {
        vals_[0] = start;
        opened_ = 0;
        return step(1);
    }

private:
    std::uint64_t step(std::size_t j)
    {
        if (j > h_)
            return vals_[h_] == vals_[0] ? 1 : 0;
        const int prev = vals_[j - 1];
        if (!plan_[j].opening) {
            const std::size_t i = plan_[j].partner;
            const int v = vals_[i - 1] + vals_[i] - prev;
            if (v < 1 || v > n_)
                return 0;
            vals_[j] = v;
            return step(j + 1);
        }
        std::uint64_t total = 0;
        const int hi = std::min(n_, n_ + 1 - prev);
        for (int v = 1; v <= hi; ++v) {
            const int sum = prev + v;
            bool clash = false;
            for (std::size_t t = 0; t < opened_; ++t)
                if (sums_[t] == sum) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            vals_[j] = v;
            sums_[opened_++] = sum;
            total += step(j + 1);
            --opened_;
        }
        return total;
    }

    std::size_t h_;
    int n_;
    std::vector<PositionPlan> plan_;
    int vals_[2 * max_count_pairs + 1] = {};
    int sums_[max_count_pairs] = {};
    std::size_t opened_ = 0;
};

} // namespace

BigInt count_pi1_star(std::string_view w, int n, unsigned jobs)
{
    const auto s = catalan_structure(w);
    check_count_args(s, n);
    const auto un = static_cast<std::size_t>(n);
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, un));
    std::vector<std::uint64_t> partial(workers, 0);
    auto work = [&](std::size_t w_index) {
        PiEnumerator e(s, n);
        const auto lo = static_cast<int>(un * w_index / workers) + 1;
        const auto hi = static_cast<int>(un * (w_index + 1) / workers);
        for (int start = lo; start <= hi; ++start)
            partial[w_index] += e.count_from(start);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t i = 0; i < workers; ++i)
            threads.emplace_back(work, i);
        for (auto& t : threads)
            t.join();
    }
    BigInt total = 0;
    for (auto p : partial)
        total += p;
    return total;
}

BigInt count_pi1_by_definition(std::string_view w, int n, MatchReading reading)
{
    if (!is_pair_matched(w))
        throw std::invalid_argument("not a pair-matched word: \"" + std::string(w) + "\"");
    if (n < 1)
        throw std::out_of_range("n must be positive");
    const std::size_t h = w.size();
    double space = std::pow(static_cast<double>(n), static_cast<double>(h));
    if (space > 4.3e9)
        throw std::out_of_range("definition scan limited to n^h <= 2^32 circuits");
    if (h == 0)
        return BigInt(n);

    std::vector<int> vals(h + 1, 1);
    std::vector<int> sums(h + 1, 0);
    std::uint64_t total = 0;
    for (;;) {
        vals[h] = vals[0];
        bool ok = true;
        for (std::size_t i = 1; i <= h && ok; ++i) {
            sums[i] = vals[i - 1] + vals[i];
            ok = sums[i] <= n + 1;
        }
        for (std::size_t i = 1; i <= h && ok; ++i)
            for (std::size_t j = i + 1; j <= h && ok; ++j) {
                const bool same_letter = w[i - 1] == w[j - 1];
                const bool same_sum = sums[i] == sums[j];
                if (same_letter && !same_sum)
                    ok = false;
                if (reading == MatchReading::Equivalence && !same_letter && same_sum)
                    ok = false;
            }
        if (ok)
            ++total;
        // Odometer over vals[0..h-1].
        std::size_t d = 0;
        while (d < h && vals[d] == n)
            vals[d++] = 1;
        if (d == h)
            break;
        ++vals[d];
    }
    return BigInt(total);
}

Rational pu_ratio(std::string_view w, int n, unsigned jobs)
{
    const auto s = catalan_structure(w);
    BigInt denom = 1;
    for (std::size_t i = 0; i <= s.k; ++i)
        denom *= n;
    return Rational(count_pi1_star(w, n, jobs), denom);
}

MonteCarloEstimate pu_integral(std::string_view w, std::uint64_t samples, std::uint64_t seed)
{
    const auto s = catalan_structure(w);
    if (samples < 1000)
        throw std::invalid_argument("at least 1000 samples are required");
    // Constraint pairs (phi(i-1), i) for first occurrences i.
    std::vector<std::pair<std::size_t, std::size_t>> constraints;
    for (std::size_t g = 1; g < s.generators.size(); ++g) {
        const std::size_t i = s.generators[g];
        constraints.emplace_back(s.phi[i - 1], i);
    }
    Rng rng(seed);
    std::vector<double> v(2 * s.k + 1, 0.0);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < samples; ++t) {
        for (std::size_t g : s.generators)
            v[g] = rng.uniform01();
        bool inside = true;
        for (const auto& [a, b] : constraints)
            if (v[a] + v[b] > 1.0) {
                inside = false;
                break;
            }
        hits += inside ? 1 : 0;
    }
    MonteCarloEstimate out;
    out.samples = samples;
    out.hits = hits;
    out.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    out.std_error = std::sqrt(out.estimate * (1 - out.estimate) / static_cast<double>(samples));
    return out;
}

// ---------------------------------------------------------------------------

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Rational Polynomial::integrate_unit() const
{
    Rational acc = 0;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        acc += coefficients[i] / Rational(static_cast<long long>(i + 1));
    return acc;
}

std::string Polynomial::str() const
{
    std::string out;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        Rational c = coefficients[i];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        if (negative)
            c = -c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string mag = denominator(c) == 1 ? to_string(numerator(c)) : to_pq(c);
        if (i == 0)
            out += mag;
        else {
            if (c != 1)
                out += mag + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

Polynomial trimmed(Polynomial p)
{
    while (!p.coefficients.empty() && p.coefficients.back() == 0)
        p.coefficients.pop_back();
    return p;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b)
{
    if (a.coefficients.empty() || b.coefficients.empty())
        return {};
    std::vector<Rational> c(a.coefficients.size() + b.coefficients.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coefficients.size(); ++i)
        for (std::size_t j = 0; j < b.coefficients.size(); ++j)
            c[i + j] += a.coefficients[i] * b.coefficients[j];
    return trimmed({std::move(c)});
}

// Antiderivative vanishing at 0.
Polynomial antiderivative(const Polynomial& p)
{
    std::vector<Rational> c(p.coefficients.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.coefficients.size(); ++i)
        c[i + 1] = p.coefficients[i] / Rational(static_cast<long long>(i + 1));
    return trimmed({std::move(c)});
}

// p(1 - x).
Polynomial reflect(const Polynomial& p)
{
    Polynomial out{{}};
    Polynomial power{{Rational(1)}};
    const Polynomial one_minus_x{{Rational(1), Rational(-1)}};
    for (const auto& c : p.coefficients) {
        Polynomial term = power;
        for (auto& x : term.coefficients)
            x *= c;
        if (out.coefficients.size() < term.coefficients.size())
            out.coefficients.resize(term.coefficients.size(), Rational(0));
        for (std::size_t i = 0; i < term.coefficients.size(); ++i)
            out.coefficients[i] += term.coefficients[i];
        power = multiply(power, one_minus_x);
    }
    return trimmed(out);
}

} // namespace

Polynomial q_polynomial(std::string_view w)
{
    if (w == "aa")
        return {{Rational(1), Rational(-1)}};
    if (w == "abba")
        return {{Rational(1, 2), Rational(0), Rational(-1, 2)}};
    throw std::invalid_argument("no tabulated polynomial for \"" + std::string(w) + "\"");
}

Polynomial inner_integral_polynomial(std::string_view w)
{
    const auto s = catalan_structure(w);
    // Each first occurrence i hangs below phi(i-1); parents have smaller positions.
    std::vector<Polynomial> f(2 * s.k + 1, Polynomial{{Rational(1)}});
    for (auto it = s.generators.rbegin(); it != s.generators.rend(); ++it) {
        const std::size_t i = *it;
        if (i == 0)
            break;
        const std::size_t parent = s.phi[i - 1];
        f[parent] = multiply(f[parent], reflect(antiderivative(f[i])));
    }
    return f[0];
}

Rational pu_limit(std::string_view w) { return inner_integral_polynomial(w).integrate_unit(); }

} // namespace combilang
