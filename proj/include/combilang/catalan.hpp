#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combilang/exact.hpp"

namespace combilang {

/// A map pi from {0..h} to {1..n} with pi(0) = pi(h).
class Circuit {
public:
    Circuit(int n, std::vector<int> values);

    int n() const { return n_; }
    /// Length h (number of steps).
    std::size_t length() const { return values_.size() - 1; }
    const std::vector<int>& values() const { return values_; }
    int operator[](std::size_t i) const { return values_[i]; }

private:
    int n_;
    std::vector<int> values_;
};

enum class LinkFunction {
    Hankel, // L(i, j) = i + j
    Wigner, // L(i, j) = (min, max)
};

LinkFunction parse_link_function(std::string_view name);

/// Hankel values use the first component only.
using LinkValue = std::pair<int, int>;

LinkValue link_value(LinkFunction link, int i, int j);

/// L(pi(i-1), pi(i)) for i = 1..h.
std::vector<LinkValue> l_values(const Circuit& pi, LinkFunction link);

/// The partition of steps 1..h by equal link values, as a word whose first
/// occurrences are in alphabetical order ("abba", "aabb", ...).
std::string match_word(const Circuit& pi, LinkFunction link);

/// Same partition of steps by equal link values. Throws on length mismatch.
bool circuits_equivalent(const Circuit& a, const Circuit& b, LinkFunction link);

/// Every letter occurs exactly twice.
bool is_pair_matched(std::string_view w);
/// Pair-matched and reducible to the empty word by deleting adjacent equal
/// letters.
bool is_catalan(std::string_view w);

/// Position data of a catalan word of length 2k.
struct CatalanStructure {
    std::size_t k = 0;
    /// 0 and the first-occurrence positions (1-based), ascending; size k + 1.
    std::vector<std::size_t> generators;
    /// phi[j] for j = 0..2k: the generating vertex whose value pi(j) repeats.
    std::vector<std::size_t> phi;
    /// partner[j] for j = 1..2k: the other position carrying the same letter.
    std::vector<std::size_t> partner;
};

/// Throws std::invalid_argument when w is not catalan.
CatalanStructure catalan_structure(std::string_view w);

std::vector<std::size_t> generating_vertices(std::string_view w);
std::size_t phi(std::string_view w, std::size_t j);

inline constexpr std::size_t max_count_pairs = 4;
inline constexpr int max_count_n = 200;

/// Circuits pi on {1..n} with hankel sums pi(i-1)+pi(i) equal exactly when
/// steps i, j carry the same letter of w, and every sum at most n + 1.
/// Enumerates the k + 1 generating-vertex values; every other value is forced.
BigInt count_pi1_star(std::string_view w, int n, unsigned jobs = 1);

enum class MatchReading {
    Equivalence, // same letter <=> same sum
    SameLetterOnly, // same letter => same sum
};

/// Scan over all n^h circuits applying the definition directly; small n only.
BigInt count_pi1_by_definition(std::string_view w, int n, MatchReading reading);

/// count_pi1_star / n^(k+1).
Rational pu_ratio(std::string_view w, int n, unsigned jobs = 1);

struct MonteCarloEstimate {
    double estimate = 0;
    double std_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
};

/// Uniform points v in [0,1]^(k+1), one coordinate per generating vertex;
/// the fraction satisfying v_phi(i-1) + v_i <= 1 for every first occurrence i.
/// At least 1000 samples.
MonteCarloEstimate pu_integral(std::string_view w, std::uint64_t samples, std::uint64_t seed);

/// Polynomial with exact coefficients, lowest degree first.
struct Polynomial {
    std::vector<Rational> coefficients;

    Rational operator()(const Rational& x) const;
    /// Integral over [0, 1].
    Rational integrate_unit() const;
    std::string str() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Tabulated closed forms: "aa" -> 1 - x, "abba" -> (1 - x^2)/2.
Polynomial q_polynomial(std::string_view w);

/// Volume of the constraint region as a function of v_0, integrated out over
/// all other generating vertices exactly.
Polynomial inner_integral_polynomial(std::string_view w);

/// Exact value of the limiting integral.
Rational pu_limit(std::string_view w);

} // namespace combilang
