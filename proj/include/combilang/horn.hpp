#pragma once

#include <compare>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "combilang/partition.hpp"

namespace combilang {

using IndexSet = std::vector<int>; // strictly increasing, elements in 1..n

/// (I, J, K): three r-subsets of {1..n}.
struct IndexTriple {
    IndexSet i, j, k;

    /// "({1, 2}, {1, 3}, {1, 3})"
    std::string str() const;

    friend auto operator<=>(const IndexTriple&, const IndexTriple&) = default;
};

/// U^n_r or T^n_r, sorted lexicographically by (I, J, K).
struct HornSet {
    int n = 0;
    int r = 0;
    std::vector<IndexTriple> triples;

    std::size_t size() const { return triples.size(); }
    bool contains(const IndexTriple& t) const;
    /// JSON array of [[I], [J], [K]].
    std::string to_json() const;
    /// One triple per line in the "({1, 2}, {1, 3}, {1, 3})" style.
    std::string to_text() const;
};

/// All r-subsets of {1..n} in lexicographic order.
std::vector<IndexSet> combinations(int n, int r);

/// Memoizing calculator for Horn's recursively defined sets. T^r_p results
/// are cached by (r, p) and shared across calls; safe for concurrent use.
class HornCalculator {
public:
    explicit HornCalculator(unsigned jobs = 1) : jobs_(jobs == 0 ? 1 : jobs) {}

    /// Triples with sum(I) + sum(J) = sum(K) + r(r+1)/2.
    HornSet compute_u(int n, int r) const;

    /// Triples of U^n_r satisfying, for every p < r and (F,G,H) in T^r_p,
    /// sum_{f in F} i_f + sum_{g in G} j_g <= sum_{h in H} k_h + p(p+1)/2.
    std::shared_ptr<const HornSet> compute_t(int n, int r);

private:
    unsigned jobs_;
    std::shared_mutex mutex_;
    std::map<std::pair<int, int>, std::shared_ptr<const HornSet>> memo_;
};

HornSet compute_u(int n, int r);
HornSet compute_t(int n, int r);

/// (i_r - r, ..., i_1 - 1) with trailing zeros dropped.
Partition partition_from_indices(const IndexSet& indices);

/// |lambda| + |mu| = |nu| and, for all 1 <= r < n and (I,J,K) in T^n_r,
/// sum_{k in K} nu_k <= sum_{i in I} lambda_i + sum_{j in J} mu_j.
bool is_admissible(const Partition& lambda, const Partition& mu, const Partition& nu, int n);
bool is_admissible(const Partition& lambda, const Partition& mu, const Partition& nu, int n,
                   HornCalculator& calc);

} // namespace combilang
