#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combilang/exact.hpp"
#include "combilang/partition.hpp"

namespace combilang {

/// Undirected multigraph on vertices 1..n; loops and parallel edges allowed.
class Multigraph {
public:
    explicit Multigraph(int n, std::vector<std::pair<int, int>> edges = {});

    /// Edge-list text: header "n <count>", then one "u v" pair per line
    /// (repeats are multiplicity, "u u" is a loop). '#' starts a comment.
    static Multigraph parse_edge_list(std::string_view text);
    static Multigraph load_edge_list(const std::string& path);
    std::string to_edge_list() const;

    int n() const { return n_; }
    /// Edges with u <= v, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Entry (x, y) counts edges joining x and y; a loop adds 2 to the diagonal
    /// so that row sums are degrees. 0-based indices.
    const std::vector<std::vector<std::int64_t>>& adjacency() const { return adj_; }
    std::int64_t loops_at(int v) const { return loops_[static_cast<std::size_t>(v - 1)]; }
    /// Distinct neighbours of v other than v itself, ascending.
    const std::vector<int>& neighbours(int v) const { return nbrs_[static_cast<std::size_t>(v - 1)]; }

    /// Disjoint union; the other graph's vertices are shifted by n().
    Multigraph disjoint_union(const Multigraph& other) const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::int64_t>> adj_;
    std::vector<std::int64_t> loops_;
    std::vector<std::vector<int>> nbrs_;
};

Multigraph cycle_graph(int n);
Multigraph complete_graph(int n);
Multigraph complete_bipartite_graph(int a, int b);

/// Vertices sharing a block are adjacent: a disjoint union of cliques.
Multigraph from_set_partition(const SetPartition& sp);

/// Incident edge ends; a loop counts twice.
std::int64_t degree(const Multigraph& g, int v);
/// Sum of degrees equals twice the number of edges.
bool handshake_check(const Multigraph& g);

/// Walks from x to y whose edge lengths sum to r (edges length 1, loops length 2).
BigInt count_walks(const Multigraph& g, int x, int y, int r);

std::vector<std::vector<int>> components(const Multigraph& g);
bool is_connected(const Multigraph& g);

bool is_k_regular(const Multigraph& g, std::int64_t k);

struct BipartiteResult {
    bool bipartite = false;
    std::vector<int> coloring;         // side (0/1) per vertex, when bipartite
    std::vector<int> odd_closed_walk;  // v0, v1, ..., v0 when not bipartite
};

BipartiteResult is_bipartite(const Multigraph& g);

struct Spectrum {
    struct Group {
        double value;
        std::size_t multiplicity;
    };
    std::vector<double> eigenvalues; // ascending, with multiplicity
    std::vector<Group> groups;       // clusters at resolution 10 * tol
    double tol = 0;
    int sweeps = 0;

    double largest() const { return eigenvalues.back(); }
    /// Multiplicity of the group within `radius` of `value` (0 if none).
    std::size_t multiplicity_of(double value, double radius) const;
};

/// Cyclic Jacobi rotations on the adjacency matrix until the off-diagonal
/// Frobenius norm drops below tol. Throws after `max_sweeps` sweeps.
Spectrum spectrum(const Multigraph& g, double tol = 1e-10, int max_sweeps = 100);

/// Per-vertex sum over unordered pairs {s, t} (s, t != v) of the fraction of
/// shortest s-t paths through v. Parallel edges and loops do not create
/// additional paths.
std::vector<Rational> betweenness(const Multigraph& g, unsigned jobs = 1);

struct DistanceStats {
    Rational average; // over unordered pairs of distinct vertices
    int diameter = 0;
};

/// Requires a connected graph.
DistanceStats distance_stats(const Multigraph& g);

/// Connected bipartite simple graph with one side of v vertices of degree r,
/// the other of b vertices of degree k, and no two vertices on the same side
/// sharing two neighbours.
bool is_configuration(const Multigraph& g, int v, int b, int r, int k);

/// Point-line incidence graph of the Fano plane: points 1..7, lines 8..14.
Multigraph fano_incidence_graph();

} // namespace combilang
