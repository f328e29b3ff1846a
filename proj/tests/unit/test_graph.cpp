#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "combilang/graph.hpp"

using namespace combilang;

namespace {

constexpr double eig_tol = 1e-8;

Multigraph random_multigraph(std::mt19937_64& gen, int max_n, int max_edges, bool loops)
{
    const int n = 1 + static_cast<int>(gen() % static_cast<unsigned>(max_n));
    const int m = static_cast<int>(gen() % static_cast<unsigned>(max_edges + 1));
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < m; ++e) {
        int u = 1 + static_cast<int>(gen() % static_cast<unsigned>(n));
        int v = 1 + static_cast<int>(gen() % static_cast<unsigned>(n));
        if (!loops && u == v)
            continue;
        edges.emplace_back(u, v);
    }
    return Multigraph(n, edges);
}

bool has_eigenvalue(const Spectrum& s, double x)
{
    for (double e : s.eigenvalues)
        if (std::abs(e - x) < eig_tol)
            return true;
    return false;
}

} // namespace

TEST_CASE("set partition graphs")
{
    const auto g = from_set_partition(SetPartition::parse("{1,3,5|2,4}"));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 3}, {1, 5}, {2, 4}, {3, 5}});
    CHECK(components(g).size() == 2);
    CHECK(from_set_partition(SetPartition::parse("{1|2}")).edge_count() == 0);
    CHECK(from_set_partition(SetPartition::parse("{1,2}")).edge_count() == 1);
}

TEST_CASE("partition graphs are disjoint cliques, one per block")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& sp : enumerate_set_partitions(n)) {
            const auto g = from_set_partition(sp);
            const auto comps = components(g);
            CHECK(comps.size() == sp.block_count());
            for (const auto& c : comps)
                for (int u : c)
                    for (int v : c)
                        if (u != v)
                            CHECK(g.adjacency()[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)] == 1);
        }
}

TEST_CASE("degrees")
{
    CHECK(degree(Multigraph(1, {{1, 1}}), 1) == 2);
    const auto tri = cycle_graph(3);
    for (int v = 1; v <= 3; ++v)
        CHECK(degree(tri, v) == 2);
    const Multigraph triple(2, {{1, 2}, {2, 1}, {1, 2}});
    CHECK(degree(triple, 1) == 3);
    CHECK(degree(triple, 2) == 3);
    CHECK_THROWS(degree(tri, 4));
    CHECK_THROWS(Multigraph(2, {{1, 3}}));
}

TEST_CASE("handshake identity on random multigraphs")
{
    std::mt19937_64 gen(500);
    for (int t = 0; t < 500; ++t) {
        const auto g = random_multigraph(gen, 12, 40, true);
        CHECK(handshake_check(g));
        std::int64_t total = 0;
        for (const auto& row : g.adjacency())
            for (auto x : row)
                total += x;
        CHECK(total == 2 * static_cast<std::int64_t>(g.edge_count()));
    }
}

TEST_CASE("walks")
{
    CHECK(count_walks(Multigraph(2, {{1, 2}}), 1, 2, 1) == 1);
    CHECK(count_walks(Multigraph(1, {{1, 1}}), 1, 1, 2) == 1);
    CHECK(count_walks(Multigraph(1, {{1, 1}}), 1, 1, 1) == 0);
    CHECK(count_walks(cycle_graph(3), 1, 1, 3) == 2);
    CHECK(count_walks(Multigraph(2, {{1, 2}, {1, 2}}), 1, 1, 2) == 4);
    CHECK_THROWS(count_walks(cycle_graph(3), 1, 1, 21));
}

TEST_CASE("walk counts equal adjacency powers on loop-free graphs")
{
    std::mt19937_64 gen(6);
    for (int t = 0; t < 100; ++t) {
        const auto g = random_multigraph(gen, 7, 14, false);
        const auto n = g.n();
        Eigen::MatrixXd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a(i, j) = static_cast<double>(g.adjacency()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
        for (int m = 0; m <= 6; ++m) {
            for (int x = 1; x <= n; ++x)
                for (int y = 1; y <= n; ++y)
                    CHECK(count_walks(g, x, y, m).convert_to<double>() == power(x - 1, y - 1));
            power = power * a;
        }
    }
}

TEST_CASE("loops shift walks by two")
{
    const Multigraph g(2, {{1, 1}, {1, 2}});
    // loop+edge, three edges
    CHECK(count_walks(g, 1, 2, 3) == 2);
    // loop+loop, loop+edge+edge, edge+edge+loop, four edges
    CHECK(count_walks(g, 1, 1, 4) == 4);
}

TEST_CASE("components and connectivity")
{
    CHECK(components(cycle_graph(3).disjoint_union(cycle_graph(3))).size() == 2);
    CHECK(components(Multigraph(3)).size() == 3);
    CHECK(is_connected(cycle_graph(5)));
    CHECK_FALSE(is_connected(Multigraph(2)));
}

TEST_CASE("regularity and bipartiteness")
{
    const auto c6 = cycle_graph(6);
    CHECK(is_k_regular(c6, 2));
    const auto b6 = is_bipartite(c6);
    CHECK(b6.bipartite);
    for (const auto& [u, v] : c6.edges())
        CHECK(b6.coloring[static_cast<std::size_t>(u - 1)] != b6.coloring[static_cast<std::size_t>(v - 1)]);

    const auto tri = cycle_graph(3);
    CHECK(is_k_regular(tri, 2));
    const auto b3 = is_bipartite(tri);
    CHECK_FALSE(b3.bipartite);
    CHECK(b3.odd_closed_walk.size() % 2 == 0);

    const auto loop = is_bipartite(Multigraph(3, {{1, 2}, {3, 3}}));
    CHECK_FALSE(loop.bipartite);
    CHECK(loop.odd_closed_walk == std::vector<int>{3, 3});
}

TEST_CASE("odd closed walk witnesses are genuine")
{
    std::mt19937_64 gen(77);
    for (int t = 0; t < 200; ++t) {
        const auto g = random_multigraph(gen, 9, 12, false);
        const auto b = is_bipartite(g);
        if (b.bipartite) {
            for (const auto& [u, v] : g.edges())
                CHECK(b.coloring[static_cast<std::size_t>(u - 1)] != b.coloring[static_cast<std::size_t>(v - 1)]);
            continue;
        }
        const auto& w = b.odd_closed_walk;
        REQUIRE(w.size() >= 2);
        CHECK(w.front() == w.back());
        CHECK((w.size() - 1) % 2 == 1);
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            CHECK(g.adjacency()[static_cast<std::size_t>(w[i] - 1)][static_cast<std::size_t>(w[i + 1] - 1)] > 0);
    }
}

TEST_CASE("spectra")
{
    const auto tri = spectrum(cycle_graph(3));
    REQUIRE(tri.eigenvalues.size() == 3);
    CHECK(std::abs(tri.eigenvalues[0] + 1) < eig_tol);
    CHECK(std::abs(tri.eigenvalues[1] + 1) < eig_tol);
    CHECK(std::abs(tri.eigenvalues[2] - 2) < eig_tol);

    const auto two = spectrum(cycle_graph(3).disjoint_union(cycle_graph(3)));
    CHECK(std::abs(two.largest() - 2) < eig_tol);
    CHECK(two.multiplicity_of(2.0, eig_tol) == 2);

    CHECK(has_eigenvalue(spectrum(cycle_graph(6)), -2.0));
    CHECK_THROWS(spectrum(Multigraph(513)));
    CHECK_THROWS(spectrum(cycle_graph(5), 1e-10, 0));
}

TEST_CASE("spectrum agrees with a reference eigensolver")
{
    std::mt19937_64 gen(31);
    for (int t = 0; t < 60; ++t) {
        const auto g = random_multigraph(gen, 14, 30, true);
        const int n = g.n();
        Eigen::MatrixXd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a(i, j) = static_cast<double>(g.adjacency()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a);
        const auto s = spectrum(g);
        REQUIRE(s.eigenvalues.size() == static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            CHECK(std::abs(s.eigenvalues[static_cast<std::size_t>(i)] - ref.eigenvalues()(i)) < eig_tol);
        std::size_t total = 0;
        for (const auto& grp : s.groups)
            total += grp.multiplicity;
        CHECK(total == static_cast<std::size_t>(n));
    }
}

TEST_CASE("regular graphs: top eigenvalue k with multiplicity = components, all |lambda| <= k")
{
    std::vector<Multigraph> graphs;
    graphs.push_back(cycle_graph(5).disjoint_union(cycle_graph(7)).disjoint_union(cycle_graph(4)));
    graphs.push_back(complete_graph(4).disjoint_union(complete_graph(4)));
    graphs.push_back(complete_graph(5).disjoint_union(complete_graph(5)).disjoint_union(complete_graph(5)));
    graphs.push_back(cycle_graph(8));
    graphs.push_back(complete_bipartite_graph(3, 3).disjoint_union(complete_bipartite_graph(3, 3)));
    graphs.push_back(fano_incidence_graph());
    for (const auto& g : graphs) {
        const auto k = degree(g, 1);
        REQUIRE(is_k_regular(g, k));
        const auto s = spectrum(g);
        CHECK(std::abs(s.largest() - static_cast<double>(k)) < eig_tol);
        CHECK(s.multiplicity_of(static_cast<double>(k), eig_tol) == components(g).size());
        for (double e : s.eigenvalues)
            CHECK(std::abs(e) <= static_cast<double>(k) + eig_tol);
        if (is_bipartite(g).bipartite)
            CHECK(has_eigenvalue(s, -static_cast<double>(k)));
    }
}

TEST_CASE("betweenness and distances")
{
    const auto path = Multigraph(3, {{1, 2}, {2, 3}});
    CHECK(betweenness(path) == std::vector<Rational>{0, 1, 0});
    for (const auto& x : betweenness(complete_graph(4)))
        CHECK(x == 0);
    const auto c5 = distance_stats(cycle_graph(5));
    CHECK(c5.diameter == 2);
    CHECK(c5.average == Rational(3, 2));
    CHECK_THROWS(distance_stats(Multigraph(2)));
    // Square: each opposite pair has two shortest paths, one through each other vertex.
    for (const auto& x : betweenness(cycle_graph(4)))
        CHECK(x == Rational(1, 2));
    // Star K_{1,3}: the centre lies on all three leaf pairs.
    CHECK(betweenness(complete_bipartite_graph(1, 3)) == std::vector<Rational>{3, 0, 0, 0});
}

TEST_CASE("betweenness is independent of worker count")
{
    std::mt19937_64 gen(8);
    for (int t = 0; t < 20; ++t) {
        const auto g = random_multigraph(gen, 12, 25, true);
        CHECK(betweenness(g, 1) == betweenness(g, 3));
    }
}

TEST_CASE("configurations")
{
    CHECK(is_configuration(cycle_graph(6), 3, 3, 2, 2));
    CHECK_FALSE(is_configuration(complete_bipartite_graph(2, 2), 2, 2, 2, 2));
    CHECK(is_configuration(fano_incidence_graph(), 7, 7, 3, 3));
    CHECK_FALSE(is_configuration(cycle_graph(6), 3, 3, 3, 3));
    CHECK_FALSE(is_configuration(cycle_graph(6).disjoint_union(cycle_graph(6)), 6, 6, 2, 2));
    CHECK(is_configuration(complete_bipartite_graph(1, 3), 3, 1, 1, 3));
}

TEST_CASE("edge list format")
{
    const auto g = Multigraph::parse_edge_list("n 3\n# comment\n1 2\n2 2\n2 1\n");
    CHECK(g.n() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.loops_at(2) == 1);
    CHECK(degree(g, 2) == 4);
    CHECK(Multigraph::parse_edge_list(g.to_edge_list()).edges() == g.edges());
    CHECK_THROWS(Multigraph::parse_edge_list("1 2\n"));
    CHECK_THROWS(Multigraph::parse_edge_list("n 2\n1\n"));
}
