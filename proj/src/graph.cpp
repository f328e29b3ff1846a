#include "combilang/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace combilang {

Multigraph::Multigraph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges))
{
    if (n_ < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    const auto un = static_cast<std::size_t>(n_);
    adj_.assign(un, std::vector<std::int64_t>(un, 0));
    loops_.assign(un, 0);
    nbrs_.assign(un, {});
    for (auto& [u, v] : edges_) {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) + "," +
                                        std::to_string(v) + "}");
        if (u > v)
            std::swap(u, v);
        const auto a = static_cast<std::size_t>(u - 1);
        const auto b = static_cast<std::size_t>(v - 1);
        if (a == b) {
            adj_[a][a] += 2;
            ++loops_[a];
        } else {
            ++adj_[a][b];
            ++adj_[b][a];
        }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t a = 0; a < un; ++a)
        for (std::size_t b = 0; b < un; ++b)
            if (a != b && adj_[a][b] > 0)
                nbrs_[a].push_back(static_cast<int>(b + 1));
}

Multigraph Multigraph::parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<int> n;
    std::vector<std::pair<int, int>> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first))
            continue;
        if (!n) {
            int count = 0;
            if (first != "n" || !(fields >> count))
                throw std::invalid_argument("edge list must start with a header 'n <count>'");
            n = count;
            continue;
        }
        int u = 0;
        int v = 0;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected 'u v'");
        }
        if (!(fields >> v))
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected 'u v'");
        edges.emplace_back(u, v);
    }
    if (!n)
        throw std::invalid_argument("edge list is missing its 'n <count>' header");
    return Multigraph(*n, std::move(edges));
}

Multigraph Multigraph::load_edge_list(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open edge list: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str());
}

std::string Multigraph::to_edge_list() const
{
    std::string out = "n " + std::to_string(n_) + "\n";
    for (const auto& [u, v] : edges_)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Multigraph Multigraph::disjoint_union(const Multigraph& other) const
{
    auto edges = edges_;
    for (const auto& [u, v] : other.edges_)
        edges.emplace_back(u + n_, v + n_);
    return Multigraph(n_ + other.n_, std::move(edges));
}

Multigraph cycle_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle graphs need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n; ++v)
        edges.emplace_back(v, v % n + 1);
    return Multigraph(n, std::move(edges));
}

Multigraph complete_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            edges.emplace_back(u, v);
    return Multigraph(n, std::move(edges));
}

Multigraph complete_bipartite_graph(int a, int b)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= a; ++u)
        for (int v = 1; v <= b; ++v)
            edges.emplace_back(u, a + v);
    return Multigraph(a + b, std::move(edges));
}

Multigraph from_set_partition(const SetPartition& sp)
{
    std::vector<std::pair<int, int>> edges;
    for (const auto& block : sp.blocks())
        for (std::size_t x = 0; x < block.size(); ++x)
            for (std::size_t y = x + 1; y < block.size(); ++y)
                edges.emplace_back(block[x], block[y]);
    return Multigraph(sp.n(), std::move(edges));
}

namespace {

void check_vertex(const Multigraph& g, int v)
{
    if (v < 1 || v > g.n())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(g.n()));
}

} // namespace

std::int64_t degree(const Multigraph& g, int v)
{
    check_vertex(g, v);
    const auto& row = g.adjacency()[static_cast<std::size_t>(v - 1)];
    std::int64_t d = 0;
    for (auto x : row)
        d += x;
    return d;
}

bool handshake_check(const Multigraph& g)
{
    std::int64_t total = 0;
    for (int v = 1; v <= g.n(); ++v)
        total += degree(g, v);
    return total == 2 * static_cast<std::int64_t>(g.edge_count());
}

BigInt count_walks(const Multigraph& g, int x, int y, int r)
{
    check_vertex(g, x);
    check_vertex(g, y);
    if (r < 0 || r > 20)
        throw std::out_of_range("walk length must lie in 0..20");
    const auto n = static_cast<std::size_t>(g.n());
    const auto& adj = g.adjacency();
    // ways[len][v]: walks from x of total length len ending at v.
    std::vector<std::vector<BigInt>> ways(static_cast<std::size_t>(r) + 1, std::vector<BigInt>(n, BigInt(0)));
    ways[0][static_cast<std::size_t>(x - 1)] = 1;
    for (std::size_t len = 1; len <= static_cast<std::size_t>(r); ++len)
        for (std::size_t u = 0; u < n; ++u) {
            BigInt w = 0;
            for (std::size_t v = 0; v < n; ++v)
                if (v != u && adj[v][u] != 0 && ways[len - 1][v] != 0)
                    w += ways[len - 1][v] * adj[v][u];
            if (len >= 2 && g.loops_at(static_cast<int>(u + 1)) != 0)
                w += ways[len - 2][u] * g.loops_at(static_cast<int>(u + 1));
            ways[len][u] = std::move(w);
        }
    return ways[static_cast<std::size_t>(r)][static_cast<std::size_t>(y - 1)];
}

std::vector<std::vector<int>> components(const Multigraph& g)
{
    std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= g.n(); ++s) {
        if (comp[static_cast<std::size_t>(s - 1)] >= 0)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s - 1)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int u : g.neighbours(v))
                if (comp[static_cast<std::size_t>(u - 1)] < 0) {
                    comp[static_cast<std::size_t>(u - 1)] = id;
                    stack.push_back(u);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Multigraph& g) { return components(g).size() <= 1; }

bool is_k_regular(const Multigraph& g, std::int64_t k)
{
    for (int v = 1; v <= g.n(); ++v)
        if (degree(g, v) != k)
            return false;
    return true;
}

BipartiteResult is_bipartite(const Multigraph& g)
{
    BipartiteResult result;
    for (int v = 1; v <= g.n(); ++v)
        if (g.loops_at(v) > 0) {
            result.odd_closed_walk = {v, v};
            return result;
        }

    const auto n = static_cast<std::size_t>(g.n());
    std::vector<int> color(n, -1);
    std::vector<int> parent(n, 0);
    for (int s = 1; s <= g.n(); ++s) {
        if (color[static_cast<std::size_t>(s - 1)] >= 0)
            continue;
        color[static_cast<std::size_t>(s - 1)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : g.neighbours(v)) {
                auto& cu = color[static_cast<std::size_t>(u - 1)];
                const int cv = color[static_cast<std::size_t>(v - 1)];
                if (cu < 0) {
                    cu = 1 - cv;
                    parent[static_cast<std::size_t>(u - 1)] = v;
                    queue.push_back(u);
                } else if (cu == cv) {
                    // Odd cycle: tree paths from u and v up to their common ancestor, plus edge {u,v}.
                    std::vector<int> pu{u};
                    std::vector<int> pv{v};
                    while (pu.back() != s)
                        pu.push_back(parent[static_cast<std::size_t>(pu.back() - 1)]);
                    while (pv.back() != s)
                        pv.push_back(parent[static_cast<std::size_t>(pv.back() - 1)]);
                    while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
                        pu.pop_back();
                        pv.pop_back();
                    }
                    // pu: u .. lca, pv: v .. lca
                    std::vector<int> walk(pv.begin(), pv.end());
                    std::reverse(walk.begin(), walk.end()); // lca .. v
                    walk.insert(walk.end(), pu.begin(), pu.end()); // lca .. v, u .. lca
                    result.odd_closed_walk = std::move(walk);
                    return result;
                }
            }
        }
    }
    result.bipartite = true;
    result.coloring = std::move(color);
    return result;
}

std::size_t Spectrum::multiplicity_of(double value, double radius) const
{
    for (const auto& grp : groups)
        if (std::abs(grp.value - value) <= radius)
            return grp.multiplicity;
    return 0;
}

Spectrum spectrum(const Multigraph& g, double tol, int max_sweeps)
{
    const auto n = static_cast<std::size_t>(g.n());
    if (n > 512)
        throw std::out_of_range("spectrum supports at most 512 vertices");
    if (!(tol > 0))
        throw std::invalid_argument("tolerance must be positive");

    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<double>(g.adjacency()[i][j]);

    auto off_norm = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    s += a[i][j] * a[i][j];
        return std::sqrt(s);
    };

    Spectrum out;
    out.tol = tol;
    int sweep = 0;
    for (; off_norm() >= tol; ++sweep) {
        if (sweep == max_sweeps)
            throw std::runtime_error("Jacobi iteration did not converge within " + std::to_string(max_sweeps) +
                                     " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p][q];
                if (apq == 0.0)
                    continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q)
                        continue;
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = a[p][k] = c * akp - s * akq;
                    a[k][q] = a[q][k] = s * akp + c * akq;
                }
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = a[q][p] = 0.0;
            }
    }
    out.sweeps = sweep;

    for (std::size_t i = 0; i < n; ++i)
        out.eigenvalues.push_back(a[i][i]);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());

    const double resolution = 10.0 * tol;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        double sum = out.eigenvalues[i];
        while (j < n && out.eigenvalues[j] - out.eigenvalues[j - 1] <= resolution)
            sum += out.eigenvalues[j++];
        out.groups.push_back({sum / static_cast<double>(j - i), j - i});
        i = j;
    }
    return out;
}

namespace {

// One single-source pass of the dependency accumulation; adds delta_s(v) into acc.
void accumulate_from(const Multigraph& g, int s, std::vector<Rational>& acc)
{
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<int> dist(n, -1);
    std::vector<BigInt> sigma(n, BigInt(0));
    std::vector<std::vector<int>> preds(n);
    std::vector<int> order;
    std::deque<int> queue{s};
    dist[static_cast<std::size_t>(s - 1)] = 0;
    sigma[static_cast<std::size_t>(s - 1)] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        const auto vi = static_cast<std::size_t>(v - 1);
        for (int w : g.neighbours(v)) {
            const auto wi = static_cast<std::size_t>(w - 1);
            if (dist[wi] < 0) {
                dist[wi] = dist[vi] + 1;
                queue.push_back(w);
            }
            if (dist[wi] == dist[vi] + 1) {
                sigma[wi] += sigma[vi];
                preds[wi].push_back(v);
            }
        }
    }
    std::vector<Rational> delta(n, Rational(0));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto wi = static_cast<std::size_t>(*it - 1);
        for (int v : preds[wi]) {
            const auto vi = static_cast<std::size_t>(v - 1);
            delta[vi] += Rational(sigma[vi], sigma[wi]) * (1 + delta[wi]);
        }
        if (*it != s)
            acc[wi] += delta[wi];
    }
}

} // namespace

std::vector<Rational> betweenness(const Multigraph& g, unsigned jobs)
{
    const auto n = static_cast<std::size_t>(g.n());
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
    std::vector<std::vector<Rational>> partial(workers, std::vector<Rational>(n, Rational(0)));
    auto work = [&](std::size_t w) {
        for (std::size_t s = n * w / workers; s < n * (w + 1) / workers; ++s)
            accumulate_from(g, static_cast<int>(s + 1), partial[w]);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w)
            threads.emplace_back(work, w);
        for (auto& t : threads)
            t.join();
    }
    std::vector<Rational> out(n, Rational(0));
    for (const auto& part : partial)
        for (std::size_t v = 0; v < n; ++v)
            out[v] += part[v];
    // Each unordered pair was counted from both endpoints.
    for (auto& x : out)
        x /= 2;
    return out;
}

DistanceStats distance_stats(const Multigraph& g)
{
    if (!is_connected(g))
        throw std::invalid_argument("distance statistics need a connected graph");
    const auto n = static_cast<std::size_t>(g.n());
    BigInt total = 0;
    DistanceStats out;
    for (int s = 1; s <= g.n(); ++s) {
        std::vector<int> dist(n, -1);
        std::deque<int> queue{s};
        dist[static_cast<std::size_t>(s - 1)] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbours(v))
                if (dist[static_cast<std::size_t>(w - 1)] < 0) {
                    dist[static_cast<std::size_t>(w - 1)] = dist[static_cast<std::size_t>(v - 1)] + 1;
                    queue.push_back(w);
                }
        }
        for (int t = s + 1; t <= g.n(); ++t) {
            const int d = dist[static_cast<std::size_t>(t - 1)];
            total += d;
            out.diameter = std::max(out.diameter, d);
        }
    }
    const BigInt pairs = BigInt(n) * BigInt(n > 0 ? n - 1 : 0) / 2;
    out.average = pairs == 0 ? Rational(0) : Rational(total, pairs);
    return out;
}

bool is_configuration(const Multigraph& g, int v, int b, int r, int k)
{
    const auto n = static_cast<std::size_t>(g.n());
    const auto& adj = g.adjacency();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (adj[x][y] > 1 || (x == y && adj[x][y] != 0))
                return false;
    if (!is_connected(g))
        return false;
    auto bip = is_bipartite(g);
    if (!bip.bipartite)
        return false;

    std::vector<int> side[2];
    for (std::size_t x = 0; x < n; ++x)
        side[bip.coloring[x]].push_back(static_cast<int>(x + 1));

    auto all_degree = [&](const std::vector<int>& vs, int d) {
        return std::all_of(vs.begin(), vs.end(), [&](int x) { return degree(g, x) == d; });
    };
    auto fits = [&](const std::vector<int>& points, const std::vector<int>& lines) {
        return static_cast<int>(points.size()) == v && static_cast<int>(lines.size()) == b &&
               all_degree(points, r) && all_degree(lines, k);
    };
    if (!fits(side[0], side[1]) && !fits(side[1], side[0]))
        return false;

    for (const auto& vs : side)
        for (std::size_t x = 0; x < vs.size(); ++x)
            for (std::size_t y = x + 1; y < vs.size(); ++y) {
                const auto& nx = g.neighbours(vs[x]);
                const auto& ny = g.neighbours(vs[y]);
                std::vector<int> common;
                std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(common));
                if (common.size() >= 2)
                    return false;
            }
    return true;
}

Multigraph fano_incidence_graph()
{
    const int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    std::vector<std::pair<int, int>> edges;
    for (int l = 0; l < 7; ++l)
        for (int p : lines[l])
            edges.emplace_back(p, 8 + l);
    return Multigraph(14, std::move(edges));
}

} // namespace combilang
