#include "combilang/horn.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace combilang {

namespace {

std::string set_str(const IndexSet& s)
{
    std::string out = "{";
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (x)
            out += ", ";
        out += std::to_string(s[x]);
    }
    return out + "}";
}

int sum(const IndexSet& s) { return std::accumulate(s.begin(), s.end(), 0); }

void check_range(int n, int r)
{
    if (n < 1 || r < 1)
        throw std::invalid_argument("Horn sets need n >= 1 and r >= 1");
    if (r > n)
        throw std::invalid_argument("Horn sets need r <= n (got r=" + std::to_string(r) +
                                    ", n=" + std::to_string(n) + ")");
}

} // namespace

std::string IndexTriple::str() const
{
    return "(" + set_str(i) + ", " + set_str(j) + ", " + set_str(k) + ")";
}

bool HornSet::contains(const IndexTriple& t) const
{
    return std::binary_search(triples.begin(), triples.end(), t);
}

std::string HornSet::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : triples)
        arr.push_back({t.i, t.j, t.k});
    return arr.dump();
}

std::string HornSet::to_text() const
{
    std::string out;
    for (const auto& t : triples)
        out += t.str() + "\n";
    return out;
}

std::vector<IndexSet> combinations(int n, int r)
{
    std::vector<IndexSet> out;
    if (r < 0 || r > n)
        return out;
    IndexSet cur(static_cast<std::size_t>(r));
    std::iota(cur.begin(), cur.end(), 1);
    for (;;) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - r + i + 1)
            --i;
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

HornSet HornCalculator::compute_u(int n, int r) const
{
    check_range(n, r);
    const auto subsets = combinations(n, r);
    std::vector<int> sums(subsets.size());
    for (std::size_t s = 0; s < subsets.size(); ++s)
        sums[s] = sum(subsets[s]);
    const int shift = r * (r + 1) / 2;

    // Each worker handles a contiguous range of I; chunks are joined in order.
    const std::size_t workers = std::min<std::size_t>(jobs_, subsets.size());
    std::vector<std::vector<IndexTriple>> chunks(workers);
    auto work = [&](std::size_t w) {
        const std::size_t begin = subsets.size() * w / workers;
        const std::size_t end = subsets.size() * (w + 1) / workers;
        for (std::size_t a = begin; a < end; ++a)
            for (std::size_t b = 0; b < subsets.size(); ++b)
                for (std::size_t c = 0; c < subsets.size(); ++c)
                    if (sums[a] + sums[b] == sums[c] + shift)
                        chunks[w].push_back({subsets[a], subsets[b], subsets[c]});
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w)
            threads.emplace_back(work, w);
        for (auto& t : threads)
            t.join();
    }

    HornSet out{n, r, {}};
    for (auto& chunk : chunks)
        out.triples.insert(out.triples.end(), chunk.begin(), chunk.end());
    return out;
}

std::shared_ptr<const HornSet> HornCalculator::compute_t(int n, int r)
{
    check_range(n, r);
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find({n, r}); it != memo_.end())
            return it->second;
    }

    std::vector<std::pair<int, std::shared_ptr<const HornSet>>> smaller;
    for (int p = 1; p < r; ++p)
        smaller.emplace_back(p, compute_t(r, p));

    HornSet u = compute_u(n, r);
    HornSet t{n, r, {}};
    for (auto& triple : u.triples) {
        bool keep = true;
        for (const auto& [p, set] : smaller) {
            const int shift = p * (p + 1) / 2;
            for (const auto& fgh : set->triples) {
                int lhs = 0;
                int rhs = shift;
                for (int f : fgh.i)
                    lhs += triple.i[static_cast<std::size_t>(f - 1)];
                for (int g : fgh.j)
                    lhs += triple.j[static_cast<std::size_t>(g - 1)];
                for (int h : fgh.k)
                    rhs += triple.k[static_cast<std::size_t>(h - 1)];
                if (lhs > rhs) {
                    keep = false;
                    break;
                }
            }
            if (!keep)
                break;
        }
        if (keep)
            t.triples.push_back(std::move(triple));
    }

    auto result = std::make_shared<const HornSet>(std::move(t));
    std::unique_lock lock(mutex_);
    return memo_.try_emplace({n, r}, std::move(result)).first->second;
}

namespace {

HornCalculator& shared_calculator()
{
    static HornCalculator calc;
    return calc;
}

} // namespace

HornSet compute_u(int n, int r) { return shared_calculator().compute_u(n, r); }

HornSet compute_t(int n, int r) { return *shared_calculator().compute_t(n, r); }

Partition partition_from_indices(const IndexSet& indices)
{
    for (std::size_t x = 1; x < indices.size(); ++x)
        if (indices[x] <= indices[x - 1])
            throw std::invalid_argument("index set must be strictly increasing");
    std::vector<int> parts;
    for (std::size_t f = indices.size(); f-- > 0;)
        parts.push_back(indices[f] - static_cast<int>(f + 1));
    return Partition(std::move(parts));
}

bool is_admissible(const Partition& lambda, const Partition& mu, const Partition& nu, int n,
                   HornCalculator& calc)
{
    if (n < 1)
        throw std::invalid_argument("admissibility needs n >= 1");
    for (const auto* p : {&lambda, &mu, &nu})
        if (p->length() > static_cast<std::size_t>(n))
            throw std::invalid_argument("partition (" + p->str() + ") has more than n parts");
    if (lambda.weight() + mu.weight() != nu.weight())
        return false;

    for (int r = 1; r < n; ++r) {
        auto t = calc.compute_t(n, r);
        for (const auto& triple : t->triples) {
            int lhs = 0;
            int rhs = 0;
            for (int k : triple.k)
                lhs += nu[static_cast<std::size_t>(k - 1)];
            for (int i : triple.i)
                rhs += lambda[static_cast<std::size_t>(i - 1)];
            for (int j : triple.j)
                rhs += mu[static_cast<std::size_t>(j - 1)];
            if (lhs > rhs)
                return false;
        }
    }
    return true;
}

bool is_admissible(const Partition& lambda, const Partition& mu, const Partition& nu, int n)
{
    return is_admissible(lambda, mu, nu, n, shared_calculator());
}

} // namespace combilang
