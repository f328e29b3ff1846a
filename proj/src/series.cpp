#include "combilang/series.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace combilang {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    if (coeffs_.empty())
        throw std::invalid_argument("series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::zero(std::size_t order)
{
    return TruncatedSeries(std::vector<Rational>(order + 1, Rational(0)));
}

TruncatedSeries TruncatedSeries::one(std::size_t order)
{
    auto s = zero(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_ints(const std::vector<long long>& coefficients, std::size_t order)
{
    std::vector<Rational> c(order + 1, Rational(0));
    for (std::size_t i = 0; i < coefficients.size() && i <= order; ++i)
        c[i] = coefficients[i];
    return TruncatedSeries(std::move(c));
}

std::string TruncatedSeries::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_)
        arr.push_back(to_pq(c));
    return arr.dump();
}

TruncatedSeries TruncatedSeries::from_json(const std::string& text)
{
    auto arr = nlohmann::json::parse(text);
    if (!arr.is_array())
        throw std::invalid_argument("series JSON must be an array");
    std::vector<Rational> c;
    for (const auto& v : arr)
        c.push_back(parse_pq(v.get<std::string>()));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1);
    for (std::size_t i = 0; i <= order; ++i)
        c[i] = a.coeffs_[i] + b.coeffs_[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1, Rational(0));
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= order; ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries seq_ogf(const TruncatedSeries& atoms)
{
    if (atoms[0] != 0)
        throw std::invalid_argument("SEQ requires an atom series with zero constant term");
    const std::size_t order = atoms.order();
    std::vector<Rational> b(order + 1, Rational(0));
    b[0] = 1;
    // B = 1 + A*B
    for (std::size_t n = 1; n <= order; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            b[n] += atoms[i] * b[n - i];
    return TruncatedSeries(std::move(b));
}

TruncatedSeries seq_k_ogf(const TruncatedSeries& atoms, unsigned k)
{
    auto result = TruncatedSeries::one(atoms.order());
    auto base = atoms;
    while (k > 0) {
        if (k & 1u)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

} // namespace combilang
