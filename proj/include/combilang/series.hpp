#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "combilang/exact.hpp"

namespace combilang {

/// Power series c_0 + c_1 z + ... + c_N z^N with exact rational coefficients,
/// truncated at order N. Arithmetic never produces terms past N.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Rational> coefficients);
    /// The zero series of order N.
    static TruncatedSeries zero(std::size_t order);
    static TruncatedSeries one(std::size_t order);
    /// Coefficients given as integers, padded with zeros up to `order`.
    static TruncatedSeries from_ints(const std::vector<long long>& coefficients, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }

    /// JSON array of "p/q" strings.
    std::string to_json() const;
    static TruncatedSeries from_json(const std::string& text);

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// 1 / (1 - A(z)): the counting series of SEQ(A). A must have zero constant term.
TruncatedSeries seq_ogf(const TruncatedSeries& atoms);

/// A(z)^k, read as an ordinary generating function (k-sequences of atoms).
TruncatedSeries seq_k_ogf(const TruncatedSeries& atoms, unsigned k);

} // namespace combilang
