#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace combilang {

/// Integer partition with non-increasing positive parts. Inputs are
/// normalized: parts are sorted descending and zero parts dropped.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// "5,3,3,1"; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    /// Part i (0-based), 0 beyond the length.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Parts zero-padded (or left as is) to `n` entries.
    std::vector<int> padded(std::size_t n) const;

    /// Whether this diagram fits inside `outer` row by row.
    bool fits_in(const Partition& outer) const;

    std::string str() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// All partitions of `weight` (descending lexicographic order), optionally
/// limited to at most `max_parts` parts each at most `max_part`.
std::vector<Partition> partitions_of(int weight, int max_parts = -1, int max_part = -1);

/// No part divisible by k.
bool is_k_regular(const Partition& p, int k);

// ---------------------------------------------------------------------------

/// Set partition of {1..n}; blocks are sorted internally and ordered by their
/// smallest element.
class SetPartition {
public:
    SetPartition(int n, std::vector<std::vector<int>> blocks);

    /// Parses "{1,3,5|2,4}".
    static SetPartition parse(std::string_view text);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }

    /// "{1,3,5|2,4}"
    std::string str() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
};

class RgsError : public std::invalid_argument {
public:
    RgsError(std::size_t position, const std::string& what)
        : std::invalid_argument(what), position_(position)
    {
    }
    /// 1-based position of the first violating letter.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Restricted growth word: letters a, b, c, ... whose first occurrences appear
/// in alphabetical order.
class RgsWord {
public:
    explicit RgsWord(std::string word);

    const std::string& str() const { return word_; }
    std::size_t size() const { return word_.size(); }

    friend bool operator==(const RgsWord&, const RgsWord&) = default;

private:
    std::string word_;
};

/// Position i carries letter k iff i lies in block k.
RgsWord partition_to_word(const SetPartition& sp);
SetPartition word_to_partition(const RgsWord& w);

/// Single-consumer stream over the set partitions of {1..n} in RGS
/// lexicographic order, 1 <= n <= 12.
class SetPartitionStream {
public:
    explicit SetPartitionStream(int n);
    std::optional<SetPartition> next();

private:
    int n_;
    std::vector<int> code_; // 0-based RGS
    std::vector<int> prefix_max_;
    bool done_ = false;
    bool started_ = false;
};

std::vector<SetPartition> enumerate_set_partitions(int n);

// ---------------------------------------------------------------------------

/// Numerical semigroup generated by positive integers with gcd 1.
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(std::vector<std::int64_t> generators);
    static NumericalSemigroup parse(std::string_view text);

    const std::vector<std::int64_t>& generators() const { return gens_; }
    /// Smallest c such that every integer >= c is a member.
    std::int64_t conductor() const { return conductor_; }
    std::int64_t frobenius() const { return conductor_ - 1; }

    bool contains(std::int64_t x) const;

private:
    std::vector<std::int64_t> gens_;
    std::vector<bool> table_; // membership for 0 .. conductor-1
    std::int64_t conductor_ = 0;
};

bool semigroup_member(const NumericalSemigroup& s, std::int64_t x);

/// Homogeneous linear pattern c_1 x_1 + ... + c_n x_n, all c_i nonzero.
class LinearPattern {
public:
    explicit LinearPattern(std::vector<std::int64_t> coefficients);
    static LinearPattern parse(std::string_view text);

    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    std::size_t arity() const { return coeffs_.size(); }
    std::int64_t evaluate(const std::vector<std::int64_t>& values) const;

private:
    std::vector<std::int64_t> coeffs_;
};

/// Bounded verdict: `admitted` only means no counterexample among member tuples
/// s_1 >= ... >= s_n with s_1 <= bound.
struct PatternVerdict {
    bool admitted = true;
    std::int64_t bound = 0;
    std::vector<std::int64_t> counterexample;
};

PatternVerdict pattern_admitted(const NumericalSemigroup& s, const LinearPattern& p, std::int64_t bound);

} // namespace combilang
