#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "combilang/exact.hpp"
#include "combilang/partition.hpp"

namespace combilang {

/// Left-justified rows of boxes, row i holding shape[i] boxes.
class YoungDiagram {
public:
    explicit YoungDiagram(Partition shape) : shape_(std::move(shape)) {}
    const Partition& shape() const { return shape_; }
    std::size_t rows() const { return shape_.length(); }
    int boxes() const { return shape_.weight(); }

private:
    Partition shape_;
};

/// outer \ inner. Row i covers columns inner[i] .. outer[i]-1 (0-based).
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    std::size_t rows() const { return outer_.length(); }
    int row_begin(std::size_t row) const { return inner_[row]; }
    int row_end(std::size_t row) const { return outer_[row]; }
    int boxes() const { return outer_.weight() - inner_.weight(); }

private:
    Partition outer_;
    Partition inner_;
};

/// Semistandard filling of a skew shape whose reading word is a lattice word.
/// entries[i] lists row i's skew boxes from left to right.
struct LRFilling {
    std::vector<std::vector<int>> entries;
};

/// Entries listed top row first, each row right to left.
std::vector<int> reading_word(const LRFilling& f);

/// Calls `visit` once per LR filling of `skew` with the given content.
/// Throws when |content| differs from the number of skew boxes.
void for_each_lr_filling(const SkewShape& skew, const Partition& content,
                         const std::function<void(const LRFilling&)>& visit);

std::vector<LRFilling> enumerate_lr_fillings(const SkewShape& skew, const Partition& content);

/// c^outer_{inner,content}; zero for incompatible shapes or weights.
BigInt lr_coefficient(const Partition& outer, const Partition& inner, const Partition& content);

} // namespace combilang
