#include "combilang/tableaux.hpp"

#include <stdexcept>

namespace combilang {

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner))
{
    if (!inner_.fits_in(outer_))
        throw std::invalid_argument("inner shape (" + inner_.str() + ") does not fit in outer shape (" +
                                    outer_.str() + ")");
}

std::vector<int> reading_word(const LRFilling& f)
{
    std::vector<int> word;
    for (const auto& row : f.entries)
        for (auto it = row.rbegin(); it != row.rend(); ++it)
            word.push_back(*it);
    return word;
}

namespace {

// Depth-first over boxes in reading order. Because rows are filled top to
// bottom and right to left, each new box already knows its right neighbour
// (row weakly increases) and the box above (column strictly increases), and
// the lattice condition can be checked on the growing prefix.
class FillingSearch {
public:
    FillingSearch(const SkewShape& skew, const Partition& content,
                  const std::function<void(const LRFilling&)>& visit)
        : skew_(skew), content_(content.padded(content.length())), visit_(visit)
    {
        filling_.entries.resize(skew.rows());
        for (std::size_t r = 0; r < skew.rows(); ++r)
            filling_.entries[r].assign(static_cast<std::size_t>(skew.row_end(r) - skew.row_begin(r)), 0);
        used_.assign(content_.size() + 1, 0);
    }

    void run() { place(0, skew_.row_end(0) - 1); }

private:
    int& at(std::size_t row, int col)
    {
        return filling_.entries[row][static_cast<std::size_t>(col - skew_.row_begin(row))];
    }

    void place(std::size_t row, int col)
    {
        // Advance to the next row once the current one is done.
        while (row < skew_.rows() && col < skew_.row_begin(row)) {
            ++row;
            if (row < skew_.rows())
                col = skew_.row_end(row) - 1;
        }
        if (row >= skew_.rows()) {
            visit_(filling_);
            return;
        }

        int hi = static_cast<int>(content_.size());
        if (col + 1 < skew_.row_end(row))
            hi = std::min(hi, at(row, col + 1));
        int lo = 1;
        if (row > 0 && col >= skew_.row_begin(row - 1) && col < skew_.row_end(row - 1))
            lo = at(row - 1, col) + 1;

        for (int v = lo; v <= hi; ++v) {
            auto uv = static_cast<std::size_t>(v);
            if (used_[uv] >= content_[uv - 1])
                continue;
            if (v > 1 && used_[uv] + 1 > used_[uv - 1])
                continue;
            ++used_[uv];
            at(row, col) = v;
            place(row, col - 1);
            --used_[uv];
        }
        at(row, col) = 0;
    }

    const SkewShape& skew_;
    std::vector<int> content_;
    const std::function<void(const LRFilling&)>& visit_;
    LRFilling filling_;
    std::vector<int> used_;
};

} // namespace

void for_each_lr_filling(const SkewShape& skew, const Partition& content,
                         const std::function<void(const LRFilling&)>& visit)
{
    if (content.weight() != skew.boxes())
        throw std::invalid_argument("content weight " + std::to_string(content.weight()) +
                                    " does not match the " + std::to_string(skew.boxes()) + " skew boxes");
    if (skew.boxes() == 0) {
        LRFilling empty;
        empty.entries.resize(skew.rows());
        visit(empty);
        return;
    }
    FillingSearch(skew, content, visit).run();
}

std::vector<LRFilling> enumerate_lr_fillings(const SkewShape& skew, const Partition& content)
{
    std::vector<LRFilling> out;
    for_each_lr_filling(skew, content, [&](const LRFilling& f) { out.push_back(f); });
    return out;
}

BigInt lr_coefficient(const Partition& outer, const Partition& inner, const Partition& content)
{
    if (inner.weight() + content.weight() != outer.weight() || !inner.fits_in(outer))
        return 0;
    std::uint64_t count = 0;
    for_each_lr_filling(SkewShape(outer, inner), content, [&](const LRFilling&) { ++count; });
    return BigInt(count);
}

} // namespace combilang
