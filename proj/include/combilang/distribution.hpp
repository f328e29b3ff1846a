#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "combilang/exact.hpp"
#include "combilang/partition.hpp"

namespace combilang {

/// Rectangular table of string entries with named columns and unique row
/// indices.
class DataTable {
public:
    DataTable(std::vector<std::string> columns, std::vector<std::string> index,
              std::vector<std::vector<std::string>> rows);

    /// CSV with a header row; the first column holds the row indices.
    static DataTable parse_csv(std::string_view text);
    static DataTable load_csv(const std::string& path);

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::string>& index() const { return index_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }
    std::size_t row_count() const { return rows_.size(); }
    std::size_t column_count() const { return columns_.size(); }

    /// Position of a named column; throws std::invalid_argument if absent.
    std::size_t column(std::string_view name) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::string> index_;
    std::vector<std::vector<std::string>> rows_;
};

/// Entry positions 1..rows*cols in row-major order, grouped by equal value.
SetPartition table_partition(const DataTable& t);

struct LinkageResult {
    std::vector<Rational> probabilities; // one per row, in table order
    std::vector<std::string> linked;     // indices of the matching rows
    bool empty_match = false;

    Rational total() const;
    std::string to_json() const;
};

/// Rows whose projection onto `cols` equals `y` each receive 1/|J|.
LinkageResult uniform_reidentification(const std::vector<std::string>& y, const DataTable& t,
                                       const std::vector<std::string>& cols);

struct HornProbability {
    BigInt lr_coefficient;
    BigInt box_strings;          // 2^n
    unsigned symmetry_order = 12; // dihedral group of the hexagon
    BigInt denominator;          // 3 * 2^(n+2) = 12 * 2^n
    Rational probability;

    std::string to_json() const;
};

/// c^gamma_{lambda,mu} / (3 * 2^(n+2)).
HornProbability horn_probability(const Partition& gamma, const Partition& lambda, const Partition& mu, int n);

} // namespace combilang
