#include "combilang/distribution.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/tokenizer.hpp>
#include <json.hpp>

#include "combilang/tableaux.hpp"

namespace combilang {

DataTable::DataTable(std::vector<std::string> columns, std::vector<std::string> index,
                     std::vector<std::vector<std::string>> rows)
    : columns_(std::move(columns)), index_(std::move(index)), rows_(std::move(rows))
{
    if (index_.size() != rows_.size())
        throw std::invalid_argument("one index per row is required");
    std::set<std::string> seen;
    for (const auto& i : index_)
        if (!seen.insert(i).second)
            throw std::invalid_argument("duplicate row index: " + i);
    std::set<std::string> names;
    for (const auto& c : columns_)
        if (!names.insert(c).second)
            throw std::invalid_argument("duplicate column name: " + c);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r].size() != columns_.size())
            throw std::invalid_argument("row " + index_[r] + " has " + std::to_string(rows_[r].size()) +
                                        " entries, expected " + std::to_string(columns_.size()));
}

DataTable DataTable::parse_csv(std::string_view text)
{
    using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> header;
    std::vector<std::string> index;
    std::vector<std::vector<std::string>> rows;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        Tokenizer tok(line);
        std::vector<std::string> fields(tok.begin(), tok.end());
        if (fields.empty())
            throw std::invalid_argument("CSV line without fields");
        if (!have_header) {
            header.assign(fields.begin() + 1, fields.end());
            have_header = true;
            continue;
        }
        index.push_back(fields.front());
        rows.emplace_back(fields.begin() + 1, fields.end());
    }
    if (!have_header)
        throw std::invalid_argument("CSV table has no header row");
    return DataTable(std::move(header), std::move(index), std::move(rows));
}

DataTable DataTable::load_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open table: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_csv(ss.str());
}

std::size_t DataTable::column(std::string_view name) const
{
    for (std::size_t c = 0; c < columns_.size(); ++c)
        if (columns_[c] == name)
            return c;
    throw std::invalid_argument("no column named \"" + std::string(name) + "\"");
}

SetPartition table_partition(const DataTable& t)
{
    if (t.row_count() == 0 || t.column_count() == 0)
        throw std::invalid_argument("table has no entries");
    std::map<std::string, std::vector<int>> groups;
    int position = 0;
    for (const auto& row : t.rows())
        for (const auto& entry : row)
            groups[entry].push_back(++position);
    std::vector<std::vector<int>> blocks;
    for (auto& [value, members] : groups)
        blocks.push_back(std::move(members));
    return SetPartition(position, std::move(blocks));
}

Rational LinkageResult::total() const
{
    Rational sum = 0;
    for (const auto& p : probabilities)
        sum += p;
    return sum;
}

std::string LinkageResult::to_json() const
{
    nlohmann::json doc;
    doc["linked"] = linked;
    doc["empty_match"] = empty_match;
    auto probs = nlohmann::json::array();
    for (const auto& p : probabilities)
        probs.push_back(to_pq(p));
    doc["probabilities"] = probs;
    return doc.dump();
}

LinkageResult uniform_reidentification(const std::vector<std::string>& y, const DataTable& t,
                                       const std::vector<std::string>& cols)
{
    if (cols.empty())
        throw std::invalid_argument("at least one column is required");
    if (y.size() != cols.size())
        throw std::invalid_argument("one value per selected column is required");
    std::vector<std::size_t> positions;
    std::set<std::string> distinct;
    for (const auto& c : cols) {
        if (!distinct.insert(c).second)
            throw std::invalid_argument("column listed twice: " + c);
        positions.push_back(t.column(c));
    }

    LinkageResult out;
    std::vector<bool> match(t.row_count(), false);
    for (std::size_t r = 0; r < t.row_count(); ++r) {
        bool all = true;
        for (std::size_t c = 0; c < positions.size() && all; ++c)
            all = t.rows()[r][positions[c]] == y[c];
        match[r] = all;
        if (all)
            out.linked.push_back(t.index()[r]);
    }
    out.empty_match = out.linked.empty();
    out.probabilities.assign(t.row_count(), Rational(0));
    if (!out.empty_match) {
        const Rational share(1, static_cast<long long>(out.linked.size()));
        for (std::size_t r = 0; r < t.row_count(); ++r)
            if (match[r])
                out.probabilities[r] = share;
    }
    return out;
}

std::string HornProbability::to_json() const
{
    nlohmann::json doc;
    doc["lr_coefficient"] = to_string(lr_coefficient);
    doc["box_strings"] = to_string(box_strings);
    doc["symmetry_order"] = symmetry_order;
    doc["denominator"] = to_string(denominator);
    doc["probability"] = to_pq(probability);
    return doc.dump();
}

HornProbability horn_probability(const Partition& gamma, const Partition& lambda, const Partition& mu, int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    HornProbability out;
    out.lr_coefficient = lr_coefficient(gamma, lambda, mu);
    out.box_strings = pow2(static_cast<unsigned>(n));
    // 3 * 2^(n+2) = 12 * 2^n: box strings times the symmetry order.
    out.denominator = out.box_strings * out.symmetry_order;
    out.probability = Rational(out.lr_coefficient, out.denominator);
    return out;
}

} // namespace combilang
