#include <doctest.h>

#include <random>

#include <json.hpp>

#include "combilang/distribution.hpp"
#include "combilang/tableaux.hpp"

using namespace combilang;

namespace {

DataTable records() { return DataTable::load_csv(COMBILANG_DATA_DIR "/records.csv"); }

Partition P(const char* s) { return Partition::parse(s); }

} // namespace

TEST_CASE("table partitions")
{
    CHECK(table_partition(DataTable({"c"}, {"1", "2"}, {{"x"}, {"x"}})).str() == "{1,2}");
    CHECK(table_partition(DataTable({"c"}, {"1", "2"}, {{"x"}, {"y"}})).block_count() == 2);
    CHECK(table_partition(DataTable({"c", "d"}, {"1", "2"}, {{"x", "y"}, {"y", "x"}})) ==
          SetPartition(4, {{1, 4}, {2, 3}}));
}

TEST_CASE("table construction")
{
    CHECK_THROWS(DataTable({"c"}, {"1", "1"}, {{"x"}, {"y"}}));
    CHECK_THROWS(DataTable({"c", "c"}, {"1"}, {{"x", "y"}}));
    CHECK_THROWS(DataTable({"c", "d"}, {"1"}, {{"x"}}));
    const auto t = DataTable::parse_csv("id,name\nr1,\"Smith, J\"\nr2,Jones\n");
    CHECK(t.rows()[0][0] == "Smith, J");
    CHECK(t.column("name") == 0);
    CHECK_THROWS(t.column("id"));
    const auto r = records();
    CHECK(r.row_count() == 4);
    CHECK(r.columns() == std::vector<std::string>{"age", "zip", "sex"});
}

TEST_CASE("uniform linkage")
{
    const auto t = records();
    const auto unique = uniform_reidentification({"41"}, t, {"age"});
    CHECK(unique.linked == std::vector<std::string>{"r4"});
    CHECK(unique.probabilities == std::vector<Rational>{0, 0, 0, 1});

    const auto two = uniform_reidentification({"30", "F"}, t, {"age", "sex"});
    CHECK(two.linked == std::vector<std::string>{"r1", "r3"});
    CHECK(two.probabilities == std::vector<Rational>{Rational(1, 2), 0, Rational(1, 2), 0});
    CHECK_FALSE(two.empty_match);

    const auto none = uniform_reidentification({"99"}, t, {"age"});
    CHECK(none.empty_match);
    CHECK(none.total() == 0);
    CHECK(none.linked.empty());

    CHECK_THROWS(uniform_reidentification({"30"}, t, {}));
    CHECK_THROWS(uniform_reidentification({"30"}, t, {"age", "zip"}));
    CHECK_THROWS(uniform_reidentification({"30"}, t, {"height"}));
    CHECK_THROWS(uniform_reidentification({"30", "30"}, t, {"age", "age"}));

    const auto j = nlohmann::json::parse(two.to_json());
    CHECK(j["linked"].size() == 2);
}

TEST_CASE("linkage values sum to one and are 0 or 1/|J|")
{
    std::mt19937_64 gen(4);
    const std::vector<std::string> cols{"a", "b", "c"};
    for (int t = 0; t < 200; ++t) {
        std::vector<std::string> index;
        std::vector<std::vector<std::string>> rows;
        const int m = 1 + static_cast<int>(gen() % 8);
        for (int i = 0; i < m; ++i) {
            index.push_back("r" + std::to_string(i));
            rows.push_back({std::to_string(gen() % 2), std::to_string(gen() % 3), std::to_string(gen() % 2)});
        }
        const DataTable table(cols, index, rows);
        const std::vector<std::string> pick = gen() % 2 ? std::vector<std::string>{"a", "b"} : std::vector<std::string>{"c"};
        std::vector<std::string> y;
        for (std::size_t i = 0; i < pick.size(); ++i)
            y.push_back(std::to_string(gen() % 2));
        const auto r = uniform_reidentification(y, table, pick);
        std::size_t matches = 0;
        for (int i = 0; i < m; ++i) {
            bool eq = true;
            for (std::size_t c = 0; c < pick.size(); ++c)
                eq = eq && rows[static_cast<std::size_t>(i)][table.column(pick[c])] == y[c];
            matches += eq ? 1 : 0;
        }
        CHECK(r.linked.size() == matches);
        CHECK(r.total() == (matches ? 1 : 0));
        for (const auto& p : r.probabilities)
            CHECK((p == 0 || p == Rational(1, static_cast<long long>(matches))));
    }
}

TEST_CASE("horn probability examples")
{
    const auto a = horn_probability(P("2,1"), P("2,1"), P(""), 2);
    CHECK(a.probability == Rational(1, 48));
    CHECK(a.denominator == 48);
    const auto b = horn_probability(P("3,2,1"), P("2,1"), P("2,1"), 3);
    CHECK(b.lr_coefficient == 2);
    CHECK(b.denominator == 96);
    CHECK(b.box_strings == 8);
    CHECK(b.symmetry_order == 12);
    CHECK(b.probability == Rational(1, 48));
    CHECK(horn_probability(P("3"), P("1"), P("1"), 2).probability == 0);
    CHECK_THROWS(horn_probability(P("1"), P("1"), P(""), 0));
    const auto j = nlohmann::json::parse(b.to_json());
    CHECK(j["probability"] == "1/48");
}

TEST_CASE("horn probability is symmetric and positive exactly when the coefficient is")
{
    for (int w = 0; w <= 6; ++w)
        for (const auto& gamma : partitions_of(w))
            for (int lw = 0; lw <= w; ++lw)
                for (const auto& lambda : partitions_of(lw))
                    for (const auto& mu : partitions_of(w - lw))
                        for (int n : {1, 4}) {
                            const auto p = horn_probability(gamma, lambda, mu, n).probability;
                            CHECK(p >= 0);
                            CHECK((p > 0) == (lr_coefficient(gamma, lambda, mu) > 0));
                            CHECK(p == horn_probability(gamma, mu, lambda, n).probability);
                            CHECK(p * 3 * pow2(static_cast<unsigned>(n + 2)) == lr_coefficient(gamma, lambda, mu));
                        }
}
