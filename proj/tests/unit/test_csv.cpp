#include <doctest.h>

#include <filesystem>

#include "rbcom/csv.hpp"
#include "rbcom/errors.hpp"

using namespace rbcom;

TEST_CASE("document rendering keeps full precision")
{
    const std::string text =
        csv_document({"a", "b"}, {{1.0, 0.1}, {2.5e-19, 12345.678901234567}});
    const auto parsed_rows = [&] {
        std::vector<std::vector<double>> rows;
        parse_csv(text, rows);
        return rows;
    }();
    REQUIRE(parsed_rows.size() == 2);
    CHECK(parsed_rows[0][0] == 1.0);
    CHECK(parsed_rows[0][1] == 0.1);  // bit-exact round trip
    CHECK(parsed_rows[1][0] == 2.5e-19);
    CHECK(parsed_rows[1][1] == 12345.678901234567);
}

TEST_CASE("header round-trips and row widths are enforced")
{
    const std::string text = csv_document({"x", "y", "z"}, {{1, 2, 3}});
    std::vector<std::vector<double>> rows;
    const auto header = parse_csv(text, rows);
    REQUIRE(header.size() == 3);
    CHECK(header[1] == "y");

    CHECK_THROWS_AS(csv_document({"x"}, {{1, 2}}), DomainError);
    CHECK_THROWS_AS(csv_document({}, {}), DomainError);
    CHECK_THROWS_AS(parse_csv("x,y\n1\n", rows), ConfigError);
    CHECK_THROWS_AS(parse_csv("x,y\n1,apple\n", rows), ConfigError);
}

TEST_CASE("writer creates parent directories")
{
    const std::string dir = "/tmp/rbcom_csv_test/nested";
    const std::string path = dir + "/out.csv";
    std::filesystem::remove_all("/tmp/rbcom_csv_test");
    write_csv(path, {"a"}, {{42.0}});
    CHECK(std::filesystem::exists(path));
    std::filesystem::remove_all("/tmp/rbcom_csv_test");
}

TEST_CASE("identical inputs give identical bytes")
{
    std::vector<std::vector<double>> rows{{1.0 / 3.0, 2.0 / 7.0}, {1e-300, 1e300}};
    CHECK(csv_document({"p", "q"}, rows) == csv_document({"p", "q"}, rows));
}
