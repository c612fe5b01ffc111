#include "doctest.h"

#include "monoword/cli/commands.hpp"
#include "monoword/cli/crosscheck.hpp"
#include "monoword/cli/grid.hpp"
#include "monoword/cli/records.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

using namespace monoword;
using namespace monoword::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        if (!line.empty() && line.back() == ',')
            cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("grid parsing")
{
    CHECK(parse_real_grid("1,2.5,4") == std::vector<double>{1, 2.5, 4});
    CHECK(parse_real_grid("0:1:0.25") == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
    CHECK(parse_real_grid("3") == std::vector<double>{3});
    CHECK_THROWS_AS(parse_real_grid("2,1"), UsageError);
    CHECK_THROWS_AS(parse_real_grid("1,1"), UsageError);
    CHECK_THROWS_AS(parse_real_grid("a"), UsageError);
    CHECK_THROWS_AS(parse_real_grid("0:1:0"), UsageError);
    CHECK(parse_int_grid("50,100,200") == std::vector<int>{50, 100, 200});
    CHECK(parse_int_grid("0:8:2") == std::vector<int>{0, 2, 4, 6, 8});
    CHECK_THROWS_AS(parse_int_grid("1.5"), UsageError);
}

TEST_CASE("records")
{
    CHECK(format_double(0.1) == "0.10000000000000001");
    std::vector<Record> recs;
    recs.push_back({"b", "I", 2, 3, 1.0, 0.5, 0.0});
    recs.push_back({"a", "D", 1, 3, 1.0, Rational(1, 3), 0.0});
    recs.push_back({"a", "D", 1, 2, 1.0, Rational(2, 3), 0.0});
    sort_records(recs);
    CHECK(recs[0].k == 2);
    CHECK(recs[2].route == "b");
    CHECK(recs[0].exact());
    CHECK(!recs[2].exact());

    std::ostringstream csv;
    write_csv(csv, recs);
    const auto rows = csv_rows(csv.str());
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"route", "which", "n", "k", "N_or_t_or_s", "value", "err_bar", "exact_flag"});
    CHECK(rows[1][5] == "2/3");
    CHECK(csv.str().find('\r') == std::string::npos);

    std::ostringstream js;
    write_json(js, recs);
    const auto doc = nlohmann::json::parse(js.str());
    CHECK(doc[0]["value"] == "2/3");
    CHECK(doc[2]["value"].get<double>() == 0.5);
    CHECK(doc[2]["exact_flag"] == false);
}

TEST_CASE("dist command examples")
{
    auto r = invoke({"dist", "--which", "I", "--k", "2", "--N", "2", "--route", "enum"});
    REQUIRE(r.code == kExitOk);
    auto rows = csv_rows(r.out);
    bool found = false;
    for (const auto& row : rows)
        if (row[2] == "1") {
            CHECK(row[5] == "1/4");
            CHECK(row[0] == "enum");
            CHECK(row[7] == "1");
            found = true;
        }
    CHECK(found);

    r = invoke({"dist", "--which", "I", "--k", "1", "--n-max", "1", "--N", "5", "--route", "series"});
    REQUIRE(r.code == kExitOk);
    rows = csv_rows(r.out);
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i][2] == "1")
            CHECK(rows[i][5] == "0/1");

    r = invoke({"dist", "--which", "I", "--k", "3", "--N", "0"});
    REQUIRE(r.code == kExitOk);
    rows = csv_rows(r.out);
    REQUIRE(rows.size() >= 2);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i][5] == "1/1");

    // Every route gives the same exact table.
    const auto a = invoke({"dist", "--which", "D", "--k", "3", "--N", "6", "--route", "enum"});
    const auto b = invoke({"dist", "--which", "D", "--k", "3", "--N", "6", "--route", "tableaux"});
    const auto c = invoke({"dist", "--which", "D", "--k", "3", "--N", "6", "--route", "series"});
    const auto strip = [](const std::string& s) {
        auto rows2 = csv_rows(s);
        std::vector<std::string> v;
        for (std::size_t i = 1; i < rows2.size(); ++i)
            v.push_back(rows2[i][2] + ":" + rows2[i][5]);
        return v;
    };
    CHECK(strip(a.out) == strip(b.out));
    CHECK(strip(a.out) == strip(c.out));
}

TEST_CASE("usage errors and refusals")
{
    CHECK(invoke({"dist", "--which", "I", "--k", "12", "--N", "12", "--route", "enum"}).code == kExitUsage);
    CHECK(!invoke({"dist", "--which", "I", "--k", "12", "--N", "12", "--route", "enum"}).err.empty());
    CHECK(invoke({"dist", "--which", "X", "--k", "2", "--N", "2"}).code == kExitUsage);
    CHECK(invoke({"limits", "f2", "--s", "2,1"}).code == kExitUsage);
    CHECK(invoke({"nonsense"}).code == kExitUsage);
    CHECK(invoke({"laguerre", "--k", "4", "--n", "1", "--t", "1", "--route", "quadrature"}).code == kExitUsage);
    CHECK(invoke({"limits", "f0", "--k", "5", "--s", "1"}).code == kExitUsage);
}

TEST_CASE("limits command examples")
{
    auto r = invoke({"limits", "f0", "--k", "2", "--s", "0"});
    REQUIRE(r.code == kExitOk);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(std::abs(std::stod(rows[1][5])) < 1e-12);

    r = invoke({"limits", "f2", "--s", "6"});
    REQUIRE(r.code == kExitOk);
    rows = csv_rows(r.out);
    bool saw = false;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i][0] == "f2") {
            CHECK(std::stod(rows[i][5]) > 1 - 1e-6);
            saw = true;
        }
    CHECK(saw);

    r = invoke({"limits", "thm4", "--k", "2", "--N", "50,100,200"});
    REQUIRE(r.code == kExitOk);
    rows = csv_rows(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(std::stod(rows[2][5]) < std::stod(rows[1][5]));
    CHECK(std::stod(rows[3][5]) < std::stod(rows[2][5]));

    r = invoke({"limits", "f0", "--k", "3", "--s", "1.5", "--method", "montecarlo", "--samples", "20000"});
    REQUIRE(r.code == kExitOk);
    rows = csv_rows(r.out);
    CHECK(std::stod(rows[1][6]) > 0.0);
}

TEST_CASE("painleve and laguerre commands")
{
    auto r = invoke({"painleve", "--n", "2", "--k", "3", "--t", "0.5,1,2", "--compare"});
    REQUIRE(r.code == kExitOk);
    std::map<std::pair<std::string, std::string>, double> v;
    for (const auto& row : csv_rows(r.out))
        if (row[0] != "route")
            v[{row[0], row[4]}] = std::stod(row[5]);
    for (const char* t : {"0.5", "1", "2"})
        CHECK(std::abs(v.at({"painleve", t}) - v.at({"toeplitz", t})) < 1e-6);

    r = invoke({"laguerre", "--k", "1", "--n", "0", "--t", "1"});
    REQUIRE(r.code == kExitOk);
    CHECK(std::abs(std::stod(csv_rows(r.out)[1][5]) - std::exp(-1.0)) < 1e-10);
}

TEST_CASE("crosscheck")
{
    CrosscheckConfig cfg;
    cfg.points = 10;
    const auto rep = run_crosscheck(cfg);
    CHECK(rep.pass);
    CHECK(report_json(rep) == report_json(run_crosscheck(cfg)));

    cfg.inject_fault = "determinant";
    const auto bad = run_crosscheck(cfg);
    CHECK(!bad.pass);
    bool named = false;
    for (const auto& c : bad.checks)
        if (!c.pass && c.name.find("theorem") != std::string::npos)
            named = true;
    CHECK(named);

    cfg.inject_fault = "series";
    const auto bad2 = run_crosscheck(cfg);
    CHECK(!bad2.pass);
    CHECK(!bad2.checks.front().pass);

    auto r = invoke({"crosscheck", "--points", "5", "--tol-identity", "3e-7"});
    REQUIRE(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["tolerances"]["identity"].get<double>() == 3e-7);
    for (const auto& c : doc["checks"])
        if (c["name"].get<std::string>().rfind("identity/", 0) == 0 && c["tolerance"].get<double>() < 1e-5)
            CHECK(c["tolerance"].get<double>() == 3e-7);

    r = invoke({"crosscheck", "--points", "5", "--inject-fault", "determinant"});
    CHECK(r.code == kExitValidation);
    CHECK(nlohmann::json::parse(r.out)["checks"].size() > 0);
    CHECK(invoke({"crosscheck", "--inject-fault", "bogus"}).code == kExitUsage);
}

TEST_CASE("CSV and JSON agree cell by cell")
{
    const auto csv = invoke({"limits", "f2", "--s", "-2,0,2"});
    const auto js = invoke({"limits", "f2", "--s", "-2,0,2", "--format", "json"});
    REQUIRE(csv.code == 0);
    REQUIRE(js.code == 0);
    const auto rows = csv_rows(csv.out);
    const auto doc = nlohmann::json::parse(js.out);
    REQUIRE(doc.size() + 1 == rows.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        CHECK(doc[i]["route"] == rows[i + 1][0]);
        CHECK(doc[i]["value"].get<double>() == std::stod(rows[i + 1][5]));
        CHECK(doc[i]["N_or_t_or_s"].get<double>() == std::stod(rows[i + 1][4]));
    }
}

TEST_CASE("identical invocations give identical bytes")
{
    const std::vector<std::string> args{"limits", "f0", "--k", "3", "--s", "1,2", "--method", "montecarlo",
                                        "--samples", "10000", "--seed", "9"};
    CHECK(invoke(args).out == invoke(args).out);
}
