#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "toric/census.hpp"
#include "toric/enumerate.hpp"
#include "toric/error.hpp"
#include "toric/trace.hpp"

using namespace toric;

namespace {

std::string id_of(const std::string& code) { return identify(trace(decode(code)), bundled_table()).label(); }

}  // namespace

TEST_CASE("bundled table") {
    const auto& table = bundled_table();
    CHECK(table.size() == 250);
    CHECK(table.find("0_1")->homfly == LaurentPoly2(1));
    CHECK(table.find("3_1")->homfly != table.find("3_1")->homfly_mirror);
    CHECK(table.find("10_165") != nullptr);
    CHECK(table.find("10_166") == nullptr);
    int by_crossings[11] = {};
    for (const auto& r : table.records()) ++by_crossings[r.crossing_number];
    CHECK(by_crossings[0] == 1);
    CHECK(by_crossings[3] == 1);
    CHECK(by_crossings[8] == 21);
    CHECK(by_crossings[9] == 49);
    CHECK(by_crossings[10] == 165);
    for (const auto& r : table.records()) {
        CHECK(r.homfly_mirror == homfly(mirror(parse_pd(r.pd))));
        CHECK(r.alexander.coeff({0}) != 0);
    }
}

TEST_CASE("table cache round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "toric-cache-test";
    std::filesystem::create_directories(dir);
    const auto pd = dir / "pd.tsv";
    const auto cache = dir / "cache.tsv";
    std::filesystem::remove(cache);
    {
        std::ofstream out(pd);
        out << "0_1\tPD[]\n3_1\tPD[X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)]\n4_1\tPD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]\n";
    }
    const InvariantTable first = build_table(pd, cache);
    REQUIRE(std::filesystem::exists(cache));
    const InvariantTable second = build_table(pd, cache);
    CHECK(second.size() == 3);
    for (const auto& r : first.records()) {
        CHECK(second.find(r.name)->homfly == r.homfly);
        CHECK(second.find(r.name)->alexander == r.alexander);
    }
    // A stale cache is rebuilt.
    {
        std::ofstream out(pd, std::ios::app);
        out << "5_1\tPD[X(2,8,3,7),X(4,10,5,9),X(6,2,7,1),X(8,4,9,3),X(10,6,1,5)]\n";
    }
    CHECK(build_table(pd, cache).size() == 4);
    {
        std::ofstream out(pd, std::ios::app);
        out << "bad line without tab\n";
    }
    CHECK_THROWS_AS(build_table(pd, cache), ParseError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("identify") {
    CHECK(id_of("7") == "0_1");
    CHECK(id_of("7779") == "3_1");
    CHECK(id_of("888888899") == "8_19");
    CHECK(id_of("888899998") == "10_124");
    CHECK(id_of("9") == "link");
    const auto unknown = identify(trace(decode("77779aa79")), bundled_table());
    CHECK(unknown.status == IdStatus::unknown);
    // The two granny knots: the square of the trefoil polynomial.
    const auto p = bundled_table().find("3_1")->homfly;
    const auto q = bundled_table().find("3_1")->homfly_mirror;
    CHECK((unknown.homfly == to_string(p * p) || unknown.homfly == to_string(q * q)));
}

TEST_CASE("identification ignores chirality") {
    for (const auto& code : {"7779", "12789a439", "294942429", "88889989a", "888899899", "139913391"}) {
        const LinkDiagram d = trace(decode(code));
        CHECK(identify(d, bundled_table()).names == identify(mirror(d), bundled_table()).names);
    }
}

TEST_CASE("censuses for n = 1 and n = 2") {
    const auto one = run_census(1, bundled_table());
    CHECK(one.names == std::set<std::string>{"0_1"});
    const auto two = run_census(2, bundled_table(), {2});
    CHECK(two.names == std::set<std::string>{"0_1", "3_1"});
    CHECK(two.mosaics == 110);
    CHECK(census_csv(two) ==
          "code,n,components,identification,homfly\n"
          "0055,2,1,0_1,1*v^0*z^0\n"
          "7779,2,1,3_1," + to_string(bundled_table().find("3_1")->homfly) + "\n");
}

TEST_CASE("census n = 3") {
    const auto report = run_census(3, bundled_table(), {default_jobs()});
    CHECK(report.mosaics == 35237);
    CHECK(report.names == std::set<std::string>{"0_1", "3_1", "4_1", "5_1", "5_2", "7_1", "8_19", "10_124", "10_139"});
    // Witnesses replay to their own identification.
    for (const auto& [label, row] : report.witnesses) {
        CAPTURE(label);
        CHECK(identify(trace(decode(row.code)), bundled_table()).label() == row.id.label());
        CHECK(is_canonical(row.code, 3));
    }
    CHECK(report.witnesses.count("10_132|5_1") == 1);
    CHECK(report.witnesses.at("5_1").code == "139913391");
    CHECK(id_of("294942429") == "5_1");
    CHECK(report.ambiguous > 0);
    CHECK(report.unknown > 0);
    CHECK(report.budget_failures == 0);
    const auto same = run_census(3, bundled_table(), {1});
    CHECK(census_csv(same) == census_csv(report));
}

TEST_CASE("appendix verification") {
    const auto& table = bundled_table();
    CHECK(verify_row({"3_1", "2", "7779"}, table).verdict == Verdict::pass);
    CHECK(verify_row({"10_17", ">=4", "n/a"}, table).verdict == Verdict::skip);
    CHECK(verify_row({"3_1", "3", "7779"}, table).verdict == Verdict::fail);
    CHECK(verify_row({"4_1", "2", "7779"}, table).verdict == Verdict::fail);
    int passes = 0;
    for (const char* name : {"9_46", "9_47", "9_49"})
        passes += verify_row({name, "4", "02842891989a43a9"}, table).verdict == Verdict::pass;
    CHECK(passes <= 1);

    const auto rows = read_appendix(default_appendix_path());
    CHECK(rows.size() == 250);
    for (const auto& r : verify_appendix(rows, table, default_jobs())) {
        if (r.verdict != Verdict::pass) continue;
        CHECK(decode(r.row.code).size() == std::stoi(r.row.bound));
    }
}
