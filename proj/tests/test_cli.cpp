#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stack>

#include "toric/braid.hpp"
#include "toric/census.hpp"
#include "toric/cli.hpp"
#include "toric/enumerate.hpp"
#include "toric/render.hpp"
#include "toric/trace.hpp"

using namespace toric;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "toric");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// Tags balance and every attribute value is quoted; enough for generated SVG.
bool well_formed(const std::string& doc) {
    std::stack<std::string> open;
    std::size_t pos = 0;
    bool root_seen = false;
    while ((pos = doc.find('<', pos)) != std::string::npos) {
        const std::size_t end = doc.find('>', pos);
        if (end == std::string::npos) return false;
        std::string tag = doc.substr(pos + 1, end - pos - 1);
        pos = end + 1;
        if (tag.empty()) return false;
        if (std::count(tag.begin(), tag.end(), '"') % 2) return false;
        if (tag[0] == '/') {
            if (open.empty() || open.top() != tag.substr(1)) return false;
            open.pop();
            continue;
        }
        const bool self_closing = tag.back() == '/';
        const std::string name = tag.substr(0, tag.find_first_of(" /"));
        if (open.empty() && root_seen) return false;
        root_seen = true;
        if (!self_closing) open.push(name);
    }
    return root_seen && open.empty();
}

std::size_t count_of(const std::string& s, const std::string& needle) {
    std::size_t k = 0;
    for (std::size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++k;
    return k;
}

std::string grid_part(const std::string& svg) {
    const auto begin = svg.find("<g id=\"grid\">");
    return svg.substr(begin, svg.find("</g>", begin) - begin);
}

}  // namespace

TEST_CASE("codec commands") {
    CHECK(run({"encode", "1", "2", "7", "8", "9", "10", "4", "3", "9"}).out == "12789a439\n");
    CHECK(run({"decode", "12789a439"}).out == "1 2 7\n8 9 10\n4 3 9\n");
    CHECK(run({"encode", "1", "2", "3"}).code == 2);
    CHECK(run({"encode", "11"}).code == 2);
}

TEST_CASE("validate") {
    CHECK(run({"validate", "7779"}).code == 0);
    CHECK(run({"validate", "1"}).code == 1);
    CHECK(run({"validate", "9", "--classical"}).code == 1);
    const auto bad = run({"validate", "zz"});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("trace and identify") {
    CHECK(run({"identify", "7779"}).out == "3_1\n");
    CHECK(run({"identify", "12789a439"}).out == "4_1\n");
    CHECK(run({"identify", "9"}).out == "link 2\n");
    CHECK(run({"identify", "1"}).code == 1);
    CHECK(run({"trace", "7779"}).out == pd_code(trace(decode("7779"))) + "\n");
    CHECK(run({"trace", "a", "--simplify"}).out == "unlink 2\n");
}

TEST_CASE("solve-hv and generators") {
    CHECK(run({"solve-hv", "--p", "3", "--q", "7"}).out == "h=2 v=0 n=5\n");
    CHECK(run({"solve-hv", "--p", "4", "--q", "9"}).out == "h=1 v=0 n=8\n");
    CHECK(run({"solve-hv", "--p", "3", "--q", "4"}).code == 1);
    CHECK(run({"solve-hv", "--p", "2", "--q", "4"}).code == 1);
    CHECK(run({"solve-hv", "--p", "3"}).code == 2);
    CHECK(run({"gen", "one-braid", "--p", "2", "--q", "3"}).out == "9777\n");
    CHECK(run({"gen", "one-braid", "--p", "4", "--q", "21", "--h", "6", "--v", "2"}).out ==
          encode(one_braid({4, 21, 6, 2})) + "\n");
    CHECK(run({"gen", "full-braid", "--n", "3"}).out == encode(full_braid(3).mosaic) + "\n");
    CHECK(run({"gen", "full-braid", "--n", "4", "--q", "19"}).out ==
          encode(remove_crossings(full_braid(4).mosaic, 23, 19)) + "\n");
    CHECK(run({"gen", "full-braid", "--n", "2"}).code == 1);
    CHECK(run({"gen", "naive", "--p", "3", "--q", "4"}).out == "7777777777776666\n");
}

TEST_CASE("enumerate and count") {
    std::string expected;
    for (const auto& c : enumerate_codes({2, true})) expected += c + "\n";
    CHECK(run({"enumerate", "--n", "2", "--symmetry"}).out == expected);
    CHECK(run({"enumerate", "--n", "2", "--symmetry", "--jobs", "3"}).out == expected);
    CHECK(run({"count", "--n", "3"}).out == "316249\n");
    CHECK(run({"count", "--n", "2", "--prefix", "7"}).out == std::to_string(count({2, false, "7"})) + "\n");
    CHECK(run({"count", "--n", "0"}).code == 2);
    const auto file = std::filesystem::temp_directory_path() / "toric-enum-test.txt";
    CHECK(run({"enumerate", "--n", "1", "--out", file.string()}).code == 0);
    std::ifstream in(file);
    std::stringstream body;
    body << in.rdbuf();
    CHECK(body.str() == "0\n5\n6\n7\n8\n9\na\n");
    std::filesystem::remove(file);
}

TEST_CASE("census command") {
    const auto r = run({"census", "--n", "2", "--jobs", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == census_csv(run_census(2, bundled_table())));
    CHECK(count_of(r.out, "\n") == 3);
    CHECK(count_of(r.out, ",0_1,") == 1);
    CHECK(count_of(r.out, ",3_1,") == 1);
}

TEST_CASE("render") {
    const auto seven = run({"render", "7"});
    CHECK(seven.out == render(decode("7")));
    CHECK(count_of(seven.out, "\n") == 3);
    CHECK(seven.out.size() == 12);

    const std::string svg = render(decode("7779"), {RenderFormat::svg});
    CHECK(well_formed(svg));
    CHECK(count_of(svg, "class=\"gap\"") == 1);
    const std::string hidden = render(decode("7779"), {RenderFormat::svg, 30, true, true});
    CHECK(well_formed(hidden));
    CHECK(count_of(hidden, "class=\"hidden-gap\"") == 4);

    const std::string braid = render(full_braid(3).mosaic, {RenderFormat::svg});
    CHECK(well_formed(braid));
    CHECK(count_of(grid_part(braid), "class=\"gap\"") == 11);
    CHECK(run({"render", "7779", "--format", "svg"}).out == svg);
    CHECK(run({"render", "7779", "--format", "pdf"}).code == 2);
    CHECK(run({"render", "7779", "--cell-size", "0"}).code == 2);
}

TEST_CASE("verify-appendix and table build") {
    const auto r = run({"verify-appendix", "--jobs", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3_1\t2\t7779\tPASS") != std::string::npos);
    CHECK(count_of(r.out, "\n") == 250);
    const auto cache = std::filesystem::temp_directory_path() / "toric-cli-cache.tsv";
    const auto built = run({"table", "build", "--cache", cache.string()});
    CHECK(built.code == 0);
    CHECK(built.out.rfind("250 records", 0) == 0);
    std::filesystem::remove(cache);
}
