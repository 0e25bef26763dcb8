#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracle.hpp"
#include "toric/enumerate.hpp"
#include "toric/error.hpp"
#include "toric/mosaic.hpp"

using namespace toric;

namespace {

std::vector<std::string> naive_filter(int n) {
    unsigned long long total = 1;
    for (int i = 0; i < n * n; ++i) total *= 11;
    std::vector<std::string> out;
    for (unsigned long long i = 0; i < total; ++i) {
        auto code = oracle::code_of(i, n * n);
        if (oracle::suitably_connected(code, n)) out.push_back(code);
    }
    return out;
}

// Counts by composing admissible rows: row states are (top bits, bottom bits).
unsigned long long transfer_count(int n) {
    std::vector<std::pair<unsigned, unsigned>> rows;
    std::vector<int> t(std::size_t(n), 0);
    while (true) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            ok = oracle::bits[std::size_t(t[std::size_t(j)])][2] == oracle::bits[std::size_t(t[std::size_t((j + 1) % n)])][0];
        if (ok) {
            unsigned top = 0, bottom = 0;
            for (int j = 0; j < n; ++j) {
                top |= unsigned(oracle::bits[std::size_t(t[std::size_t(j)])][1]) << j;
                bottom |= unsigned(oracle::bits[std::size_t(t[std::size_t(j)])][3]) << j;
            }
            rows.emplace_back(top, bottom);
        }
        int k = 0;
        while (k < n && ++t[std::size_t(k)] == 11) t[std::size_t(k++)] = 0;
        if (k == n) break;
    }
    std::map<std::pair<unsigned, unsigned>, unsigned long long> state;
    for (auto [top, bottom] : rows) ++state[{top, bottom}];
    for (int r = 1; r < n; ++r) {
        std::map<std::pair<unsigned, unsigned>, unsigned long long> next;
        for (auto [key, c] : state)
            for (auto [top, bottom] : rows)
                if (top == key.second) next[{key.first, bottom}] += c;
        state = std::move(next);
    }
    unsigned long long total = 0;
    for (auto [key, c] : state)
        if (key.first == key.second) total += c;
    return total;
}

}  // namespace

TEST_CASE("n = 1") {
    CHECK(enumerate_codes({1}) == std::vector<std::string>{"0", "5", "6", "7", "8", "9", "a"});
    CHECK(count({1}) == 7);
    int direct = 0;
    for (int k = 0; k < 11; ++k) direct += oracle::suitably_connected(oracle::code_of(unsigned(k), 1), 1);
    CHECK(count({1}) == std::uint64_t(direct));
}

TEST_CASE("n = 2 equals the naive filter over all 11^4 grids") {
    const auto codes = enumerate_codes({2});
    CHECK(codes == naive_filter(2));
    CHECK(count({2}) == codes.size());
    CHECK(std::find(codes.begin(), codes.end(), "7779") != codes.end());
}

TEST_CASE("counts agree with a row transfer count") {
    for (int n = 1; n <= 3; ++n) CHECK(count({n}) == transfer_count(n));
    CHECK(count({3}) == 316249);
}

TEST_CASE("emitted codes are suitably connected and sorted") {
    std::string last;
    std::uint64_t k = 0;
    enumerate({3}, [&](std::string_view code) {
        if (k++ % 97 == 0) REQUIRE(oracle::suitably_connected(code, 3));
        REQUIRE(last < code);
        last = code;
    });
    CHECK(k == 316249);
}

TEST_CASE("symmetry reduction emits one canonical code per orbit") {
    for (int n = 1; n <= 3; ++n) {
        std::set<std::string> expanded;
        const auto reps = enumerate_codes({n, true});
        for (const auto& code : reps) {
            const Mosaic m = decode(code);
            REQUIRE(canonical_code(m) == code);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) expanded.insert(encode(translate(m, a, b)));
        }
        const auto all = enumerate_codes({n});
        CHECK(expanded == std::set<std::string>(all.begin(), all.end()));
    }
    const auto two = enumerate_codes({2, true});
    CHECK(std::find(two.begin(), two.end(), "7779") != two.end());
    CHECK(std::find(two.begin(), two.end(), "9777") == two.end());
    CHECK(two.size() == 110);
}

TEST_CASE("prefixes partition the search") {
    for (int n = 2; n <= 3; ++n) {
        std::vector<std::string> merged;
        for (char c : std::string("0123456789a")) {
            const auto part = enumerate_codes({n, false, std::string(1, c)});
            for (const auto& code : part) REQUIRE(code[0] == c);
            merged.insert(merged.end(), part.begin(), part.end());
        }
        CHECK(merged == enumerate_codes({n}));
    }
    std::uint64_t total = 0;
    for (const auto& prefix : partition_prefixes({3, true}, 2)) total += count({3, true, prefix});
    CHECK(total == count({3, true}));
}

TEST_CASE("results do not depend on the worker count") {
    const auto one = enumerate_codes({3, true}, 1);
    CHECK(enumerate_codes({3, true}, 4) == one);
    CHECK(count({3}, 3) == 316249);
}

TEST_CASE("invalid options") {
    CHECK_THROWS_AS(count({0}), DomainError);
    CHECK_THROWS_AS(count({2, false, "777"}), DomainError);
    CHECK_THROWS_AS(count({2, false, "z"}), ParseError);
}
