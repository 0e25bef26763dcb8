#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "toric/census.hpp"
#include "toric/error.hpp"
#include "toric/invariants.hpp"
#include "toric/trace.hpp"

using namespace toric;

namespace {

LaurentPoly1 t(int e, std::int64_t c = 1) { return LaurentPoly1::monomial(c, {e}); }
LaurentPoly2 vz(int a, int b, std::int64_t c = 1) { return LaurentPoly2::monomial(c, {a, b}); }

LaurentPoly1 random_poly(std::mt19937& rng) {
    LaurentPoly1 p;
    const int terms = int(rng() % 5);
    for (int i = 0; i < terms; ++i) p += t(int(rng() % 9) - 4, std::int64_t(rng() % 11) - 5);
    return p;
}

LinkDiagram random_braid(std::mt19937& rng, int max_crossings) {
    const int strands = 2 + int(rng() % 3);
    const int length = 1 + int(rng() % unsigned(max_crossings));
    std::vector<int> word;
    for (int i = 0; i < length; ++i) {
        const int g = 1 + int(rng() % unsigned(strands - 1));
        word.push_back(rng() % 2 ? g : -g);
    }
    return braid_closure(strands, word);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    CHECK((t(1) + t(0)) * (t(1) - t(0)) == t(2) - t(0));
    const LaurentPoly1 p = t(3, 2) + t(-1, -7);
    CHECK((p + -p).is_zero());
    CHECK(to_string(LaurentPoly1{}) == "0");
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(parse_laurent<1>(to_string(a)) == a);
    }
    CHECK(to_string(vz(2, 0, 2) + vz(2, 2) - vz(4, 0)) == "2*v^2*z^0 + 1*v^2*z^2 + -1*v^4*z^0");
    CHECK_THROWS_AS(parse_laurent<2>("2*v^2"), ParseError);
}

TEST_CASE("homfly normalisation and trefoil") {
    CHECK(homfly(LinkDiagram({}, 1)) == LaurentPoly2(1));
    CHECK(homfly(LinkDiagram({}, 3)) == homfly_unlink_factor().pow(2));
    // Hand expansion of the positive trefoil.
    CHECK(homfly(torus_knot_diagram(2, 3)) == vz(2, 0, 2) + vz(2, 2) - vz(4, 0));
    CHECK(homfly(trace(decode("7779"))) == homfly(torus_knot_diagram(2, 3)));
}

TEST_CASE("skein relation holds at the first crossing of random braid closures") {
    std::mt19937 rng(2024);
    const LaurentPoly2 vinv = vz(-1, 0), v = vz(1, 0), z = vz(0, 1);
    for (int i = 0; i < 100; ++i) {
        const LinkDiagram d = random_braid(rng, 6);
        const LinkDiagram other = switch_crossing(d, 0);
        const bool positive = d.crossings()[0].sign > 0;
        const LinkDiagram& plus = positive ? d : other;
        const LinkDiagram& minus = positive ? other : d;
        const LaurentPoly2 residual = vinv * homfly(plus) - v * homfly(minus) - z * homfly(smooth_crossing(d, 0));
        REQUIRE(residual.is_zero());
    }
}

TEST_CASE("homfly budget") {
    CHECK_THROWS_AS(homfly(torus_knot_diagram(3, 7), 3), BudgetExceeded);
}

TEST_CASE("alexander") {
    CHECK(alexander(LinkDiagram({}, 1)) == LaurentPoly1(1));
    CHECK(alexander_torus(2, 3) == t(1) - t(0) + t(-1));
    CHECK(alexander_torus(2, 5) == t(2) - t(1) + t(0) - t(-1) + t(-2));
    CHECK(alexander(torus_knot_diagram(3, 4)) == alexander_torus(3, 4));
    CHECK(alexander(trace(decode("9777"))) == t(1) - t(0) + t(-1));
    for (int q = 3; q <= 11; ++q)
        for (int p = 2; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const auto a = alexander_torus(p, q);
            CHECK(a.terms().rbegin()->first[0] - a.terms().begin()->first[0] == (p - 1) * (q - 1));
            CHECK(alexander(torus_knot_diagram(p, q)) == a);
        }
    CHECK_THROWS_AS(alexander(trace(decode("9"))), DomainError);
    CHECK_THROWS_AS(alexander_torus(4, 6), DomainError);
}

TEST_CASE("alexander cannot see chirality") {
    std::mt19937 rng(99);
    int knots = 0;
    for (int i = 0; i < 300 && knots < 50; ++i) {
        const LinkDiagram d = random_braid(rng, 8);
        if (component_count(d) != 1) continue;
        ++knots;
        REQUIRE(alexander(mirror(d)) == alexander(d));
    }
    CHECK(knots == 50);
}

TEST_CASE("linking number") {
    CHECK(std::abs(linking_number(trace(decode("9")))) == 1);
    CHECK(linking_number(trace(decode("a"))) == 0);
    CHECK_THROWS_AS(linking_number(trace(decode("7"))), DomainError);
}

TEST_CASE("table invariants agree with the reference values") {
    const auto& table = bundled_table();
    std::ifstream in(data_dir() / "knotinfo_reference.tsv");
    REQUIRE(in);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string name, crossings, h, a;
        std::getline(fields, name, '\t');
        std::getline(fields, crossings, '\t');
        std::getline(fields, h, '\t');
        std::getline(fields, a, '\t');
        const KnotRecord* rec = table.find(name);
        REQUIRE(rec);
        CAPTURE(name);
        const auto ref = parse_laurent<2>(h);
        CHECK((rec->homfly == ref || rec->homfly_mirror == ref));
        CHECK(rec->alexander == parse_laurent<1>(a));
        CHECK(rec->crossing_number == std::stoi(crossings));
        ++rows;
    }
    CHECK(rows == 250);
}
