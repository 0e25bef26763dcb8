#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "toric/enumerate.hpp"
#include "toric/error.hpp"
#include "toric/invariants.hpp"
#include "toric/trace.hpp"

using namespace toric;

namespace {

std::vector<std::string> sample_codes(int n, std::size_t stride) {
    std::vector<std::string> out;
    std::size_t k = 0;
    enumerate({n, true}, [&](std::string_view code) {
        if (k++ % stride == 0) out.emplace_back(code);
    });
    return out;
}

}  // namespace

TEST_CASE("single tiles") {
    const LinkDiagram seven = trace(decode("7"));
    CHECK(component_count(seven) == 1);
    CHECK(homfly(seven) == LaurentPoly2(1));

    const LinkDiagram hopf = trace(decode("9"));
    CHECK(component_count(hopf) == 2);
    CHECK(hopf.crossing_count() == 2);
    CHECK(std::abs(linking_number(hopf)) == 1);
    CHECK(simplify(hopf).crossing_count() == 2);

    const LinkDiagram split = trace(decode("a"));
    CHECK(component_count(split) == 2);
    CHECK(split.crossing_count() == 2);
    CHECK(linking_number(split) == 0);
    const LinkDiagram s = simplify(split);
    CHECK(s.crossing_count() == 0);
    CHECK(component_count(s) == 2);
}

TEST_CASE("trefoil 2-mosaic") {
    const LinkDiagram d = trace(decode("7779"));
    CHECK(component_count(d) == 1);
    CHECK(d.crossing_count() == 5);
    const auto h = homfly(d);
    const auto t = homfly(torus_knot_diagram(2, 3));
    CHECK(h == t);
}

TEST_CASE("component counts") {
    CHECK(component_count(trace(decode("0000"))) == 0);
    CHECK(component_count(trace(decode("5555"))) == 2);
    CHECK(component_count(trace(decode("6"))) == 1);
    CHECK_THROWS_AS(trace(decode("1")), DomainError);
}

TEST_CASE("crossing count is visible tiles plus A*B hidden crossings") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& code : sample_codes(n, n == 3 ? 37 : 1)) {
            const Mosaic m = decode(code);
            const LinkDiagram d = trace(m);
            REQUIRE(d.crossing_count() == m.crossing_tiles() + hidden_crossing_count(m));
            const auto c = boundary_counts(m);
            int hidden_pairs = 0;
            for (int i = 0; i < n; ++i) hidden_pairs += m.at(i, 0).profile().left;
            REQUIRE(c.a == hidden_pairs);
        }
}

TEST_CASE("trace is invariant under torus translation") {
    std::mt19937 rng(3);
    int knots = 0;
    for (const auto& code : sample_codes(3, 211)) {
        const Mosaic m = decode(code);
        const LinkDiagram d = trace(m);
        if (component_count(d) == 0) continue;
        const int dr = int(rng() % 3), dc = int(rng() % 3);
        const LinkDiagram e = trace(translate(m, dr, dc));
        REQUIRE(component_count(d) == component_count(e));
        // Link polynomials depend on the orientation picked per component.
        if (component_count(d) == 1) {
            ++knots;
            REQUIRE(homfly(d) == homfly(e));
            REQUIRE(alexander(d) == alexander(e));
        }
    }
    CHECK(knots > 20);
}

TEST_CASE("simplify") {
    // One positive kink on a single strand.
    const LinkDiagram kink = parse_pd("PD[X(1,1,2,2)]");
    CHECK(simplify(kink).crossing_count() == 0);
    CHECK(component_count(simplify(kink)) == 1);
    for (const auto& code : sample_codes(3, 101)) {
        const LinkDiagram d = trace(decode(code));
        const LinkDiagram s = simplify(d);
        REQUIRE(s.crossing_count() <= d.crossing_count());
        REQUIRE(component_count(s) == component_count(d));
    }
}

TEST_CASE("simplify preserves homfly on traced 3-mosaics") {
    int checked = 0;
    for (const auto& code : sample_codes(3, 211)) {
        if (checked == 100) break;
        const LinkDiagram d = trace(decode(code));
        if (component_count(d) == 0) continue;
        REQUIRE(homfly(simplify(d)) == homfly(d));
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("mirror") {
    for (const auto& code : {"9", "7779", "12789a439", "888899998"}) {
        const LinkDiagram d = trace(decode(code));
        CHECK(mirror(mirror(d)) == d);
        CHECK(component_count(mirror(d)) == component_count(d));
    }
    const LinkDiagram hopf = trace(decode("9"));
    CHECK(linking_number(mirror(hopf)) == -linking_number(hopf));
    const LinkDiagram t = torus_knot_diagram(2, 3);
    CHECK(homfly(mirror(t)) != homfly(t));
}

TEST_CASE("torus knot diagrams") {
    const LinkDiagram t23 = torus_knot_diagram(2, 3);
    CHECK(t23.crossing_count() == 3);
    CHECK(component_count(t23) == 1);
    CHECK(torus_knot_diagram(3, 4).crossing_count() == 8);
    for (int q = 3; q <= 9; ++q)
        for (int p = 2; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const LinkDiagram d = torus_knot_diagram(p, q);
            CHECK(d.crossing_count() == q * (p - 1));
            CHECK(component_count(d) == 1);
            for (const auto& c : d.crossings()) CHECK(c.sign == 1);
        }
    CHECK_THROWS_AS(torus_knot_diagram(2, 4), DomainError);
}

TEST_CASE("PD codes") {
    const std::string trefoil = pd_code(torus_knot_diagram(2, 3));
    CHECK(trefoil.rfind("PD[", 0) == 0);
    CHECK(std::count(trefoil.begin(), trefoil.end(), 'X') == 3);
    const std::string seven = pd_code(trace(decode("7779")));
    CHECK(std::count(seven.begin(), seven.end(), 'X') == 5);
    CHECK(pd_code(trace(decode("7"))) == "PD[X(1,1,2,2)]");
    CHECK(pd_code(simplify(trace(decode("7")))) == "unknot");
    CHECK(pd_code(simplify(trace(decode("a")))) == "unlink 2");
    CHECK(pd_code(parse_pd(seven)) == seven);
    CHECK_THROWS_AS(parse_pd("PD[X(1,2,3)]"), ParseError);
}
