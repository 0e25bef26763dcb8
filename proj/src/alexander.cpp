#include <algorithm>
#include <cstdint>
#include <vector>

#include "toric/braid.hpp"
#include "toric/error.hpp"
#include "toric/invariants.hpp"

namespace toric {

namespace {

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t prime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = std::uint64_t(x & prime) + std::uint64_t(x >> 61);
    return r >= prime ? r - prime : r;
}
std::uint64_t add(std::uint64_t a, std::uint64_t b) { return (a += b) >= prime ? a - prime : a; }
std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + prime - b; }
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
        if (e & 1) r = mul(r, a);
    return r;
}
std::uint64_t inv(std::uint64_t a) { return pow_mod(a, prime - 2); }
std::uint64_t from_signed(std::int64_t x) {
    return x >= 0 ? std::uint64_t(x) % prime : sub(0, std::uint64_t(-x) % prime);
}

std::uint64_t determinant(std::vector<std::vector<std::uint64_t>> a) {
    const std::size_t m = a.size();
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = sub(0, det);
        }
        det = mul(det, a[col][col]);
        const std::uint64_t iv = inv(a[col][col]);
        for (std::size_t r = col + 1; r < m; ++r) {
            if (a[r][col] == 0) continue;
            const std::uint64_t f = mul(a[r][col], iv);
            for (std::size_t c = col; c < m; ++c) a[r][c] = sub(a[r][c], mul(f, a[col][c]));
        }
    }
    return det;
}

/// Coefficients of the polynomial through (xs[i], ys[i]), lowest degree first.
std::vector<std::uint64_t> interpolate(const std::vector<std::uint64_t>& xs, std::vector<std::uint64_t> ys) {
    const std::size_t n = xs.size();
    // Newton divided differences, in place.
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            ys[i] = mul(sub(ys[i], ys[i - 1]), inv(sub(xs[i], xs[i - j])));
            if (i == j) break;
        }
    std::vector<std::uint64_t> coeffs(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        // coeffs = coeffs * (t - xs[k]) + ys[k]
        for (std::size_t d = n - 1; d > 0; --d) coeffs[d] = sub(coeffs[d - 1], mul(coeffs[d], xs[k]));
        coeffs[0] = sub(0, mul(coeffs[0], xs[k]));
        coeffs[0] = add(coeffs[0], ys[k]);
    }
    return coeffs;
}

/// Strips the unit ambiguity: centres the exponents and fixes the sign so
/// that the value at t = 1 is positive.
LaurentPoly1 normalise(const std::vector<std::int64_t>& coeffs) {
    int lo = -1, hi = -1;
    for (int i = 0; i < int(coeffs.size()); ++i)
        if (coeffs[std::size_t(i)] != 0) {
            if (lo < 0) lo = i;
            hi = i;
        }
    if (lo < 0) throw DomainError("Alexander determinant vanished");
    if ((hi - lo) % 2 != 0) throw DomainError("Alexander polynomial has odd span");
    std::int64_t at_one = 0;
    for (auto c : coeffs) at_one += c;
    const std::int64_t sign = at_one < 0 ? -1 : 1;
    const int centre = (lo + hi) / 2;
    LaurentPoly1 out;
    for (int i = lo; i <= hi; ++i) out.add_term({i - centre}, sign * coeffs[std::size_t(i)]);
    return out;
}

}  // namespace

LaurentPoly1 alexander(const LinkDiagram& input) {
    if (input.component_count() != 1) throw DomainError("Alexander polynomial needs a one-component diagram");
    const LinkDiagram d = simplify(input);
    const int c = d.crossing_count();
    if (c <= 1) return LaurentPoly1(1);

    // Arcs run from one under-passage to the next.
    const auto& cs = d.crossings();
    std::vector<int> arc_of(std::size_t(d.edge_count()), -1);
    const int start = cs[0].arcs[2];  // leaves an under-passage
    int arc = 0;
    for (int e = start;;) {
        arc_of[std::size_t(e)] = arc;
        const Port h = d.head(e);
        if (h.slot == 0) ++arc;
        e = d.next_edge(e);
        if (e == start) break;
    }
    const int arcs = arc;  // equals c for a knot diagram

    // Row per crossing as linear polynomials (constant, t-coefficient).
    struct Entry {
        std::int64_t c0 = 0, c1 = 0;
    };
    std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(c), std::vector<Entry>(static_cast<std::size_t>(arcs)));
    for (int x = 0; x < c; ++x) {
        const auto& cr = cs[std::size_t(x)];
        const int over = arc_of[std::size_t(cr.arcs[1])];
        const int in = arc_of[std::size_t(cr.arcs[0])];
        const int out = arc_of[std::size_t(cr.arcs[2])];
        auto& row = rows[std::size_t(x)];
        row[std::size_t(over)].c0 += 1;
        row[std::size_t(over)].c1 -= 1;
        if (cr.sign > 0) {
            row[std::size_t(in)].c1 += 1;
            row[std::size_t(out)].c0 -= 1;
        } else {
            row[std::size_t(in)].c0 -= 1;
            row[std::size_t(out)].c1 += 1;
        }
    }

    // Determinant of the minor without the last row and column, as a
    // polynomial of degree < c, recovered from c evaluations.
    const std::size_t m = std::size_t(c - 1);
    std::vector<std::uint64_t> xs, ys;
    for (std::size_t k = 0; k <= m; ++k) {
        const std::uint64_t t = k + 2;
        std::vector<std::vector<std::uint64_t>> a(m, std::vector<std::uint64_t>(m));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t col = 0; col < m; ++col) {
                const auto& e = rows[r][col];
                a[r][col] = add(from_signed(e.c0), mul(from_signed(e.c1), t));
            }
        xs.push_back(t);
        ys.push_back(determinant(std::move(a)));
    }
    const auto mod_coeffs = interpolate(xs, ys);
    std::vector<std::int64_t> coeffs;
    for (auto v : mod_coeffs) coeffs.push_back(v > prime / 2 ? -std::int64_t(prime - v) : std::int64_t(v));
    auto out = normalise(coeffs);
    std::int64_t at_one = 0;
    for (const auto& [e, k] : out.terms()) at_one += k;
    if (at_one != 1) throw DomainError("Alexander polynomial does not evaluate to 1 at t = 1");
    return out;
}

LaurentPoly1 alexander_torus(int p, int q) {
    validate_torus_params(p, q);
    // Dense coefficients, lowest degree first.
    std::vector<std::int64_t> num(std::size_t(p * q + 2), 0);
    // (t^pq - 1)(t - 1) = t^(pq+1) - t^pq - t + 1
    num[std::size_t(p * q + 1)] += 1;
    num[std::size_t(p * q)] -= 1;
    num[1] -= 1;
    num[0] += 1;
    auto divide = [](std::vector<std::int64_t> a, int k) {
        // Exact division by t^k - 1.
        std::vector<std::int64_t> quot(a.size() - std::size_t(k), 0);
        for (std::size_t d = a.size(); d-- > std::size_t(k);) {
            const std::int64_t c = a[d];
            quot[d - std::size_t(k)] = c;
            a[d] -= c;
            a[d - std::size_t(k)] += c;
        }
        for (auto r : a)
            if (r != 0) throw DomainError("torus Alexander division left a remainder");
        return quot;
    };
    const auto quotient = divide(divide(num, p), q);
    return normalise(quotient);
}

int linking_number(const LinkDiagram& d) {
    if (d.component_count() != 2) throw DomainError("linking number needs exactly two components");
    const auto comp = d.edge_components();
    int total = 0;
    for (const auto& cr : d.crossings())
        if (comp[std::size_t(cr.arcs[0])] != comp[std::size_t(cr.arcs[1])]) total += cr.sign;
    return total / 2;
}

}  // namespace toric
