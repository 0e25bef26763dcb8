#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "toric/error.hpp"
#include "toric/invariants.hpp"

namespace toric {

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<int>& k) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : k) h = (h ^ std::size_t(std::uint32_t(x))) * 1099511628211ull;
        return h;
    }
};

LaurentPoly2 mono(std::int64_t c, int v, int z) { return LaurentPoly2::monomial(c, {v, z}); }

/// Component order and base points for which the diagram is as close to
/// descending as possible; returns the crossings first met on the
/// under-strand, in traversal order.
std::vector<int> bad_crossings(const LinkDiagram& d) {
    const auto comp = d.edge_components();
    const int k = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<int>> cycles(static_cast<std::size_t>(k));
    for (int e = 0; e < d.edge_count(); ++e) {
        auto& cyc = cycles[std::size_t(comp[std::size_t(e)])];
        if (cyc.empty())
            for (int f = e;;) {
                cyc.push_back(f);
                f = d.next_edge(f);
                if (f == e) break;
            }
    }
    const auto& cs = d.crossings();
    auto comp_at = [&](int x, int slot) { return comp[std::size_t(cs[std::size_t(x)].arcs[std::size_t(slot)])]; };

    // Base point per component minimising self-crossings first met from below.
    std::vector<int> start(std::size_t(k), 0);
    std::vector<int> seen(cs.size(), -1);
    int stamp = 0;
    for (int c = 0; c < k; ++c) {
        const auto& cyc = cycles[std::size_t(c)];
        int best = -1;
        for (std::size_t s = 0; s < cyc.size(); ++s) {
            ++stamp;
            int bad = 0;
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                const Port h = d.head(cyc[(s + i) % cyc.size()]);
                if (comp_at(h.crossing, (h.slot + 1) & 3) != c) continue;
                if (seen[std::size_t(h.crossing)] == stamp) continue;
                seen[std::size_t(h.crossing)] = stamp;
                if ((h.slot & 1) == 0) ++bad;
            }
            if (best < 0 || bad < best) {
                best = bad;
                start[std::size_t(c)] = int(s);
            }
        }
    }

    // Component order: earlier components should pass over later ones.
    std::vector<std::vector<int>> under_count(std::size_t(k), std::vector<int>(std::size_t(k), 0));
    for (const auto& cr : cs) {
        const int under = comp[std::size_t(cr.arcs[0])], over = comp[std::size_t(cr.arcs[1])];
        if (under != over) ++under_count[std::size_t(under)][std::size_t(over)];
    }
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    auto cost = [&](const std::vector<int>& ord) {
        int total = 0;
        for (std::size_t i = 0; i < ord.size(); ++i)
            for (std::size_t j = i + 1; j < ord.size(); ++j)
                total += under_count[std::size_t(ord[i])][std::size_t(ord[j])];
        return total;
    };
    if (k <= 6) {
        auto best = order;
        int best_cost = cost(order);
        while (std::next_permutation(order.begin(), order.end())) {
            if (const int c = cost(order); c < best_cost) {
                best_cost = c;
                best = order;
            }
        }
        order = best;
    } else {
        std::vector<int> rest = order;
        order.clear();
        while (!rest.empty()) {
            auto pick = std::min_element(rest.begin(), rest.end(), [&](int a, int b) {
                int ua = 0, ub = 0;
                for (int o : rest) ua += under_count[std::size_t(a)][std::size_t(o)], ub += under_count[std::size_t(b)][std::size_t(o)];
                return ua < ub;
            });
            order.push_back(*pick);
            rest.erase(pick);
        }
    }

    std::vector<int> bad;
    std::vector<char> met(cs.size(), 0);
    for (int c : order) {
        const auto& cyc = cycles[std::size_t(c)];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const Port h = d.head(cyc[(std::size_t(start[std::size_t(c)]) + i) % cyc.size()]);
            if (met[std::size_t(h.crossing)]) continue;
            met[std::size_t(h.crossing)] = 1;
            if ((h.slot & 1) == 0) bad.push_back(h.crossing);
        }
    }
    return bad;
}

class HomflyEngine {
public:
    explicit HomflyEngine(std::size_t budget) : budget_(budget), mu_(homfly_unlink_factor()) {}

    LaurentPoly2 eval(const LinkDiagram& input) {
        const LinkDiagram d = simplify(input);
        if (d.crossing_count() == 0) {
            if (d.free_loops() == 0) throw DomainError("HOMFLY-PT of the empty link is undefined");
            return mu_.pow(unsigned(d.free_loops() - 1));
        }
        auto pieces = split_pieces(d);
        const int parts = int(pieces.size()) + d.free_loops();
        if (parts == 1) return eval_connected(d);
        LaurentPoly2 out = mu_.pow(unsigned(parts - 1));
        for (const auto& piece : pieces) out *= eval_connected(piece);
        return out;
    }

private:
    LaurentPoly2 eval_connected(const LinkDiagram& d) {
        auto key = canonical_key(d);
        if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (++nodes_ > budget_) throw BudgetExceeded(nodes_);

        // Switch every crossing first met from below; the result is descending,
        // hence an unlink. Each switch contributes one smoothed term.
        const auto bad = bad_crossings(d);
        LinkDiagram cur = d;
        LaurentPoly2 coef(1), result;
        for (int x : bad) {
            const int sign = cur.crossings()[std::size_t(x)].sign;
            const LaurentPoly2 smoothed = eval(smooth_crossing(cur, x));
            if (sign > 0) {
                // P(L+) = v^2 P(L-) + v z P(L0)
                result += coef * mono(1, 1, 1) * smoothed;
                coef *= mono(1, 2, 0);
            } else {
                // P(L-) = v^-2 P(L+) - v^-1 z P(L0)
                result += coef * mono(-1, -1, 1) * smoothed;
                coef *= mono(1, -2, 0);
            }
            cur = switch_crossing(cur, x);
        }
        result += coef * mu_.pow(unsigned(cur.component_count() - 1));
        memo_.emplace(std::move(key), result);
        return result;
    }

    std::size_t budget_;
    std::size_t nodes_ = 0;
    LaurentPoly2 mu_;
    std::unordered_map<std::vector<int>, LaurentPoly2, KeyHash> memo_;
};

}  // namespace

LaurentPoly2 homfly_unlink_factor() { return mono(1, -1, -1) + mono(-1, 1, -1); }

LaurentPoly2 homfly(const LinkDiagram& d, std::size_t budget) { return HomflyEngine(budget).eval(d); }

}  // namespace toric
