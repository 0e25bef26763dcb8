#include "toric/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "toric/braid.hpp"
#include "toric/error.hpp"

namespace toric {

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
    if (free_loops_ < 0) throw DomainError("negative free loop count");
    index();
}

void LinkDiagram::index() {
    const auto edges = std::size_t(edge_count());
    heads_.assign(edges, Port{});
    tails_.assign(edges, Port{});
    for (int x = 0; x < crossing_count(); ++x) {
        const auto& cr = crossings_[std::size_t(x)];
        if (cr.sign != 1 && cr.sign != -1) throw DomainError("crossing sign must be +1 or -1");
        for (int s = 0; s < 4; ++s) {
            const int e = cr.arcs[std::size_t(s)];
            if (e < 0 || std::size_t(e) >= edges) throw DomainError("edge label out of range");
            auto& port = cr.incoming(s) ? heads_[std::size_t(e)] : tails_[std::size_t(e)];
            if (port.crossing >= 0) throw DomainError("edge label used twice with the same direction");
            port = Port{x, s};
        }
    }
}

int LinkDiagram::next_edge(int edge) const {
    const Port h = head(edge);
    return crossings_[std::size_t(h.crossing)].arcs[std::size_t((h.slot + 2) & 3)];
}

std::vector<int> LinkDiagram::edge_components() const {
    std::vector<int> comp(std::size_t(edge_count()), -1);
    int k = 0;
    for (int e = 0; e < edge_count(); ++e) {
        if (comp[std::size_t(e)] >= 0) continue;
        for (int f = e; comp[std::size_t(f)] < 0; f = next_edge(f)) comp[std::size_t(f)] = k;
        ++k;
    }
    return comp;
}

int LinkDiagram::component_count() const {
    const auto comp = edge_components();
    const int with_crossings = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    return with_crossings + free_loops_;
}

LinkDiagram LinkDiagram::normalized() const {
    std::vector<int> relabel(std::size_t(edge_count()), -1);
    int next = 0;
    for (int e = 0; e < edge_count(); ++e) {
        if (relabel[std::size_t(e)] >= 0) continue;
        for (int f = e; relabel[std::size_t(f)] < 0; f = next_edge(f)) relabel[std::size_t(f)] = next++;
    }
    std::vector<Crossing> out = crossings_;
    for (auto& cr : out)
        for (auto& a : cr.arcs) a = relabel[std::size_t(a)];
    return LinkDiagram(std::move(out), free_loops_);
}

int component_count(const LinkDiagram& d) { return d.component_count(); }

namespace {

Crossing switched(const Crossing& c) {
    const auto& a = c.arcs;
    if (c.sign > 0) return Crossing{{a[3], a[0], a[1], a[2]}, -1};
    return Crossing{{a[1], a[2], a[3], a[0]}, 1};
}

/// Deletes the flagged crossings, joining strands through each one according
/// to `exit_slot(crossing, incoming_slot)`. Closed strands that only visit
/// deleted crossings become free loops.
LinkDiagram rebuild(const LinkDiagram& d, const std::vector<char>& removed,
                    const std::function<int(int, int)>& exit_slot) {
    const auto& cs = d.crossings();
    std::vector<int> new_index(cs.size(), -1);
    int kept = 0;
    for (std::size_t x = 0; x < cs.size(); ++x)
        if (!removed[x]) new_index[x] = kept++;

    std::vector<Crossing> out;
    out.reserve(std::size_t(kept));
    for (std::size_t x = 0; x < cs.size(); ++x)
        if (!removed[x]) out.push_back(Crossing{{-1, -1, -1, -1}, cs[x].sign});

    std::vector<char> used(std::size_t(d.edge_count()), 0);
    int label = 0;
    for (std::size_t x = 0; x < cs.size(); ++x) {
        if (removed[x]) continue;
        for (int s = 0; s < 4; ++s) {
            if (cs[x].incoming(s)) continue;
            int e = cs[x].arcs[std::size_t(s)];
            used[std::size_t(e)] = 1;
            Port h = d.head(e);
            while (removed[std::size_t(h.crossing)]) {
                e = cs[std::size_t(h.crossing)].arcs[std::size_t(exit_slot(h.crossing, h.slot))];
                used[std::size_t(e)] = 1;
                h = d.head(e);
            }
            out[std::size_t(new_index[x])].arcs[std::size_t(s)] = label;
            out[std::size_t(new_index[std::size_t(h.crossing)])].arcs[std::size_t(h.slot)] = label;
            ++label;
        }
    }
    int loops = d.free_loops();
    for (int e0 = 0; e0 < d.edge_count(); ++e0) {
        if (used[std::size_t(e0)]) continue;
        ++loops;
        for (int e = e0; !used[std::size_t(e)];) {
            used[std::size_t(e)] = 1;
            const Port h = d.head(e);
            e = cs[std::size_t(h.crossing)].arcs[std::size_t(exit_slot(h.crossing, h.slot))];
        }
    }
    return LinkDiagram(std::move(out), loops).normalized();
}

int pass_through(int, int slot) { return (slot + 2) & 3; }

Port other_end(const LinkDiagram& d, int x, int slot) {
    const int e = d.crossings()[std::size_t(x)].arcs[std::size_t(slot)];
    const Port h = d.head(e);
    return (h == Port{x, slot}) ? d.tail(e) : h;
}

}  // namespace

LinkDiagram mirror(const LinkDiagram& d) {
    auto cs = d.crossings();
    for (auto& c : cs) c = switched(c);
    return LinkDiagram(std::move(cs), d.free_loops());
}

LinkDiagram switch_crossing(const LinkDiagram& d, int crossing) {
    auto cs = d.crossings();
    auto& c = cs.at(std::size_t(crossing));
    c = switched(c);
    return LinkDiagram(std::move(cs), d.free_loops());
}

LinkDiagram smooth_crossing(const LinkDiagram& d, int crossing) {
    std::vector<char> removed(std::size_t(d.crossing_count()), 0);
    removed.at(std::size_t(crossing)) = 1;
    const int sign = d.crossings()[std::size_t(crossing)].sign;
    return rebuild(d, removed, [sign](int, int slot) {
        if (sign > 0) return slot == 0 ? 1 : 2;
        return slot == 0 ? 3 : 2;
    });
}

int find_kink(const LinkDiagram& d) {
    for (int x = 0; x < d.crossing_count(); ++x) {
        const auto& a = d.crossings()[std::size_t(x)].arcs;
        for (int s = 0; s < 4; ++s)
            if (a[std::size_t(s)] == a[std::size_t((s + 1) & 3)]) return x;
    }
    return -1;
}

std::array<int, 2> find_removable_bigon(const LinkDiagram& d) {
    for (int x = 0; x < d.crossing_count(); ++x) {
        for (int s = 0; s < 4; ++s) {
            // Face corner between slots s and s+1 at x; a bigon face returns after two steps.
            const Port p = other_end(d, x, (s + 1) & 3);
            if (p.crossing == x) continue;
            const Port back = other_end(d, p.crossing, (p.slot + 1) & 3);
            if (back != Port{x, s}) continue;
            // Odd slots carry the over-strand: the shared strand must be over (or under) at both.
            if (((s + 1) & 1) == (p.slot & 1)) return {x, p.crossing};
        }
    }
    return {-1, -1};
}

LinkDiagram simplify(const LinkDiagram& d) {
    LinkDiagram cur = d.normalized();
    for (;;) {
        std::vector<char> removed(std::size_t(cur.crossing_count()), 0);
        if (const int k = find_kink(cur); k >= 0) {
            removed[std::size_t(k)] = 1;
        } else if (const auto b = find_removable_bigon(cur); b[0] >= 0) {
            removed[std::size_t(b[0])] = removed[std::size_t(b[1])] = 1;
        } else {
            return cur;
        }
        cur = rebuild(cur, removed, pass_through);
    }
}

std::vector<LinkDiagram> split_pieces(const LinkDiagram& d) {
    const int c = d.crossing_count();
    std::vector<int> parent(static_cast<std::size_t>(c));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[std::size_t(x)] != x) x = parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
        return x;
    };
    for (int e = 0; e < d.edge_count(); ++e) parent[std::size_t(find(d.head(e).crossing))] = find(d.tail(e).crossing);

    std::vector<int> group(std::size_t(c), -1);
    int groups = 0;
    for (int x = 0; x < c; ++x) {
        const int r = find(x);
        if (group[std::size_t(r)] < 0) group[std::size_t(r)] = groups++;
        group[std::size_t(x)] = group[std::size_t(r)];
    }
    std::vector<std::vector<Crossing>> parts(static_cast<std::size_t>(groups));
    std::vector<int> relabel(std::size_t(d.edge_count()), -1);
    std::vector<int> next_label(std::size_t(groups), 0);
    for (int e = 0; e < d.edge_count(); ++e) {
        const int g = group[std::size_t(d.head(e).crossing)];
        relabel[std::size_t(e)] = next_label[std::size_t(g)]++;
    }
    for (int x = 0; x < c; ++x) {
        Crossing cr = d.crossings()[std::size_t(x)];
        for (auto& a : cr.arcs) a = relabel[std::size_t(a)];
        parts[std::size_t(group[std::size_t(x)])].push_back(cr);
    }
    std::vector<LinkDiagram> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.emplace_back(std::move(p), 0);
    return out;
}

namespace {

/// Traversal code from one starting edge. Returns false as soon as the code
/// exceeds `best` (when `best` is non-empty), leaving `code` partial.
bool encode_from(const LinkDiagram& d, int start, const std::vector<int>& best, std::vector<int>& code) {
    const auto& cs = d.crossings();
    std::vector<int> new_id(cs.size(), -1);
    std::vector<int> order;
    std::vector<char> visited(std::size_t(d.edge_count()), 0);
    code.clear();
    bool tied = !best.empty();
    auto push = [&](int v) {
        if (tied) {
            const std::size_t i = code.size();
            if (i < best.size()) {
                if (v > best[i]) return false;
                if (v < best[i]) tied = false;
            }
        }
        code.push_back(v);
        return true;
    };
    int e = start;
    for (;;) {
        const int first = e;
        do {
            visited[std::size_t(e)] = 1;
            const Port h = d.head(e);
            if (new_id[std::size_t(h.crossing)] < 0) {
                new_id[std::size_t(h.crossing)] = int(order.size());
                order.push_back(h.crossing);
            }
            if (!push(new_id[std::size_t(h.crossing)] * 4 + h.slot)) return false;
            e = cs[std::size_t(h.crossing)].arcs[std::size_t((h.slot + 2) & 3)];
        } while (e != first);

        int next = -1;
        for (std::size_t id = 0; id < order.size() && next < 0; ++id) {
            const auto& cr = cs[std::size_t(order[id])];
            for (int s = 0; s < 4; ++s) {
                if (cr.incoming(s) && !visited[std::size_t(cr.arcs[std::size_t(s)])]) {
                    next = cr.arcs[std::size_t(s)];
                    break;
                }
            }
        }
        if (next >= 0) {
            if (!push(-1)) return false;
            e = next;
            continue;
        }
        const auto it = std::find(visited.begin(), visited.end(), 0);
        if (it == visited.end()) return true;
        if (!push(-2)) return false;
        e = int(it - visited.begin());
    }
}

}  // namespace

std::vector<int> canonical_key(const LinkDiagram& d) {
    std::vector<int> best, code;
    for (int start = 0; start < d.edge_count(); ++start) {
        if (encode_from(d, start, best, code) && (best.empty() || code < best)) best.swap(code);
    }
    best.push_back(-3);
    best.push_back(d.free_loops());
    return best;
}

std::string pd_code(const LinkDiagram& d) {
    const auto loops_text = [](int k) { return k == 1 ? std::string("unknot") : "unlink " + std::to_string(k); };
    if (d.crossing_count() == 0) return d.free_loops() == 0 ? std::string("empty") : loops_text(d.free_loops());
    const LinkDiagram n = d.normalized();
    std::ostringstream out;
    out << "PD[";
    for (int x = 0; x < n.crossing_count(); ++x) {
        const auto& a = n.crossings()[std::size_t(x)].arcs;
        out << (x ? "," : "") << "X(" << a[0] + 1 << ',' << a[1] + 1 << ',' << a[2] + 1 << ',' << a[3] + 1 << ')';
    }
    out << ']';
    if (n.free_loops() > 0) out << " + " << loops_text(n.free_loops());
    return out.str();
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

int parse_loops(const std::string& s) {
    if (s == "empty") return 0;
    if (s == "unknot") return 1;
    if (s.rfind("unlink ", 0) == 0) {
        try {
            const int k = std::stoi(s.substr(7));
            if (k >= 0) return k;
        } catch (const std::exception&) {
        }
    }
    throw ParseError("unrecognised crossingless diagram '" + s + "'");
}

LinkDiagram orient_pd(const std::vector<std::array<int, 4>>& raw, int loops) {
    // Compact labels, keeping their relative order.
    std::vector<int> labels;
    for (const auto& x : raw) labels.insert(labels.end(), x.begin(), x.end());
    std::vector<int> uniq = labels;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    const std::size_t c = raw.size();
    if (uniq.size() != 2 * c) throw ParseError("PD code must use exactly 2 labels per crossing");
    std::vector<std::array<int, 4>> arcs(c);
    std::vector<std::vector<Port>> ports(uniq.size());
    for (std::size_t x = 0; x < c; ++x) {
        for (int s = 0; s < 4; ++s) {
            const int l = int(std::lower_bound(uniq.begin(), uniq.end(), raw[x][std::size_t(s)]) - uniq.begin());
            arcs[x][std::size_t(s)] = l;
            ports[std::size_t(l)].push_back(Port{int(x), s});
        }
    }
    for (const auto& p : ports)
        if (p.size() != 2) throw ParseError("every PD label must appear exactly twice");

    // role: 0 unknown, 1 incoming, 2 outgoing; slots 0/2 are fixed.
    std::vector<std::array<int, 4>> role(c, {1, 0, 2, 0});
    auto propagate = [&]() {
        bool changed = true;
        while (changed) {
            changed = false;
            auto set = [&](Port p, int r) {
                int& cur = role[std::size_t(p.crossing)][std::size_t(p.slot)];
                if (cur == r) return;
                if (cur != 0) throw ParseError("PD code has inconsistent orientation");
                cur = r;
                changed = true;
            };
            for (std::size_t l = 0; l < ports.size(); ++l) {
                const Port a = ports[l][0], b = ports[l][1];
                const int ra = role[std::size_t(a.crossing)][std::size_t(a.slot)];
                const int rb = role[std::size_t(b.crossing)][std::size_t(b.slot)];
                if (ra && !rb) set(b, 3 - ra);
                if (rb && !ra) set(a, 3 - rb);
                if (ra && rb && ra == rb) throw ParseError("PD code has inconsistent orientation");
            }
            for (std::size_t x = 0; x < c; ++x) {
                auto& r = role[x];
                if (r[1] && !r[3]) set(Port{int(x), 3}, 3 - r[1]);
                if (r[3] && !r[1]) set(Port{int(x), 1}, 3 - r[3]);
            }
        }
    };
    propagate();
    for (std::size_t x = 0; x < c; ++x) {
        if (role[x][1]) continue;
        // Components that are never under: infer direction from label succession.
        const int b = arcs[x][1], d = arcs[x][3];
        const bool b_in = (d == b + 1) || (b != d + 1 && b > d);
        role[x][1] = b_in ? 1 : 2;
        role[x][3] = b_in ? 2 : 1;
        propagate();
    }
    std::vector<Crossing> cs(c);
    for (std::size_t x = 0; x < c; ++x) cs[x] = Crossing{arcs[x], role[x][3] == 1 ? 1 : -1};
    try {
        return LinkDiagram(std::move(cs), loops);
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid PD code: ") + e.what());
    }
}

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
    std::string s = trim(text);
    int loops = 0;
    if (const auto plus = s.find(" + "); plus != std::string::npos) {
        loops = parse_loops(trim(s.substr(plus + 3)));
        s = trim(s.substr(0, plus));
    }
    if (s.rfind("PD[", 0) != 0) return LinkDiagram({}, parse_loops(s) + loops);
    if (s.back() != ']') throw ParseError("PD code must end with ']'");
    const std::string body = s.substr(3, s.size() - 4);
    std::vector<std::array<int, 4>> raw;
    std::size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() && (body[pos] == ',' || std::isspace(static_cast<unsigned char>(body[pos])))) ++pos;
        if (pos >= body.size()) break;
        if (body[pos] != 'X' || pos + 1 >= body.size() || body[pos + 1] != '(')
            throw ParseError("expected X( in PD code");
        const auto close = body.find(')', pos);
        if (close == std::string::npos) throw ParseError("unterminated X( in PD code");
        std::array<int, 4> x{};
        std::istringstream in(body.substr(pos + 2, close - pos - 2));
        std::string tok;
        int k = 0;
        while (std::getline(in, tok, ',')) {
            if (k >= 4) throw ParseError("PD crossing with more than 4 labels");
            try {
                x[std::size_t(k++)] = std::stoi(tok);
            } catch (const std::exception&) {
                throw ParseError("bad PD label '" + tok + "'");
            }
        }
        if (k != 4) throw ParseError("PD crossing with fewer than 4 labels");
        raw.push_back(x);
        pos = close + 1;
    }
    if (raw.empty()) return LinkDiagram({}, 1 + loops);
    return orient_pd(raw, loops);
}

LinkDiagram braid_closure(int strands, std::span<const int> word) {
    if (strands < 1) throw DomainError("braid needs at least one strand");
    std::vector<int> cur(static_cast<std::size_t>(strands));
    std::iota(cur.begin(), cur.end(), 0);
    int next = strands;
    std::vector<Crossing> cs;
    for (int g : word) {
        const int i = std::abs(g);
        if (i < 1 || i >= strands) throw DomainError("braid generator out of range");
        auto& left = cur[std::size_t(i - 1)];
        auto& right = cur[std::size_t(i)];
        const int new_left = next++, new_right = next++;
        if (g > 0) {
            cs.push_back(Crossing{{right, new_right, new_left, left}, 1});
        } else {
            cs.push_back(Crossing{{left, right, new_right, new_left}, -1});
        }
        left = new_left;
        right = new_right;
    }
    // Close up: the strand ending at position i continues from the start of position i.
    std::vector<int> relabel(std::size_t(next), -1);
    int loops = 0;
    for (int i = 0; i < strands; ++i) {
        if (cur[std::size_t(i)] == i) {
            ++loops;
            continue;
        }
        relabel[std::size_t(cur[std::size_t(i)])] = i;
    }
    std::vector<int> compact(std::size_t(next), -1);
    int label = 0;
    for (int l = 0; l < next; ++l) {
        const int r = relabel[std::size_t(l)] >= 0 ? relabel[std::size_t(l)] : l;
        relabel[std::size_t(l)] = r;
    }
    for (auto& c : cs)
        for (auto& a : c.arcs) {
            a = relabel[std::size_t(a)];
            if (compact[std::size_t(a)] < 0) compact[std::size_t(a)] = label++;
            a = compact[std::size_t(a)];
        }
    return LinkDiagram(std::move(cs), loops).normalized();
}

LinkDiagram torus_knot_diagram(int p, int q) {
    validate_torus_params(p, q);
    std::vector<int> word;
    word.reserve(std::size_t(q) * std::size_t(p - 1));
    for (int k = 0; k < q; ++k)
        for (int i = 1; i < p; ++i) word.push_back(i);
    return braid_closure(p, word);
}

}  // namespace toric
