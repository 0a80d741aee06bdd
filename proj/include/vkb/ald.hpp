#pragma once

/**
 * @file ald.hpp
 * @brief The abstract link diagram of a Gauss code, as a ribbon graph.
 *
 * Each crossing is a 4-valent vertex. Slots are numbered counterclockwise:
 *
 *   positive crossing: 0 over-in, 1 under-in, 2 over-out, 3 under-out
 *   negative crossing: 0 over-in, 1 under-out, 2 over-out, 3 under-in
 *
 * Every passage owns the arc leaving it, so arcs are indexed like passages
 * (component by component). A crossing-free component is a free loop: an
 * annulus with two regions of its own.
 *
 * Darts: 2a runs along arc a in its orientation, 2a+1 against it. The
 * region of a dart is the boundary walk on its left.
 */

#include <array>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vkb/diagram.hpp"

namespace vkb {

namespace slots {

constexpr int in_slot(role r, int sign) { return r == role::over ? 0 : (sign > 0 ? 1 : 3); }
constexpr int out_slot(role r, int sign) { return r == role::over ? 2 : (sign > 0 ? 3 : 1); }
constexpr bool is_over(int slot) { return slot % 2 == 0; }

/// A-splice joins slots 0-3 and 1-2; B-splice joins 0-1 and 2-3.
constexpr int a_partner(int slot) { return 3 - slot; }
constexpr int b_partner(int slot) { return slot ^ 1; }

} // namespace slots

enum class splice : std::uint8_t { a, b };

struct ribbon_graph {
    struct arc {
        int tail_vertex = 0, tail_slot = 0;  // vertex = crossing id - 1
        int head_vertex = 0, head_slot = 0;
        std::size_t component = 0;
        std::size_t index = 0;  // passage the arc leaves from
    };
    struct end {
        int arc = -1;
        bool tail = false;  // arc leaves the vertex through this slot
    };

    int vertex_count = 0;
    std::vector<arc> arcs;
    std::vector<std::array<end, 4>> slot_end;  // per vertex
    std::vector<std::size_t> free_loop_components;

    std::size_t edge_count() const noexcept { return arcs.size() + free_loop_components.size(); }
    std::size_t dart_count() const noexcept { return 2 * edge_count(); }
    bool is_free_loop(std::size_t edge) const noexcept { return edge >= arcs.size(); }

    /// (vertex, slot) a dart arrives at.
    std::pair<int, int> arrival(int dart) const {
        const auto& a = arcs[static_cast<std::size_t>(dart / 2)];
        return dart % 2 == 0 ? std::pair{a.head_vertex, a.head_slot} : std::pair{a.tail_vertex, a.tail_slot};
    }

    /// Dart leaving `vertex` through `slot`.
    int leaving(int vertex, int slot) const {
        const auto& e = slot_end[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(slot)];
        return 2 * e.arc + (e.tail ? 0 : 1);
    }
};

/// One vertex per crossing with the rotation fixed by its sign.
inline ribbon_graph build_ald(const diagram& d) {
    ribbon_graph g;
    g.vertex_count = d.crossing_count();
    g.slot_end.assign(static_cast<std::size_t>(g.vertex_count), {});
    for (std::size_t ci = 0; ci < d.component_count(); ++ci) {
        const auto& comp = d.components()[ci];
        if (comp.empty()) {
            g.free_loop_components.push_back(ci);
            continue;
        }
        const auto base = g.arcs.size();
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const auto& from = comp[i];
            const auto& to = comp[(i + 1) % comp.size()];
            ribbon_graph::arc a;
            a.tail_vertex = from.crossing - 1;
            a.tail_slot = slots::out_slot(from.strand, from.sign);
            a.head_vertex = to.crossing - 1;
            a.head_slot = slots::in_slot(to.strand, to.sign);
            a.component = ci;
            a.index = i;
            g.arcs.push_back(a);
        }
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const int id = static_cast<int>(base + i);
            const auto& a = g.arcs[base + i];
            g.slot_end[static_cast<std::size_t>(a.tail_vertex)][static_cast<std::size_t>(a.tail_slot)] = {id, true};
            g.slot_end[static_cast<std::size_t>(a.head_vertex)][static_cast<std::size_t>(a.head_slot)] = {id, false};
        }
    }
    return g;
}

struct edge_side {
    int edge = 0;
    int side = 0;  // 0: left of the edge's orientation, 1: right
    friend bool operator==(const edge_side&, const edge_side&) = default;
};

struct region_set {
    std::vector<std::vector<edge_side>> regions;  // cyclic boundary walks
    std::vector<int> region_of_dart;
    /// One "must differ" constraint per edge: (left region, right region).
    std::vector<std::pair<int, int>> constraints;

    std::size_t walk_length_total() const {
        std::size_t n = 0;
        for (const auto& r : regions) n += r.size();
        return n;
    }
};

/// Boundary walks: arrive at slot s, leave through slot s-1 (clockwise neighbour).
inline region_set boundary_regions(const ribbon_graph& g) {
    region_set rs;
    const auto darts = static_cast<int>(2 * g.arcs.size());
    rs.region_of_dart.assign(g.dart_count(), -1);
    for (int start = 0; start < darts; ++start) {
        if (rs.region_of_dart[static_cast<std::size_t>(start)] >= 0) continue;
        const int id = static_cast<int>(rs.regions.size());
        std::vector<edge_side> walk;
        int dart = start;
        do {
            rs.region_of_dart[static_cast<std::size_t>(dart)] = id;
            walk.push_back({dart / 2, dart % 2});
            const auto [v, s] = g.arrival(dart);
            dart = g.leaving(v, (s + 3) % 4);
        } while (dart != start);
        rs.regions.push_back(std::move(walk));
    }
    for (std::size_t j = 0; j < g.free_loop_components.size(); ++j) {
        const int edge = static_cast<int>(g.arcs.size() + j);
        for (int side = 0; side < 2; ++side) {
            rs.region_of_dart[static_cast<std::size_t>(2 * edge + side)] = static_cast<int>(rs.regions.size());
            rs.regions.push_back({{edge, side}});
        }
    }
    rs.constraints.reserve(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        rs.constraints.emplace_back(rs.region_of_dart[2 * e], rs.region_of_dart[2 * e + 1]);
    return rs;
}

/// V - E + B of the closed surface obtained by capping every boundary walk.
inline int euler_characteristic(const ribbon_graph& g, const region_set& rs) {
    const auto walks = rs.regions.size() - 2 * g.free_loop_components.size();
    return g.vertex_count - static_cast<int>(g.arcs.size()) + static_cast<int>(walks) +
           2 * static_cast<int>(g.free_loop_components.size());
}

/// Connected pieces of the ribbon graph; each free loop is its own piece.
inline int connected_pieces(const ribbon_graph& g) {
    std::vector<std::size_t> parent(static_cast<std::size_t>(g.vertex_count));
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](int v) {
        auto x = static_cast<std::size_t>(v);
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int pieces = g.vertex_count;
    for (const auto& a : g.arcs) {
        const auto x = find(a.tail_vertex), y = find(a.head_vertex);
        if (x != y) {
            parent[x] = y;
            --pieces;
        }
    }
    return pieces + static_cast<int>(g.free_loop_components.size());
}

/// Total genus of the capped surface. Zero iff the code has a planar realization.
inline int surface_genus(const diagram& d) {
    const auto g = build_ald(d);
    const auto rs = boundary_regions(g);
    return (2 * connected_pieces(g) - euler_characteristic(g, rs)) / 2;
}

enum class color : std::uint8_t { black, white };

constexpr color operator!(color c) noexcept { return c == color::black ? color::white : color::black; }

struct coloring {
    std::vector<color> region_color;
};

inline bool is_valid_coloring(const region_set& rs, const coloring& col) {
    if (col.region_color.size() != rs.regions.size()) return false;
    for (const auto& [l, r] : rs.constraints)
        if (col.region_color[static_cast<std::size_t>(l)] == col.region_color[static_cast<std::size_t>(r)]) return false;
    return true;
}

/// Two-colors the "must differ" constraint graph; each connected piece
/// starts black at its first-discovered region.
inline std::optional<coloring> two_color(const region_set& rs) {
    const auto n = rs.regions.size();
    std::vector<std::vector<int>> adj(n);
    for (const auto& [l, r] : rs.constraints) {
        if (l == r) return std::nullopt;
        adj[static_cast<std::size_t>(l)].push_back(r);
        adj[static_cast<std::size_t>(r)].push_back(l);
    }
    std::vector<int> assigned(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (assigned[s] >= 0) continue;
        assigned[s] = 0;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            for (int w : adj[u]) {
                auto& aw = assigned[static_cast<std::size_t>(w)];
                if (aw < 0) {
                    aw = 1 - assigned[u];
                    q.push(static_cast<std::size_t>(w));
                } else if (aw == assigned[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    coloring col;
    col.region_color.reserve(n);
    for (int a : assigned) col.region_color.push_back(a == 0 ? color::black : color::white);
    return col;
}

inline std::optional<coloring> checkerboard_colorable(const diagram& d) {
    return two_color(boundary_regions(build_ald(d)));
}

/// Over and under alternate along every component (cyclically).
inline bool is_alternating(const diagram& d) {
    for (const auto& comp : d.components()) {
        if (comp.size() % 2 != 0) return false;
        for (std::size_t i = 0; i < comp.size(); ++i)
            if (comp[i].strand == comp[(i + 1) % comp.size()].strand) return false;
    }
    return true;
}

/**
 * Crossings whose change makes the diagram alternating, or nullopt if no
 * such set exists. Solves x_p xor x_q = [roles equal] for consecutive
 * passages with a parity union-find.
 */
inline std::optional<std::vector<int>> make_alternating(const diagram& d) {
    const auto c = static_cast<std::size_t>(d.crossing_count());
    std::vector<int> parent(c + 1), parity(c + 1, 0);
    for (std::size_t i = 0; i <= c; ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        int p = 0;
        int root = x;
        while (parent[static_cast<std::size_t>(root)] != root) {
            p ^= parity[static_cast<std::size_t>(root)];
            root = parent[static_cast<std::size_t>(root)];
        }
        // compress
        int cur = x, acc = p;
        while (parent[static_cast<std::size_t>(cur)] != cur) {
            const int next = parent[static_cast<std::size_t>(cur)];
            const int next_par = acc ^ parity[static_cast<std::size_t>(cur)];
            parent[static_cast<std::size_t>(cur)] = root;
            parity[static_cast<std::size_t>(cur)] = acc;
            cur = next;
            acc = next_par;
        }
        return std::pair{root, p};
    };
    for (const auto& comp : d.components()) {
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const auto& p = comp[i];
            const auto& q = comp[(i + 1) % comp.size()];
            const int want = p.strand == q.strand ? 1 : 0;
            const auto [rp, pp] = find(p.crossing);
            const auto [rq, pq] = find(q.crossing);
            if (rp == rq) {
                if ((pp ^ pq) != want) return std::nullopt;
            } else {
                parent[static_cast<std::size_t>(rp)] = rq;
                parity[static_cast<std::size_t>(rp)] = pp ^ pq ^ want;
            }
        }
    }
    std::vector<int> flips;
    for (int id = 1; id <= d.crossing_count(); ++id)
        if (find(id).second == 1) flips.push_back(id);
    return flips;
}

/**
 * The coloring of an alternating diagram in which every corner lying
 * counterclockwise after an over-slot is black.
 */
inline coloring coloring_from_alternating(const diagram& d) {
    if (!is_alternating(d)) throw diagram_error(diagram_errc::not_alternating, "diagram is not alternating");
    const auto g = build_ald(d);
    const auto rs = boundary_regions(g);
    coloring col;
    col.region_color.assign(rs.regions.size(), color::black);
    for (std::size_t r = 0; r < rs.regions.size(); ++r) {
        const auto& walk = rs.regions[r];
        if (g.is_free_loop(static_cast<std::size_t>(walk.front().edge))) {
            col.region_color[r] = walk.front().side == 0 ? color::black : color::white;
            continue;
        }
        std::optional<color> seen;
        for (const auto& es : walk) {
            const auto [v, s] = g.arrival(2 * es.edge + es.side);
            const color corner = slots::is_over((s + 3) % 4) ? color::black : color::white;
            if (seen && *seen != corner)
                throw std::logic_error("alternating diagram produced a face with mixed corners");
            seen = corner;
        }
        col.region_color[r] = *seen;
    }
    return col;
}

/// The loops of a state, each with the colors carried on its two sides.
struct state_coloring {
    struct loop {
        std::vector<int> darts;  // empty for a free loop of the diagram
        color left = color::black;
        color right = color::white;
    };
    std::vector<loop> loops;

    bool valid() const {
        for (const auto& l : loops)
            if (l.left == l.right) return false;
        return true;
    }
};

class color_conflict : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * Carries a checkerboard coloring of the diagram onto the regions of a
 * state: each side of a state loop keeps the color of the regions it runs
 * along. Throws color_conflict if one side would need two colors.
 */
inline state_coloring induced_state_coloring(const diagram& d, const coloring& col, const std::vector<splice>& choices) {
    if (choices.size() != static_cast<std::size_t>(d.crossing_count()))
        throw std::invalid_argument("state must choose a splice at every crossing");
    const auto g = build_ald(d);
    const auto rs = boundary_regions(g);
    if (!is_valid_coloring(rs, col)) throw std::invalid_argument("not a checkerboard coloring of this diagram");
    auto color_of = [&](int dart) {
        return col.region_color[static_cast<std::size_t>(rs.region_of_dart[static_cast<std::size_t>(dart)])];
    };
    state_coloring out;
    std::vector<bool> used(g.dart_count(), false);
    const auto darts = static_cast<int>(2 * g.arcs.size());
    for (int start = 0; start < darts; start += 2) {
        if (used[static_cast<std::size_t>(start)]) continue;
        state_coloring::loop loop;
        loop.left = color_of(start);
        loop.right = color_of(start ^ 1);
        int dart = start;
        do {
            used[static_cast<std::size_t>(dart)] = used[static_cast<std::size_t>(dart ^ 1)] = true;
            if (color_of(dart) != loop.left || color_of(dart ^ 1) != loop.right)
                throw color_conflict("state loop side changes color");
            loop.darts.push_back(dart);
            const auto [v, s] = g.arrival(dart);
            const auto pick = choices[static_cast<std::size_t>(v)];
            const int t = pick == splice::a ? slots::a_partner(s) : slots::b_partner(s);
            dart = g.leaving(v, t);
        } while (dart != start);
        out.loops.push_back(std::move(loop));
    }
    for (std::size_t j = 0; j < g.free_loop_components.size(); ++j) {
        const int edge = static_cast<int>(g.arcs.size() + j);
        out.loops.push_back({{}, color_of(2 * edge), color_of(2 * edge + 1)});
    }
    if (!out.valid()) throw color_conflict("state loop has one color on both sides");
    return out;
}

} // namespace vkb
