#pragma once

/**
 * @file moves.hpp
 * @brief Reidemeister moves as Gauss-code rewrites.
 *
 * Virtual moves leave a Gauss code unchanged, so only the three classical
 * moves act here. Any two gaps of the code may be brought together by
 * virtual moves, so R2 may join arbitrary gaps.
 *
 * R3 sites: a top strand passes over two crossings in a row, a middle
 * strand has one under and one over passage in a row, a bottom strand has
 * two unders in a row, and the three crossings pair up the strands. The
 * move reverses each of the three pairs. Let a be the top/middle crossing,
 * b the top/bottom one, c the middle/bottom one, and let t, m, w be +1
 * when the top meets a before b, the middle meets a before c, and the
 * bottom meets b before c (and -1 otherwise). The site is admissible iff
 * for some chirality x in {+1,-1}:
 *
 *   sign(a) = x t m,   sign(b) = x t w,   sign(c) = x m w.
 */

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vkb/diagram.hpp"

namespace vkb {

enum class move_kind { r1_add, r1_remove, r2_add, r2_remove, r3 };

inline const char* to_string(move_kind k) {
    switch (k) {
    case move_kind::r1_add: return "R1-add";
    case move_kind::r1_remove: return "R1-remove";
    case move_kind::r2_add: return "R2-add";
    case move_kind::r2_remove: return "R2-remove";
    case move_kind::r3: return "R3";
    }
    return "?";
}

/// A move at a concrete site. Gaps insert before the passage at `index`.
struct move {
    move_kind kind = move_kind::r1_add;
    site gap{};           // R1-add, R2-add (over pair)
    site gap2{};          // R2-add (under pair)
    role first = role::over;  // R1-add: role of the first new passage
    int sign = 1;         // R1-add: new sign; R2-add: sign of the first new crossing
    bool same_order = true;  // R2-add: under pair in the same order as the over pair
    int a = 0, b = 0, c = 0;  // crossings for removals and R3
};

namespace detail {

inline bool follows(const diagram& d, site x, site y) {
    if (x.component != y.component) return false;
    const auto len = d.components()[x.component].size();
    return (x.index + 1) % len == y.index;
}

inline bool adjacent(const diagram& d, site x, site y) { return follows(d, x, y) || follows(d, y, x); }

inline diagram remove_crossings(const diagram& d, std::vector<int> ids) {
    auto comps = d.components();
    for (auto& comp : comps)
        std::erase_if(comp, [&](const passage& p) { return std::find(ids.begin(), ids.end(), p.crossing) != ids.end(); });
    std::sort(ids.rbegin(), ids.rend());
    for (int id : ids) drop_crossing_id(comps, id);
    return diagram(std::move(comps));
}

inline void check_gap(const diagram& d, site g) {
    if (g.component >= d.component_count())
        throw diagram_error(diagram_errc::inapplicable_move, "gap names a missing component");
    const auto len = d.components()[g.component].size();
    if (g.index > len) throw diagram_error(diagram_errc::inapplicable_move, "gap index out of range");
}

struct r3_roles {
    int a, b, c;
    site top_a, top_b, mid_a, mid_c, bot_b, bot_c;
};

/// Classifies {x first, y second} on the top strand as an R3 site with third crossing c.
inline std::optional<r3_roles> r3_site(const diagram& d, int x, int y, int c) {
    if (x == y || x == c || y == c) return std::nullopt;
    if (!d.has_crossing(x) || !d.has_crossing(y) || !d.has_crossing(c)) return std::nullopt;
    const auto lx = d.locate(x), ly = d.locate(y), lc = d.locate(c);
    if (!follows(d, lx.over, ly.over)) return std::nullopt;
    if (d.components()[lx.over.component].size() < 3) return std::nullopt;
    for (int t : {1, -1}) {
        const int a = t > 0 ? x : y;
        const int b = t > 0 ? y : x;
        const auto la = d.locate(a), lb = d.locate(b);
        // middle: U a next to O c; bottom: U b next to U c
        if (!adjacent(d, la.under, lc.over) || !adjacent(d, lb.under, lc.under)) continue;
        if (d.components()[la.under.component].size() < 3 || d.components()[lb.under.component].size() < 3) continue;
        const int m = follows(d, la.under, lc.over) ? 1 : -1;
        const int w = follows(d, lb.under, lc.under) ? 1 : -1;
        const int chi = d.sign(a) * t * m;
        if (d.sign(b) != chi * t * w || d.sign(c) != chi * m * w) continue;
        return r3_roles{a, b, c, la.over, lb.over, la.under, lc.over, lb.under, lc.under};
    }
    return std::nullopt;
}

} // namespace detail

/// All removal or R3 moves available in d. Add moves have unbounded sites.
inline std::vector<move> candidate_moves(const diagram& d, move_kind kind) {
    std::vector<move> out;
    const int c = d.crossing_count();
    switch (kind) {
    case move_kind::r1_remove:
        for (int x = 1; x <= c; ++x) {
            const auto l = d.locate(x);
            if (detail::adjacent(d, l.over, l.under)) out.push_back(move{.kind = kind, .a = x});
        }
        break;
    case move_kind::r2_remove:
        for (int x = 1; x <= c; ++x)
            for (int y = x + 1; y <= c; ++y) {
                if (d.sign(x) == d.sign(y)) continue;
                const auto lx = d.locate(x), ly = d.locate(y);
                if (detail::adjacent(d, lx.over, ly.over) && detail::adjacent(d, lx.under, ly.under))
                    out.push_back(move{.kind = kind, .a = x, .b = y});
            }
        break;
    case move_kind::r3:
        for (const auto& comp : d.components()) {
            if (comp.size() < 3) continue;
            for (std::size_t i = 0; i < comp.size(); ++i) {
                const auto& p = comp[i];
                const auto& q = comp[(i + 1) % comp.size()];
                if (p.strand != role::over || q.strand != role::over) continue;
                for (int z = 1; z <= c; ++z)
                    if (auto r = detail::r3_site(d, p.crossing, q.crossing, z))
                        out.push_back(move{.kind = kind, .a = r->a, .b = r->b, .c = r->c});
            }
        }
        break;
    default:
        break;
    }
    return out;
}

inline diagram apply_move(const diagram& d, const move& m) {
    const int c = d.crossing_count();
    switch (m.kind) {
    case move_kind::r1_add: {
        detail::check_gap(d, m.gap);
        if (m.sign != 1 && m.sign != -1) throw diagram_error(diagram_errc::inapplicable_move, "sign must be +1 or -1");
        auto comps = d.components();
        auto& comp = comps[m.gap.component];
        const passage p1{c + 1, m.first, m.sign}, p2{c + 1, !m.first, m.sign};
        comp.insert(comp.begin() + static_cast<std::ptrdiff_t>(m.gap.index), {p1, p2});
        return diagram(std::move(comps));
    }
    case move_kind::r1_remove: {
        if (!d.has_crossing(m.a)) throw diagram_error(diagram_errc::inapplicable_move, "no such crossing");
        const auto l = d.locate(m.a);
        if (!detail::adjacent(d, l.over, l.under))
            throw diagram_error(diagram_errc::inapplicable_move, "crossing is not a kink");
        return detail::remove_crossings(d, {m.a});
    }
    case move_kind::r2_add: {
        detail::check_gap(d, m.gap);
        detail::check_gap(d, m.gap2);
        if (m.sign != 1 && m.sign != -1) throw diagram_error(diagram_errc::inapplicable_move, "sign must be +1 or -1");
        const int x = c + 1, y = c + 2;
        const std::vector<passage> overs{{x, role::over, m.sign}, {y, role::over, -m.sign}};
        const std::vector<passage> unders = m.same_order
                                                ? std::vector<passage>{{x, role::under, m.sign}, {y, role::under, -m.sign}}
                                                : std::vector<passage>{{y, role::under, -m.sign}, {x, role::under, m.sign}};
        auto comps = d.components();
        auto insert_at = [&](site g, const std::vector<passage>& ps) {
            auto& comp = comps[g.component];
            comp.insert(comp.begin() + static_cast<std::ptrdiff_t>(g.index), ps.begin(), ps.end());
        };
        if (m.gap == m.gap2) {
            auto both = overs;
            both.insert(both.end(), unders.begin(), unders.end());
            insert_at(m.gap, both);
        } else if (m.gap.component == m.gap2.component && m.gap.index < m.gap2.index) {
            insert_at(m.gap2, unders);
            insert_at(m.gap, overs);
        } else {
            insert_at(m.gap, overs);
            insert_at(m.gap2, unders);
        }
        return diagram(std::move(comps));
    }
    case move_kind::r2_remove: {
        if (!d.has_crossing(m.a) || !d.has_crossing(m.b) || m.a == m.b)
            throw diagram_error(diagram_errc::inapplicable_move, "R2 needs two distinct crossings");
        const auto la = d.locate(m.a), lb = d.locate(m.b);
        if (d.sign(m.a) == d.sign(m.b) || !detail::adjacent(d, la.over, lb.over) ||
            !detail::adjacent(d, la.under, lb.under))
            throw diagram_error(diagram_errc::inapplicable_move, "crossings do not form a bigon");
        return detail::remove_crossings(d, {m.a, m.b});
    }
    case move_kind::r3: {
        std::optional<detail::r3_roles> r;
        if (d.has_crossing(m.a) && d.has_crossing(m.b)) {
            const auto la = d.locate(m.a), lb = d.locate(m.b);
            r = detail::follows(d, la.over, lb.over) ? detail::r3_site(d, m.a, m.b, m.c)
                                                     : detail::r3_site(d, m.b, m.a, m.c);
        }
        if (!r) throw diagram_error(diagram_errc::inapplicable_move, "not an admissible R3 triangle");
        auto comps = d.components();
        auto swap_pair = [&](site x, site y) {
            std::swap(comps[x.component][x.index], comps[y.component][y.index]);
        };
        swap_pair(r->top_a, r->top_b);
        swap_pair(r->mid_a, r->mid_c);
        swap_pair(r->bot_b, r->bot_c);
        return diagram(std::move(comps));
    }
    }
    throw diagram_error(diagram_errc::inapplicable_move, "unknown move");
}

/// A random concrete move of the given kind, or nullopt if none applies.
template <typename Rng>
std::optional<move> random_move(const diagram& d, move_kind kind, Rng& rng) {
    auto pick = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    auto random_gap = [&]() -> std::optional<site> {
        if (d.component_count() == 0) return std::nullopt;
        const auto ci = pick(d.component_count());
        const auto len = d.components()[ci].size();
        return site{ci, len == 0 ? 0 : pick(len)};
    };
    switch (kind) {
    case move_kind::r1_add: {
        auto g = random_gap();
        if (!g) return std::nullopt;
        return move{.kind = kind, .gap = *g, .first = pick(2) ? role::over : role::under, .sign = pick(2) ? 1 : -1};
    }
    case move_kind::r2_add: {
        auto g1 = random_gap(), g2 = random_gap();
        if (!g1 || !g2) return std::nullopt;
        return move{.kind = kind, .gap = *g1, .gap2 = *g2, .sign = pick(2) ? 1 : -1, .same_order = pick(2) == 1};
    }
    default: {
        auto cands = candidate_moves(d, kind);
        if (cands.empty()) return std::nullopt;
        return cands[pick(cands.size())];
    }
    }
}

/// Applies a random move of `kind` drawn from `seed`.
inline diagram apply_move(const diagram& d, move_kind kind, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto m = random_move(d, kind, rng);
    if (!m) throw diagram_error(diagram_errc::inapplicable_move, std::string("no site for ") + to_string(kind));
    return apply_move(d, *m);
}

} // namespace vkb
