#pragma once

/**
 * @file diagram.hpp
 * @brief Virtual link diagrams as signed Gauss codes.
 *
 * A diagram is a list of oriented components, each a cyclic sequence of
 * passages through classical crossings. Virtual crossings are not stored:
 * the signed Gauss code already determines the diagram up to purely virtual
 * moves.
 *
 * Sign convention: a crossing is positive when the under-strand passes from
 * right to left as seen travelling along the over-strand.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vkb {

enum class diagram_errc {
    malformed_token,
    dangling_crossing,
    sign_mismatch,
    open_strand,
    bad_degree,
    unknown_crossing,
    inapplicable_move,
    too_many_crossings,
    not_alternating,
    spec_too_large,
};

inline const char* to_string(diagram_errc e) {
    switch (e) {
    case diagram_errc::malformed_token: return "MalformedToken";
    case diagram_errc::dangling_crossing: return "DanglingCrossing";
    case diagram_errc::sign_mismatch: return "SignMismatch";
    case diagram_errc::open_strand: return "OpenStrand";
    case diagram_errc::bad_degree: return "BadDegree";
    case diagram_errc::unknown_crossing: return "UnknownCrossing";
    case diagram_errc::inapplicable_move: return "InapplicableMove";
    case diagram_errc::too_many_crossings: return "TooManyCrossings";
    case diagram_errc::not_alternating: return "NotAlternating";
    case diagram_errc::spec_too_large: return "SpecTooLarge";
    }
    return "Unknown";
}

class diagram_error : public std::runtime_error {
public:
    diagram_error(diagram_errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    diagram_errc code() const noexcept { return code_; }

private:
    diagram_errc code_;
};

enum class role : std::uint8_t { over = 0, under = 1 };

constexpr role operator!(role r) noexcept { return r == role::over ? role::under : role::over; }

struct passage {
    int crossing = 0;  // 1-based
    role strand = role::over;
    int sign = 1;  // +1 or -1, identical at both passages of a crossing

    friend bool operator==(const passage&, const passage&) = default;
};

/// Position of a passage: component index and offset within it.
struct site {
    std::size_t component = 0;
    std::size_t index = 0;
    friend bool operator==(const site&, const site&) = default;
};

using component = std::vector<passage>;

class diagram {
public:
    diagram() = default;

    /// Validates the two-passage invariant. Ids must already be 1..c.
    explicit diagram(std::vector<component> components) : components_(std::move(components)) { validate(); }

    /// n crossing-free loops.
    static diagram unlink(std::size_t n) { return diagram(std::vector<component>(n)); }

    const std::vector<component>& components() const noexcept { return components_; }
    std::size_t component_count() const noexcept { return components_.size(); }
    int crossing_count() const noexcept { return crossings_; }
    std::size_t passage_count() const noexcept { return 2 * static_cast<std::size_t>(crossings_); }

    bool has_crossing(int id) const noexcept { return id >= 1 && id <= crossings_; }

    int sign(int id) const { return at(locate(id).over).sign; }

    struct crossing_sites {
        site over;
        site under;
    };

    crossing_sites locate(int id) const {
        require(id);
        return sites_[static_cast<std::size_t>(id - 1)];
    }

    const passage& at(site s) const { return components_[s.component][s.index]; }

    /// Copy with crossing ids renumbered by first appearance.
    diagram normalized() const {
        std::vector<int> map(static_cast<std::size_t>(crossings_) + 1, 0);
        int next = 0;
        auto comps = components_;
        for (auto& comp : comps)
            for (auto& p : comp) {
                auto& m = map[static_cast<std::size_t>(p.crossing)];
                if (m == 0) m = ++next;
                p.crossing = m;
            }
        return diagram(std::move(comps));
    }

    friend bool operator==(const diagram& a, const diagram& b) { return a.components_ == b.components_; }

private:
    std::vector<component> components_;
    int crossings_ = 0;
    std::vector<crossing_sites> sites_;

    void require(int id) const {
        if (!has_crossing(id))
            throw diagram_error(diagram_errc::unknown_crossing, "crossing " + std::to_string(id) + " not in diagram");
    }

    void validate() {
        std::size_t total = 0;
        for (const auto& comp : components_) total += comp.size();
        if (total % 2 != 0)
            throw diagram_error(diagram_errc::dangling_crossing, "odd number of passages");
        crossings_ = static_cast<int>(total / 2);
        const auto c = static_cast<std::size_t>(crossings_);
        std::vector<int> seen_over(c, 0), seen_under(c, 0), sign(c, 0);
        sites_.assign(c, {});
        for (std::size_t ci = 0; ci < components_.size(); ++ci) {
            for (std::size_t i = 0; i < components_[ci].size(); ++i) {
                const auto& p = components_[ci][i];
                if (p.crossing < 1 || p.crossing > crossings_)
                    throw diagram_error(diagram_errc::dangling_crossing,
                                        "crossing id " + std::to_string(p.crossing) + " outside 1.." +
                                            std::to_string(crossings_));
                if (p.sign != 1 && p.sign != -1)
                    throw diagram_error(diagram_errc::malformed_token, "sign must be +1 or -1");
                const auto k = static_cast<std::size_t>(p.crossing - 1);
                auto& seen = p.strand == role::over ? seen_over[k] : seen_under[k];
                if (++seen > 1)
                    throw diagram_error(diagram_errc::dangling_crossing,
                                        "crossing " + std::to_string(p.crossing) + " has two passages of one role");
                if (sign[k] != 0 && sign[k] != p.sign)
                    throw diagram_error(diagram_errc::sign_mismatch,
                                        "crossing " + std::to_string(p.crossing) + " carries both signs");
                sign[k] = p.sign;
                (p.strand == role::over ? sites_[k].over : sites_[k].under) = site{ci, i};
            }
        }
        for (std::size_t k = 0; k < c; ++k)
            if (seen_over[k] != 1 || seen_under[k] != 1)
                throw diagram_error(diagram_errc::dangling_crossing,
                                    "crossing " + std::to_string(k + 1) + " does not appear once over and once under");
    }
};

inline int writhe(const diagram& d) {
    int w = 0;
    for (const auto& comp : d.components())
        for (const auto& p : comp)
            if (p.strand == role::over) w += p.sign;
    return w;
}

/// Swaps the roles at both passages of `id` and negates its sign.
inline diagram crossing_change(const diagram& d, int id) {
    const auto loc = d.locate(id);
    auto comps = d.components();
    for (site s : {loc.over, loc.under}) {
        auto& p = comps[s.component][s.index];
        p.strand = !p.strand;
        p.sign = -p.sign;
    }
    return diagram(std::move(comps));
}

/// Reflection of the plane: roles kept, signs negated. f becomes f(A^-1).
inline diagram mirror(const diagram& d) {
    auto comps = d.components();
    for (auto& comp : comps)
        for (auto& p : comp) p.sign = -p.sign;
    return diagram(std::move(comps));
}

namespace detail {

/// Removes crossing `gone` from the id space: ids above it shift down.
inline void drop_crossing_id(std::vector<component>& comps, int gone) {
    for (auto& comp : comps)
        for (auto& p : comp)
            if (p.crossing > gone) --p.crossing;
}

/// Passages strictly after `from` up to (not including) the next passage of
/// crossing `id`, walking forward along the component.
inline std::vector<passage> open_arc(const diagram& d, site from, int id, site* end = nullptr) {
    const auto& comp = d.components()[from.component];
    std::vector<passage> out;
    std::size_t i = (from.index + 1) % comp.size();
    while (comp[i].crossing != id) {
        out.push_back(comp[i]);
        i = (i + 1) % comp.size();
    }
    if (end) *end = site{from.component, i};
    return out;
}

struct cut_arcs {
    std::vector<passage> first;   // begins at the outgoing under-strand
    std::vector<passage> second;  // begins at the outgoing over-strand
};

inline cut_arcs cut_at(const diagram& d, int id) {
    const auto loc = d.locate(id);
    return {open_arc(d, loc.under, id), open_arc(d, loc.over, id)};
}

} // namespace detail

/// Smoothing of `id` that respects orientation. Component count changes by one.
inline diagram splice_oriented(const diagram& d, int id) {
    const auto loc = d.locate(id);
    auto arcs = detail::cut_at(d, id);
    std::vector<component> comps;
    for (std::size_t i = 0; i < d.component_count(); ++i)
        if (i != loc.over.component && i != loc.under.component) comps.push_back(d.components()[i]);
    if (loc.over.component == loc.under.component) {
        comps.push_back(std::move(arcs.first));
        comps.push_back(std::move(arcs.second));
    } else {
        // over-in joins under-out and under-in joins over-out: one loop
        component merged = std::move(arcs.second);
        merged.insert(merged.end(), arcs.first.begin(), arcs.first.end());
        comps.push_back(std::move(merged));
    }
    detail::drop_crossing_id(comps, id);
    return diagram(std::move(comps));
}

enum class arc_choice { first, second };

namespace detail {

/// Number of passages of each crossing lying on the chosen arc.
inline std::vector<int> arc_multiplicity(const diagram& d, const std::vector<passage>& arc) {
    std::vector<int> m(static_cast<std::size_t>(d.crossing_count()) + 1, 0);
    for (const auto& p : arc) ++m[static_cast<std::size_t>(p.crossing)];
    return m;
}

} // namespace detail

/**
 * Smoothing of `id` against orientation. The result is re-oriented by
 * reversing the chosen arc; crossings met once by that arc flip sign.
 * The "first" arc starts at the outgoing under-strand of the crossing.
 */
inline diagram splice_disoriented(const diagram& d, int id, arc_choice reversed = arc_choice::first) {
    const auto loc = d.locate(id);
    auto arcs = detail::cut_at(d, id);
    auto& rev = reversed == arc_choice::first ? arcs.first : arcs.second;
    auto& keep = reversed == arc_choice::first ? arcs.second : arcs.first;
    const auto mult = detail::arc_multiplicity(d, rev);
    std::reverse(rev.begin(), rev.end());
    component loop = std::move(keep);
    loop.insert(loop.end(), rev.begin(), rev.end());
    std::vector<component> comps;
    for (std::size_t i = 0; i < d.component_count(); ++i)
        if (i != loc.over.component && i != loc.under.component) comps.push_back(d.components()[i]);
    comps.push_back(std::move(loop));
    for (auto& comp : comps)
        for (auto& p : comp)
            if (mult[static_cast<std::size_t>(p.crossing)] == 1) p.sign = -p.sign;
    detail::drop_crossing_id(comps, id);
    return diagram(std::move(comps));
}

/// Partition of the other crossings relative to one arc cut at a crossing.
struct splice_context {
    int crossing = 0;
    int sign = 0;
    int k = 0;     // signed count over `same`
    int ell = 0;   // signed count over `mixed`
    std::vector<int> same;   // both strands on the arc, or both off it
    std::vector<int> mixed;  // exactly one strand on the arc
};

inline splice_context make_splice_context(const diagram& d, int id, arc_choice reversed = arc_choice::first) {
    auto arcs = detail::cut_at(d, id);
    const auto mult = detail::arc_multiplicity(d, reversed == arc_choice::first ? arcs.first : arcs.second);
    splice_context ctx;
    ctx.crossing = id;
    ctx.sign = d.sign(id);
    for (int q = 1; q <= d.crossing_count(); ++q) {
        if (q == id) continue;
        if (mult[static_cast<std::size_t>(q)] == 1) {
            ctx.mixed.push_back(q);
            ctx.ell += d.sign(q);
        } else {
            ctx.same.push_back(q);
            ctx.k += d.sign(q);
        }
    }
    return ctx;
}

/// Every component reversed. Each crossing keeps its sign.
inline diagram reversed(const diagram& d) {
    auto comps = d.components();
    for (auto& comp : comps) std::reverse(comp.begin(), comp.end());
    return diagram(std::move(comps));
}

} // namespace vkb
