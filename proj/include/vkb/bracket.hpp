#pragma once

/**
 * @file bracket.hpp
 * @brief Kauffman bracket by state sum, the f-polynomial, and state indices.
 *
 * A state assigns an A- or B-splice to every crossing. The bracket is
 *
 *   <D> = sum_S A^{a(S) - b(S)} (-A^2 - A^-2)^{loops(S) - 1}
 *
 * and f(D) = (-A^3)^{-writhe(D)} <D>. States are enumerated as a binary
 * counter over crossing ids: bit i set means crossing i+1 takes the B-splice.
 * Evaluation only tallies (exponent, loop count) pairs in 64-bit counters;
 * the polynomial is expanded once at the end, so any partition of the
 * state range gives bit-identical results.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <thread>
#include <vector>

#include "vkb/ald.hpp"
#include "vkb/diagram.hpp"
#include "vkb/laurent.hpp"

namespace vkb {

inline constexpr int default_max_crossings = 24;

struct bracket_options {
    int max_crossings = default_max_crossings;
    unsigned workers = 1;
};

struct state {
    std::vector<splice> choices;
    int loop_count = 0;       // number of loops after splicing
    int splice_exponent = 0;  // #A - #B
};

/// Precomputed slot/arc tables for fast loop counting.
class state_evaluator {
public:
    explicit state_evaluator(const diagram& d)
        : crossings_(d.crossing_count()), free_loops_(0), components_(static_cast<int>(d.component_count())) {
        const auto g = build_ald(d);
        arcs_ = static_cast<int>(g.arcs.size());
        free_loops_ = static_cast<int>(g.free_loop_components.size());
        slot_arc_.resize(g.slot_end.size());
        for (std::size_t v = 0; v < g.slot_end.size(); ++v)
            for (std::size_t s = 0; s < 4; ++s) slot_arc_[v][s] = g.slot_end[v][s].arc;
    }

    int crossings() const noexcept { return crossings_; }
    int components() const noexcept { return components_; }
    int max_loops() const noexcept { return crossings_ + components_; }

    /// Loop count of the state encoded by `mask` (bit set = B-splice).
    int loops(std::uint64_t mask) const {
        std::array<int, 128> small{};
        std::vector<int> big;
        int* parent = small.data();
        if (arcs_ > static_cast<int>(small.size())) {
            big.resize(static_cast<std::size_t>(arcs_));
            parent = big.data();
        }
        for (int i = 0; i < arcs_; ++i) parent[i] = i;
        int classes = arcs_;
        auto find = [parent](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) {
                parent[a] = b;
                --classes;
            }
        };
        for (int v = 0; v < crossings_; ++v) {
            const auto& s = slot_arc_[static_cast<std::size_t>(v)];
            if ((mask >> v) & 1U) {
                unite(s[0], s[1]);
                unite(s[2], s[3]);
            } else {
                unite(s[0], s[3]);
                unite(s[1], s[2]);
            }
        }
        return classes + free_loops_;
    }

    /// counts[(exponent + c) * (max_loops + 1) + loops] over masks in [lo, hi).
    std::vector<std::uint64_t> tally(std::uint64_t lo, std::uint64_t hi) const {
        const auto width = static_cast<std::size_t>(max_loops() + 1);
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(2 * crossings_ + 1) * width, 0);
        for (std::uint64_t m = lo; m < hi; ++m) {
            const int exponent = crossings_ - 2 * std::popcount(m);
            const int l = loops(m);
            ++counts[static_cast<std::size_t>(exponent + crossings_) * width + static_cast<std::size_t>(l)];
        }
        return counts;
    }

    laurent_poly expand(const std::vector<std::uint64_t>& counts) const {
        const auto width = static_cast<std::size_t>(max_loops() + 1);
        std::vector<laurent_poly> delta_pow{laurent_poly::one()};
        const auto delta = loop_factor();
        while (delta_pow.size() < width) delta_pow.push_back(delta_pow.back() * delta);
        laurent_poly sum;
        for (std::size_t e = 0; e < static_cast<std::size_t>(2 * crossings_ + 1); ++e)
            for (std::size_t l = 1; l < width; ++l) {
                const auto n = counts[e * width + l];
                if (n == 0) continue;
                sum += integer(n) * delta_pow[l - 1].shifted(static_cast<int>(e) - crossings_);
            }
        return sum;
    }

private:
    int crossings_;
    int free_loops_;
    int components_;
    int arcs_ = 0;
    std::vector<std::array<int, 4>> slot_arc_;
};

inline void check_crossing_limit(const diagram& d, int max_crossings) {
    if (d.crossing_count() > max_crossings || d.crossing_count() > 62)
        throw diagram_error(diagram_errc::too_many_crossings,
                            std::to_string(d.crossing_count()) + " crossings exceeds the limit of " +
                                std::to_string(std::min(max_crossings, 62)));
}

inline std::uint64_t state_count(const diagram& d) { return std::uint64_t{1} << d.crossing_count(); }

inline std::vector<splice> choices_from_mask(int crossings, std::uint64_t mask) {
    std::vector<splice> ch(static_cast<std::size_t>(crossings));
    for (int v = 0; v < crossings; ++v) ch[static_cast<std::size_t>(v)] = ((mask >> v) & 1U) ? splice::b : splice::a;
    return ch;
}

inline std::uint64_t mask_from_choices(const std::vector<splice>& choices) {
    std::uint64_t m = 0;
    for (std::size_t v = 0; v < choices.size(); ++v)
        if (choices[v] == splice::b) m |= std::uint64_t{1} << v;
    return m;
}

inline state splice_state(const diagram& d, const std::vector<splice>& choices) {
    if (choices.size() != static_cast<std::size_t>(d.crossing_count()))
        throw std::invalid_argument("IncompleteChoices: need one splice per crossing, got " +
                                    std::to_string(choices.size()) + " for " + std::to_string(d.crossing_count()));
    state s;
    s.choices = choices;
    const auto a = static_cast<int>(std::count(choices.begin(), choices.end(), splice::a));
    s.splice_exponent = a - (d.crossing_count() - a);
    s.loop_count = state_evaluator(d).loops(mask_from_choices(choices));
    return s;
}

/// Range [0, 2^c) cut into `workers` contiguous pieces; tallies summed in order.
inline laurent_poly bracket_parallel(const diagram& d, unsigned workers, int max_crossings = default_max_crossings) {
    check_crossing_limit(d, max_crossings);
    const state_evaluator ev(d);
    const std::uint64_t total = state_count(d);
    workers = std::max(1U, workers);
    if (workers > total) workers = static_cast<unsigned>(total);
    std::vector<std::vector<std::uint64_t>> parts(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = total * w / workers;
        const std::uint64_t hi = total * (w + 1) / workers;
        if (workers == 1)
            parts[w] = ev.tally(lo, hi);
        else
            pool.emplace_back([&parts, &ev, w, lo, hi] { parts[w] = ev.tally(lo, hi); });
    }
    for (auto& t : pool) t.join();
    auto counts = std::move(parts[0]);
    for (unsigned w = 1; w < workers; ++w)
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += parts[w][i];
    return ev.expand(counts);
}

inline laurent_poly bracket(const diagram& d, int max_crossings = default_max_crossings) {
    return bracket_parallel(d, 1, max_crossings);
}

inline laurent_poly normalization(const diagram& d) { return monomial_pow(-1, 3, -writhe(d)); }

inline laurent_poly f_polynomial(const diagram& d, const bracket_options& opt = {}) {
    return normalization(d) * bracket_parallel(d, opt.workers, opt.max_crossings);
}

/// Contribution A^e (-A^2-A^-2)^(loops-1) of one state.
inline laurent_poly state_term(const state& s) {
    return pow(loop_factor(), static_cast<unsigned>(s.loop_count - 1)).shifted(s.splice_exponent);
}

/// Common residue mod 4 of the exponents of state_term(s).
inline int state_index(int splice_exponent, int loop_count) { return mod4(splice_exponent + 2 * loop_count - 2); }
inline int state_index(const state& s) { return state_index(s.splice_exponent, s.loop_count); }

inline std::set<int> index_spectrum(const diagram& d, int max_crossings = default_max_crossings) {
    check_crossing_limit(d, max_crossings);
    const state_evaluator ev(d);
    std::set<int> out;
    const int c = d.crossing_count();
    for (std::uint64_t m = 0; m < state_count(d); ++m)
        out.insert(state_index(c - 2 * std::popcount(m), ev.loops(m)));
    return out;
}

/// Changes in loop count seen when one splice of one state is switched.
inline std::set<int> toggle_deltas(const diagram& d, int max_crossings = default_max_crossings) {
    check_crossing_limit(d, max_crossings);
    const state_evaluator ev(d);
    const int c = d.crossing_count();
    std::vector<int> loops(state_count(d));
    for (std::uint64_t m = 0; m < loops.size(); ++m) loops[m] = ev.loops(m);
    std::set<int> out;
    for (std::uint64_t m = 0; m < loops.size(); ++m)
        for (int v = 0; v < c; ++v) {
            const auto m2 = m ^ (std::uint64_t{1} << v);
            if (m2 > m) out.insert(loops[m2] - loops[m]);
        }
    return out;
}

} // namespace vkb
