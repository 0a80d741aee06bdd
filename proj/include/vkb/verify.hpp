#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive enumeration of small signed Gauss codes and the
 * property harness run over them.
 *
 * Without dedupe the stream holds every code whose crossing ids are numbered
 * by first appearance, components being ordered and read from a fixed start.
 * For c crossings on n components there are
 *
 *   C(2c+n-1, n-1) * (2c-1)!! * 4^c
 *
 * such codes (component lengths, pairings, roles, signs). With dedupe only
 * the lexicographically least member of each orbit under rotation of the
 * components, permutation of the components and relabeling is kept.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "vkb/ald.hpp"
#include "vkb/bracket.hpp"
#include "vkb/diagram.hpp"
#include "vkb/gauss_io.hpp"
#include "vkb/moves.hpp"
#include "vkb/skein.hpp"

namespace vkb {

inline constexpr int exhaustive_crossing_limit = 6;
inline constexpr int enumeration_component_limit = 4;

enum class dedupe_mode { none, cyclic_relabel };
enum class enum_filter { any, colorable, alternating };

inline const char* to_string(dedupe_mode m) { return m == dedupe_mode::none ? "none" : "cyclic-relabel"; }

inline const char* to_string(enum_filter f) {
    switch (f) {
    case enum_filter::any: return "any";
    case enum_filter::colorable: return "colorable";
    case enum_filter::alternating: return "alternating";
    }
    return "?";
}

struct enum_spec {
    int min_crossings = 0;
    int max_crossings = 4;
    int max_components = 1;  // 1 means knots only
    dedupe_mode dedupe = dedupe_mode::none;
    enum_filter filter = enum_filter::any;
};

inline void validate(const enum_spec& s) {
    if (s.min_crossings < 0 || s.min_crossings > s.max_crossings || s.max_components < 1)
        throw std::invalid_argument("enumeration spec is empty or negative");
    if (s.max_crossings > exhaustive_crossing_limit)
        throw diagram_error(diagram_errc::spec_too_large, "exhaustive enumeration is limited to " +
                                                              std::to_string(exhaustive_crossing_limit) + " crossings");
    if (s.max_components > enumeration_component_limit)
        throw diagram_error(diagram_errc::spec_too_large, "exhaustive enumeration is limited to " +
                                                              std::to_string(enumeration_component_limit) + " components");
}

namespace detail {

inline std::vector<int> arrangement_key(const diagram& d, const std::vector<std::size_t>& order,
                                        const std::vector<std::size_t>& rot) {
    std::vector<int> key;
    key.reserve(order.size() + 3 * d.passage_count());
    std::vector<int> label(static_cast<std::size_t>(d.crossing_count()) + 1, 0);
    int next = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& comp = d.components()[order[k]];
        key.push_back(static_cast<int>(comp.size()));
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const auto& p = comp[(rot[k] + i) % comp.size()];
            auto& l = label[static_cast<std::size_t>(p.crossing)];
            if (l == 0) l = ++next;
            key.push_back(l);
            key.push_back(p.strand == role::over ? 0 : 1);
            key.push_back(p.sign);
        }
    }
    return key;
}

inline diagram arrange(const diagram& d, const std::vector<std::size_t>& order, const std::vector<std::size_t>& rot) {
    std::vector<component> comps;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& comp = d.components()[order[k]];
        component c;
        for (std::size_t i = 0; i < comp.size(); ++i) c.push_back(comp[(rot[k] + i) % comp.size()]);
        comps.push_back(std::move(c));
    }
    return diagram(std::move(comps)).normalized();
}

} // namespace detail

/// Least member of the orbit under rotation, component permutation and relabeling.
inline diagram canonical_form(const diagram& d) {
    const auto n = d.component_count();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::vector<int> best;
    std::vector<std::size_t> best_order, best_rot;
    do {
        std::vector<std::size_t> rot(n, 0);
        for (;;) {
            auto key = detail::arrangement_key(d, order, rot);
            if (best.empty() || key < best) {
                best = std::move(key);
                best_order = order;
                best_rot = rot;
            }
            std::size_t k = 0;
            for (; k < n; ++k) {
                const auto len = d.components()[order[k]].size();
                if (++rot[k] < std::max<std::size_t>(len, 1)) break;
                rot[k] = 0;
            }
            if (k == n) break;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    if (n == 0) return d;
    return detail::arrange(d, best_order, best_rot);
}

namespace detail {

template <typename Emit>
class enumerator {
public:
    enumerator(const enum_spec& spec, Emit& emit) : spec_(spec), emit_(emit) {}

    void run() {
        for (int c = spec_.min_crossings; c <= spec_.max_crossings && !stopped_; ++c)
            for (int n = 1; n <= spec_.max_components && !stopped_; ++n) {
                c_ = c;
                lengths_.assign(static_cast<std::size_t>(n), 0);
                compose(0, 2 * c);
            }
    }

private:
    void compose(std::size_t k, int left) {
        if (stopped_) return;
        if (k + 1 == lengths_.size()) {
            lengths_[k] = left;
            labels_.assign(static_cast<std::size_t>(2 * c_), 0);
            open_flag_.assign(static_cast<std::size_t>(c_) + 1, false);
            pair_up(0, 0, 0);
            return;
        }
        for (int len = 0; len <= left && !stopped_; ++len) {
            lengths_[k] = len;
            compose(k + 1, left - len);
        }
    }

    // Fills labels_[pos..] with ids numbered by first appearance.
    void pair_up(std::size_t pos, int opened, int open_count) {
        if (stopped_) return;
        if (pos == labels_.size()) {
            assign_roles();
            return;
        }
        if (opened < c_) {
            labels_[pos] = opened + 1;
            open_flag_[static_cast<std::size_t>(opened + 1)] = true;
            pair_up(pos + 1, opened + 1, open_count + 1);
            open_flag_[static_cast<std::size_t>(opened + 1)] = false;
        }
        for (int id = 1; id <= opened && !stopped_; ++id) {
            if (!open_flag_[static_cast<std::size_t>(id)]) continue;
            labels_[pos] = id;
            open_flag_[static_cast<std::size_t>(id)] = false;
            pair_up(pos + 1, opened, open_count - 1);
            open_flag_[static_cast<std::size_t>(id)] = true;
        }
    }

    void assign_roles() {
        const auto len = labels_.size();
        std::vector<role> roles(len);
        if (spec_.filter == enum_filter::alternating) {
            const auto n = lengths_.size();
            for (std::uint32_t start = 0; start < (1U << n) && !stopped_; ++start) {
                bool skip = false, ok = true;
                std::size_t pos = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    const auto l = static_cast<std::size_t>(lengths_[k]);
                    if (l % 2 != 0) ok = false;
                    // empty components carry no role choice: count them once
                    if (l == 0 && ((start >> k) & 1U)) skip = true;
                    for (std::size_t i = 0; i < l; ++i)
                        roles[pos + i] = ((i + ((start >> k) & 1U)) % 2 == 0) ? role::over : role::under;
                    pos += l;
                }
                if (skip || !ok) continue;
                std::vector<int> overs(static_cast<std::size_t>(c_) + 1, 0);
                for (std::size_t i = 0; i < len; ++i)
                    if (roles[i] == role::over) ++overs[static_cast<std::size_t>(labels_[i])];
                if (std::all_of(overs.begin() + 1, overs.end(), [](int o) { return o == 1; })) assign_signs(roles);
            }
            return;
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c_) && !stopped_; ++mask) {
            std::vector<bool> seen(static_cast<std::size_t>(c_) + 1, false);
            for (std::size_t i = 0; i < len; ++i) {
                const auto id = static_cast<std::size_t>(labels_[i]);
                const bool first_over = ((mask >> (id - 1)) & 1U) == 0;
                roles[i] = (seen[id] ? !first_over : first_over) ? role::over : role::under;
                seen[id] = true;
            }
            assign_signs(roles);
        }
    }

    void assign_signs(const std::vector<role>& roles) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c_) && !stopped_; ++mask) {
            std::vector<component> comps;
            std::size_t pos = 0;
            for (int l : lengths_) {
                component comp;
                for (int i = 0; i < l; ++i, ++pos) {
                    const int id = labels_[pos];
                    comp.push_back({id, roles[pos], ((mask >> (id - 1)) & 1U) ? -1 : 1});
                }
                comps.push_back(std::move(comp));
            }
            diagram d(std::move(comps));
            if (spec_.filter == enum_filter::colorable && !checkerboard_colorable(d)) continue;
            if (spec_.dedupe == dedupe_mode::cyclic_relabel && !(canonical_form(d) == d)) continue;
            if (!emit_(d)) stopped_ = true;
        }
    }

    const enum_spec& spec_;
    Emit& emit_;
    bool stopped_ = false;
    int c_ = 0;
    std::vector<int> lengths_;
    std::vector<int> labels_;
    std::vector<bool> open_flag_;
};

} // namespace detail

/**
 * Calls emit(const diagram&) for every code in the spec, by increasing
 * crossing count, then component count. emit returns false to stop early.
 */
template <typename Emit>
void enumerate(const enum_spec& spec, Emit&& emit) {
    validate(spec);
    detail::enumerator<std::remove_reference_t<Emit>> e(spec, emit);
    e.run();
}

inline std::vector<diagram> enumerate_all(const enum_spec& spec) {
    std::vector<diagram> out;
    enumerate(spec, [&out](const diagram& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

/// Uniformly shuffled passages dealt onto n components; ids renumbered.
template <typename Rng>
diagram random_diagram(Rng& rng, int crossings, int components = 1, bool allow_empty = false) {
    if (components < 1) throw std::invalid_argument("need at least one component");
    std::vector<passage> tokens;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int id = 1; id <= crossings; ++id) {
        const int s = coin(rng) ? 1 : -1;
        tokens.push_back({id, role::over, s});
        tokens.push_back({id, role::under, s});
    }
    const auto n = static_cast<std::size_t>(components);
    const bool must_fill = !allow_empty && tokens.size() >= n;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::shuffle(tokens.begin(), tokens.end(), rng);
    std::vector<component> comps(n);
    for (std::size_t i = 0; i < tokens.size(); ++i) comps[must_fill && i < n ? i : pick(rng)].push_back(tokens[i]);
    return diagram(std::move(comps)).normalized();
}

struct verify_options {
    bool deep = false;      // splice recursion, indices, toggles, induced colorings, series
    int series_order = 5;
    int max_crossings = default_max_crossings;
};

struct verification_record {
    diagram d;
    std::size_t components = 0;
    int crossings = 0;
    int writhe = 0;
    int genus = 0;
    bool colorable = false;
    bool alternating = false;
    bool alternatable = false;  // some set of crossing changes makes it alternating
    laurent_poly f;
    residue congruence = residue::empty;

    bool congruence_ok = false;   // colorable implies exponents in 4Z (n odd) or 4Z+2 (n even)
    bool alternation_ok = false;  // colorable iff alternatable
    bool f_at_one_ok = false;     // f(1) = (-2)^(n-1)

    bool deep = false;
    bool coloring_ok = true;  // solver witness (and alternating coloring) re-checked
    bool state_sum_ok = true;
    bool skein_ok = true;
    bool index_ok = true;
    bool toggles_ok = true;
    bool induced_ok = true;
    bool difference_ok = true;
    bool series_ok = true;  // series with ell as defined, through series_order
    int index_count = 0;
    int skein_sites = 0;
    int positive_sites = 0;
    int negative_sites = 0;
    int ell_nonzero_sites = 0;
    int series_negated_agree_ell_nonzero = 0;

    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        auto need = [&out](bool ok, const char* name) {
            if (!ok) out.emplace_back(name);
        };
        need(congruence_ok, "congruence");
        need(alternation_ok, "alternation");
        need(f_at_one_ok, "f_at_one");
        need(coloring_ok, "coloring");
        need(state_sum_ok, "state_sum");
        need(skein_ok, "skein");
        need(index_ok, "index");
        need(toggles_ok, "toggles");
        need(induced_ok, "induced_coloring");
        need(difference_ok, "difference");
        need(series_ok, "series");
        return out;
    }
    bool ok() const { return failures().empty(); }
};

inline bool congruence_matches(residue r, std::size_t components) {
    return r == (components % 2 == 1 ? residue::r0 : residue::r2);
}

inline verification_record verify_diagram(const diagram& d, const verify_options& opt = {}) {
    verification_record r;
    const bracket_options bopt{opt.max_crossings, 1};
    r.d = d;
    r.components = d.component_count();
    r.crossings = d.crossing_count();
    r.writhe = writhe(d);
    r.genus = surface_genus(d);
    const auto col = checkerboard_colorable(d);
    r.colorable = col.has_value();
    r.alternating = is_alternating(d);
    r.alternatable = make_alternating(d).has_value();
    r.f = f_polynomial(d, bopt);
    r.congruence = congruence_class_mod4(r.f);
    r.congruence_ok = !r.colorable || congruence_matches(r.congruence, r.components);
    r.alternation_ok = r.colorable == r.alternatable;
    integer expected = 1;
    for (std::size_t i = 1; i < r.components; ++i) expected *= -2;
    r.f_at_one_ok = r.components > 0 && evaluate_at_one(r.f) == expected;
    if (!opt.deep) return r;

    r.deep = true;
    const auto g = build_ald(d);
    const auto rs = boundary_regions(g);
    if (col) r.coloring_ok = is_valid_coloring(rs, *col);
    if (r.alternating) r.coloring_ok = r.coloring_ok && is_valid_coloring(rs, coloring_from_alternating(d));

    const state_evaluator ev(d);
    laurent_poly by_terms;
    std::set<int> indices;
    const int c = r.crossings;
    std::vector<int> loops(state_count(d));
    for (std::uint64_t m = 0; m < loops.size(); ++m) {
        state s;
        s.choices = choices_from_mask(c, m);
        s.loop_count = loops[m] = ev.loops(m);
        s.splice_exponent = c - 2 * std::popcount(m);
        const auto term = state_term(s);
        by_terms += term;
        indices.insert(state_index(s));
        for (const auto& [e, coeff] : term.terms())
            if (mod4(e) != state_index(s)) r.state_sum_ok = false;
        if (col) {
            try {
                const auto sc = induced_state_coloring(d, *col, s.choices);
                if (static_cast<int>(sc.loops.size()) != s.loop_count) r.induced_ok = false;
            } catch (const color_conflict&) {
                r.induced_ok = false;
            }
        }
    }
    r.state_sum_ok = r.state_sum_ok && by_terms == bracket(d, opt.max_crossings);
    r.index_count = static_cast<int>(indices.size());
    if (col) {
        r.index_ok = indices.size() == 1;
        for (std::uint64_t m = 0; m < loops.size(); ++m)
            for (int v = 0; v < c; ++v) {
                const int delta = loops[m ^ (std::uint64_t{1} << v)] - loops[m];
                if (delta != 1 && delta != -1) r.toggles_ok = false;
            }
    }

    for (int id = 1; id <= c; ++id) {
        const auto sk = skein_identity_check(d, id, bopt);
        ++r.skein_sites;
        ++(sk.sign > 0 ? r.positive_sites : r.negative_sites);
        if (sk.ell != 0) ++r.ell_nonzero_sites;
        if (!sk.ok() || (r.components == 1 && !sk.arcs_agree)) r.skein_ok = false;
        const auto ft = finite_type_recursion_check(d, id, opt.series_order, bopt);
        if (!ft.difference_identity_holds) r.difference_ok = false;
        if (!ft.all_as_defined()) r.series_ok = false;
        if (ft.ell != 0 && ft.all_negated()) ++r.series_negated_agree_ell_nonzero;
    }
    return r;
}

struct failure_record {
    std::string code;
    std::vector<std::string> checks;
};

struct sweep_options {
    unsigned workers = 1;
    verify_options verify{};
    std::size_t batch = 4096;
    std::size_t max_failures_kept = 50;
    std::size_t max_witnesses = 5;
};

struct sweep_summary {
    enum_spec spec{};
    bool deep = false;
    std::uint64_t diagrams = 0;
    std::uint64_t colorable = 0;
    std::uint64_t alternating = 0;
    std::uint64_t alternatable = 0;
    std::uint64_t classical = 0;  // genus zero
    std::map<std::string, std::uint64_t> by_congruence;
    std::map<std::size_t, std::uint64_t> by_components;
    std::uint64_t failure_count = 0;
    std::vector<failure_record> failures;
    std::vector<std::string> mixed_witnesses;  // non-colorable codes whose f has mixed residues
    std::uint64_t skein_sites = 0;
    std::uint64_t positive_sites = 0;
    std::uint64_t negative_sites = 0;
    std::uint64_t ell_nonzero_sites = 0;
    std::uint64_t series_negated_agree_ell_nonzero = 0;
    int max_index_count_noncolorable = 0;
    double seconds = 0;

    bool ok() const { return failure_count == 0; }
};

inline void accumulate(sweep_summary& s, const verification_record& r, const sweep_options& opt) {
    ++s.diagrams;
    s.colorable += r.colorable;
    s.alternating += r.alternating;
    s.alternatable += r.alternatable;
    s.classical += r.genus == 0;
    ++s.by_congruence[to_string(r.congruence)];
    ++s.by_components[r.components];
    s.skein_sites += static_cast<std::uint64_t>(r.skein_sites);
    s.positive_sites += static_cast<std::uint64_t>(r.positive_sites);
    s.negative_sites += static_cast<std::uint64_t>(r.negative_sites);
    s.ell_nonzero_sites += static_cast<std::uint64_t>(r.ell_nonzero_sites);
    s.series_negated_agree_ell_nonzero += static_cast<std::uint64_t>(r.series_negated_agree_ell_nonzero);
    if (!r.colorable) s.max_index_count_noncolorable = std::max(s.max_index_count_noncolorable, r.index_count);
    if (!r.colorable && r.congruence == residue::mixed && s.mixed_witnesses.size() < opt.max_witnesses)
        s.mixed_witnesses.push_back(serialize_inline(r.d));
    if (const auto f = r.failures(); !f.empty()) {
        ++s.failure_count;
        if (s.failures.size() < opt.max_failures_kept) s.failures.push_back({serialize_inline(r.d), f});
    }
}

/// Verifies a list of diagrams on `workers` threads; records come back in input order.
inline std::vector<verification_record> verify_all(const std::vector<diagram>& ds, unsigned workers,
                                                   const verify_options& opt = {}) {
    std::vector<verification_record> out(ds.size());
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(ds.size(), 1))));
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) out[i] = verify_diagram(ds[i], opt);
    };
    if (workers == 1) {
        work(0, ds.size());
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(work, ds.size() * w / workers, ds.size() * (w + 1) / workers);
    for (auto& t : pool) t.join();
    return out;
}

/// Runs verify_diagram over the enumeration. Counts and lists do not depend on the worker count.
inline sweep_summary sweep(const enum_spec& spec, const sweep_options& opt = {}) {
    const auto start = std::chrono::steady_clock::now();
    sweep_summary s;
    s.spec = spec;
    s.deep = opt.verify.deep;
    std::vector<diagram> batch;
    auto flush = [&] {
        for (const auto& r : verify_all(batch, opt.workers, opt.verify)) accumulate(s, r, opt);
        batch.clear();
    };
    enumerate(spec, [&](const diagram& d) {
        batch.push_back(d);
        if (batch.size() >= opt.batch) flush();
        return true;
    });
    flush();
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

struct witness_result {
    std::optional<diagram> witness;
    laurent_poly f;
    enum_filter stage = enum_filter::alternating;  // stream the witness came from
    std::uint64_t scanned = 0;
    std::uint64_t classical_scanned = 0;        // genus-zero knots seen
    std::uint64_t classical_counterexamples = 0;  // of those, f not of alternating form
};

/**
 * Searches alternating codes, then colorable ones, for a diagram of positive
 * genus whose f is not of alternating form. Classical knots (genus zero, one
 * component) in the scanned stream are tallied on the side; no counterexample
 * is expected among them.
 */
inline witness_result find_nonalternating_form_witness(enum_spec spec, const bracket_options& opt = {}) {
    witness_result out;
    for (auto stage : {enum_filter::alternating, enum_filter::colorable}) {
        spec.filter = stage;
        enumerate(spec, [&](const diagram& d) {
            ++out.scanned;
            const auto f = f_polynomial(d, opt);
            const bool good = is_alternating_form(f);
            const bool classical = surface_genus(d) == 0;
            if (classical && d.component_count() == 1) {
                ++out.classical_scanned;
                out.classical_counterexamples += !good;
            }
            if (!good && !classical) {
                out.witness = d;
                out.f = f;
                out.stage = stage;
                return false;
            }
            return true;
        });
        if (out.witness) break;
    }
    return out;
}

struct fuzz_options {
    std::uint64_t seed = 1;
    std::size_t trials = 1000;
    int max_moves = 8;
    int max_start_crossings = 8;
    int max_components = 2;
    int crossing_cap = 12;  // above this only removals and R3 are drawn
};

struct fuzz_report {
    std::size_t trials = 0;
    std::size_t moves = 0;
    std::array<std::size_t, 5> by_kind{};
    std::size_t f_mismatches = 0;
    std::size_t congruence_violations = 0;
    std::size_t r1_writhe_tracked = 0;
    std::size_t r1_writhe_mismatches = 0;
    std::vector<std::string> failures;  // "start -> end" codes

    bool ok() const { return f_mismatches == 0 && congruence_violations == 0 && r1_writhe_mismatches == 0; }
};

/// Random diagrams pushed through random move sequences; f must not change.
inline fuzz_report fuzz_invariance(const fuzz_options& opt) {
    fuzz_report rep;
    constexpr std::array<move_kind, 5> kinds{move_kind::r1_add, move_kind::r1_remove, move_kind::r2_add,
                                             move_kind::r2_remove, move_kind::r3};
    constexpr std::array<move_kind, 3> shrinking{move_kind::r1_remove, move_kind::r2_remove, move_kind::r3};
    for (std::size_t t = 0; t < opt.trials; ++t) {
        std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                          static_cast<std::uint32_t>(t)};
        std::mt19937_64 rng(seq);
        const int c = std::uniform_int_distribution<int>(0, opt.max_start_crossings)(rng);
        const int n = std::uniform_int_distribution<int>(1, opt.max_components)(rng);
        const auto start = random_diagram(rng, c, n);
        const auto f0 = f_polynomial(start);
        auto d = start;
        const int steps = std::uniform_int_distribution<int>(1, std::max(1, opt.max_moves))(rng);
        ++rep.trials;
        for (int step = 0; step < steps; ++step) {
            std::optional<move> m;
            for (int attempt = 0; attempt < 8 && !m; ++attempt) {
                const auto kind = d.crossing_count() >= opt.crossing_cap
                                      ? shrinking[std::uniform_int_distribution<std::size_t>(0, 2)(rng)]
                                      : kinds[std::uniform_int_distribution<std::size_t>(0, 4)(rng)];
                m = random_move(d, kind, rng);
            }
            if (!m) continue;
            const int w_before = writhe(d);
            int expected_delta = 0;
            if (m->kind == move_kind::r1_add) expected_delta = m->sign;
            if (m->kind == move_kind::r1_remove) expected_delta = -d.sign(m->a);
            const auto next = apply_move(d, *m);
            ++rep.moves;
            ++rep.by_kind[static_cast<std::size_t>(m->kind)];
            if (m->kind == move_kind::r1_add || m->kind == move_kind::r1_remove) {
                ++rep.r1_writhe_tracked;
                if (writhe(next) - w_before != expected_delta) ++rep.r1_writhe_mismatches;
            }
            const auto f = f_polynomial(next);
            if (f != f0) {
                ++rep.f_mismatches;
                rep.failures.push_back(serialize_inline(start) + " -> " + serialize_inline(next));
            }
            if (checkerboard_colorable(next) && !congruence_matches(congruence_class_mod4(f), next.component_count()))
                ++rep.congruence_violations;
            d = next;
        }
    }
    return rep;
}

} // namespace vkb
