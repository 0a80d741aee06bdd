#pragma once

// JSON renderings of polynomials, colorings and reports (nlohmann::json).
// A polynomial is an array of [exponent, coefficient] pairs sorted by
// exponent; a coefficient outside the int64 range is written as a string.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "vkb/ald.hpp"
#include "vkb/bracket.hpp"
#include "vkb/gauss_io.hpp"
#include "vkb/laurent.hpp"
#include "vkb/skein.hpp"
#include "vkb/verify.hpp"

namespace vkb {

using json = nlohmann::json;

inline json to_json(const integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

inline json to_json(const rational& q) { return json(q.str()); }

inline json to_json(const laurent_poly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back(json::array({e, to_json(c)}));
    return arr;
}

inline laurent_poly laurent_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
    std::vector<std::pair<int, integer>> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
            throw std::invalid_argument("polynomial term must be [exponent, coefficient]");
        const int e = t[0].get<int>();
        if (t[1].is_number_integer())
            terms.emplace_back(e, integer(t[1].get<std::int64_t>()));
        else if (t[1].is_string())
            terms.emplace_back(e, integer(t[1].get<std::string>()));
        else
            throw std::invalid_argument("coefficient must be an integer or a decimal string");
    }
    return laurent_poly::from_terms(std::move(terms));
}

/// Regions as cyclic (edge, side) lists with their colors.
inline json coloring_to_json(const region_set& rs, const coloring& col) {
    json regions = json::array();
    for (std::size_t r = 0; r < rs.regions.size(); ++r) {
        json walk = json::array();
        for (const auto& es : rs.regions[r]) walk.push_back(json::array({es.edge, es.side == 0 ? "left" : "right"}));
        regions.push_back({{"region", r},
                           {"color", col.region_color[r] == color::black ? "black" : "white"},
                           {"boundary", walk}});
    }
    return regions;
}

inline json to_json(const skein_report& r) {
    return {{"crossing", r.crossing}, {"sign", r.sign},      {"k", r.k},
            {"ell", r.ell},           {"ell_second", r.ell_second},
            {"f", to_json(r.f)},      {"f0", to_json(r.f0)}, {"finf", to_json(r.finf)},
            {"finf_second", to_json(r.finf_second)},          {"rhs", to_json(r.rhs)},
            {"holds", r.holds},       {"holds_second", r.holds_second},
            {"writhe_ok", r.writhe_ok}, {"arcs_agree", r.arcs_agree}};
}

inline json to_json(const finite_type_report& r) {
    json v = json::array(), a = json::array(), b = json::array();
    for (const auto& q : r.v_switch) v.push_back(to_json(q));
    for (const auto& q : r.rhs_as_defined) a.push_back(to_json(q));
    for (const auto& q : r.rhs_negated) b.push_back(to_json(q));
    return {{"crossing", r.crossing},
            {"ell", r.ell},
            {"order", r.order},
            {"difference_identity_holds", r.difference_identity_holds},
            {"v_switch", v},
            {"rhs_ell", a},
            {"rhs_minus_ell", b},
            {"agree_ell", r.all_as_defined()},
            {"agree_minus_ell", r.all_negated()},
            {"convention", r.convention()}};
}

inline json to_json(const verification_record& r) {
    json j{{"code", serialize_inline(r.d)},
           {"components", r.components},
           {"crossings", r.crossings},
           {"writhe", r.writhe},
           {"genus", r.genus},
           {"colorable", r.colorable},
           {"alternating", r.alternating},
           {"alternatable", r.alternatable},
           {"f", to_json(r.f)},
           {"congruence", to_string(r.congruence)},
           {"congruence_ok", r.congruence_ok},
           {"alternation_ok", r.alternation_ok},
           {"f_at_one_ok", r.f_at_one_ok},
           {"ok", r.ok()}};
    if (r.deep) {
        j["deep"] = {{"coloring_ok", r.coloring_ok},     {"state_sum_ok", r.state_sum_ok},
                     {"skein_ok", r.skein_ok},           {"index_ok", r.index_ok},
                     {"toggles_ok", r.toggles_ok},       {"induced_ok", r.induced_ok},
                     {"difference_ok", r.difference_ok}, {"series_ok", r.series_ok},
                     {"index_count", r.index_count},     {"skein_sites", r.skein_sites},
                     {"ell_nonzero_sites", r.ell_nonzero_sites}};
    }
    j["failures"] = r.failures();
    return j;
}

inline json to_json(const enum_spec& s) {
    return {{"min_crossings", s.min_crossings},
            {"max_crossings", s.max_crossings},
            {"max_components", s.max_components},
            {"dedupe", to_string(s.dedupe)},
            {"filter", to_string(s.filter)}};
}

inline json to_json(const sweep_summary& s) {
    json failures = json::array();
    for (const auto& f : s.failures) failures.push_back({{"code", f.code}, {"checks", f.checks}});
    json by_n = json::object();
    for (const auto& [n, count] : s.by_components) by_n[std::to_string(n)] = count;
    return {{"spec", to_json(s.spec)},
            {"deep", s.deep},
            {"diagrams", s.diagrams},
            {"colorable", s.colorable},
            {"alternating", s.alternating},
            {"alternatable", s.alternatable},
            {"classical", s.classical},
            {"by_congruence", s.by_congruence},
            {"by_components", by_n},
            {"failure_count", s.failure_count},
            {"failures", failures},
            {"mixed_witnesses", s.mixed_witnesses},
            {"skein_sites", s.skein_sites},
            {"positive_sites", s.positive_sites},
            {"negative_sites", s.negative_sites},
            {"ell_nonzero_sites", s.ell_nonzero_sites},
            {"series_minus_ell_agreements_at_nonzero_ell", s.series_negated_agree_ell_nonzero},
            {"max_index_count_noncolorable", s.max_index_count_noncolorable},
            {"seconds", s.seconds},
            {"ok", s.ok()}};
}

inline json to_json(const witness_result& w) {
    json j{{"found", w.witness.has_value()},
           {"scanned", w.scanned},
           {"classical_scanned", w.classical_scanned},
           {"classical_counterexamples", w.classical_counterexamples}};
    if (w.witness) {
        j["code"] = serialize_inline(*w.witness);
        j["f"] = to_json(w.f);
        j["f_text"] = to_string(w.f);
        j["stream"] = to_string(w.stage);
        j["genus"] = surface_genus(*w.witness);
    }
    return j;
}

inline json to_json(const fuzz_report& r) {
    json kinds = json::object();
    for (std::size_t k = 0; k < r.by_kind.size(); ++k) kinds[to_string(static_cast<move_kind>(k))] = r.by_kind[k];
    return {{"trials", r.trials},
            {"moves", r.moves},
            {"by_kind", kinds},
            {"f_mismatches", r.f_mismatches},
            {"congruence_violations", r.congruence_violations},
            {"r1_writhe_tracked", r.r1_writhe_tracked},
            {"r1_writhe_mismatches", r.r1_writhe_mismatches},
            {"failures", r.failures},
            {"ok", r.ok()}};
}

} // namespace vkb
