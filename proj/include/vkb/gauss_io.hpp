#pragma once

// Text formats for diagrams: signed Gauss codes and PD records.
// Grammars are in docs/formats.md.

#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vkb/diagram.hpp"

namespace vkb {

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

/// Replaces U+2212 MINUS SIGN with '-'.
inline std::string ascii_minus(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
            static_cast<unsigned char>(s[i + 1]) == 0x88 && static_cast<unsigned char>(s[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
        } else {
            out.push_back(s[i]);
        }
    }
    return out;
}

inline std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

inline component parse_component(const std::string& body) {
    component comp;
    if (body == ".") return comp;
    std::size_t i = 0;
    auto bad = [&](const std::string& why) {
        throw diagram_error(diagram_errc::malformed_token, why + " in \"" + body + "\"");
    };
    while (i < body.size()) {
        const char ch = body[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            ++i;
            continue;
        }
        if (ch != 'O' && ch != 'U' && ch != 'o' && ch != 'u') bad(std::string("unexpected '") + ch + "'");
        passage p;
        p.strand = (ch == 'O' || ch == 'o') ? role::over : role::under;
        ++i;
        std::size_t j = i;
        while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
        if (j == i) bad("missing crossing number");
        if (j - i > 6) bad("crossing number too large");
        p.crossing = std::stoi(body.substr(i, j - i));
        if (p.crossing < 1) bad("crossing numbers start at 1");
        if (j >= body.size() || (body[j] != '+' && body[j] != '-')) bad("missing sign");
        p.sign = body[j] == '+' ? 1 : -1;
        i = j + 1;
        comp.push_back(p);
    }
    if (comp.empty()) bad("empty component (use '.')");
    return comp;
}

/// Ids renumbered 1..c by first appearance, then validated.
inline diagram build_normalized(std::vector<component> comps) {
    std::map<int, int> relabel;
    std::map<int, int> overs, unders, signs;
    for (const auto& comp : comps)
        for (const auto& p : comp) {
            relabel.try_emplace(p.crossing, static_cast<int>(relabel.size()) + 1);
            auto& cnt = p.strand == role::over ? overs[p.crossing] : unders[p.crossing];
            ++cnt;
            auto [it, fresh] = signs.try_emplace(p.crossing, p.sign);
            if (!fresh && it->second != p.sign)
                throw diagram_error(diagram_errc::sign_mismatch,
                                    "crossing " + std::to_string(p.crossing) + " carries both signs");
        }
    for (const auto& [id, _] : relabel)
        if (overs[id] != 1 || unders[id] != 1)
            throw diagram_error(diagram_errc::dangling_crossing,
                                "crossing " + std::to_string(id) + " must appear once over and once under");
    for (auto& comp : comps)
        for (auto& p : comp) p.crossing = relabel[p.crossing];
    return diagram(std::move(comps));
}

} // namespace detail

/**
 * Parses one diagram: one component per line (or per ';'-separated field),
 * tokens O<k><s> / U<k><s>, '.' for a crossing-free component, '#' lines
 * and blank lines ignored.
 */
inline diagram parse_gauss(std::string_view text) {
    std::vector<component> comps;
    for (const auto& raw : detail::split_lines(detail::ascii_minus(text))) {
        const auto line = detail::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::size_t start = 0;
        while (start <= line.size()) {
            auto end = line.find(';', start);
            if (end == std::string::npos) end = line.size();
            const auto field = detail::trim(std::string_view(line).substr(start, end - start));
            if (!field.empty()) comps.push_back(detail::parse_component(field));
            start = end + 1;
        }
    }
    return detail::build_normalized(std::move(comps));
}

/// Several diagrams separated by blank lines.
inline std::vector<diagram> parse_gauss_file(std::string_view text) {
    std::vector<diagram> out;
    std::string block;
    bool has_content = false;
    auto flush = [&] {
        if (has_content) out.push_back(parse_gauss(block));
        block.clear();
        has_content = false;
    };
    for (const auto& raw : detail::split_lines(text)) {
        const auto line = detail::trim(raw);
        if (line.empty()) {
            flush();
            continue;
        }
        if (line[0] != '#') has_content = true;
        block += line;
        block += '\n';
    }
    flush();
    return out;
}

inline std::string serialize_component(const component& comp) {
    if (comp.empty()) return ".";
    std::string s;
    for (const auto& p : comp) {
        s += p.strand == role::over ? 'O' : 'U';
        s += std::to_string(p.crossing);
        s += p.sign > 0 ? '+' : '-';
    }
    return s;
}

/// One line per component.
inline std::string serialize(const diagram& d) {
    std::string s;
    for (const auto& comp : d.components()) {
        s += serialize_component(comp);
        s += '\n';
    }
    return s;
}

/// Single-line form with ';' between components.
inline std::string serialize_inline(const diagram& d) {
    std::string s;
    for (std::size_t i = 0; i < d.component_count(); ++i) {
        if (i) s += ';';
        s += serialize_component(d.components()[i]);
    }
    return s;
}

/**
 * Parses PD records: X[a,b,c,d]+ / X[a,b,c,d]- for classical crossings and
 * V[a,b,c,d] for virtual ones. Labels are listed counterclockwise starting
 * at the incoming under-strand; at a virtual record a-c and b-d pass
 * straight through. Virtual records do not produce passages.
 */
inline diagram parse_pd(std::string_view text_in) {
    const std::string text = detail::ascii_minus(text_in);
    struct record {
        bool classical = true;
        int sign = 1;
        std::array<long, 4> label{};
    };
    std::vector<record> recs;
    std::size_t i = 0;
    auto bad = [&](const std::string& why) { throw diagram_error(diagram_errc::malformed_token, why); };
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == ';') {
            ++i;
            continue;
        }
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (text.compare(i, 3, "PD[") == 0) {
            i += 3;
            continue;
        }
        if (ch == ']') {
            ++i;
            continue;
        }
        if (ch != 'X' && ch != 'V') bad(std::string("unexpected '") + ch + "' in PD text");
        record r;
        r.classical = ch == 'X';
        ++i;
        if (i >= text.size() || text[i] != '[') bad("expected '[' after record letter");
        ++i;
        for (int k = 0; k < 4; ++k) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            std::size_t j = i;
            if (j < text.size() && text[j] == '-') ++j;
            const std::size_t digits = j;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == digits || j - digits > 12) bad("bad edge label in PD record");
            r.label[static_cast<std::size_t>(k)] = std::stol(text.substr(i, j - i));
            i = j;
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            const char want = k == 3 ? ']' : ',';
            if (i >= text.size() || text[i] != want) bad(std::string("expected '") + want + "' in PD record");
            ++i;
        }
        if (r.classical) {
            if (i >= text.size() || (text[i] != '+' && text[i] != '-')) bad("classical PD record needs a sign");
            r.sign = text[i] == '+' ? 1 : -1;
            ++i;
        }
        recs.push_back(r);
    }

    using slot = std::pair<std::size_t, int>;
    std::map<long, std::vector<slot>> uses;
    for (std::size_t r = 0; r < recs.size(); ++r)
        for (int k = 0; k < 4; ++k) uses[recs[r].label[static_cast<std::size_t>(k)]].push_back({r, k});
    for (const auto& [lab, v] : uses)
        if (v.size() != 2)
            throw diagram_error(diagram_errc::bad_degree, "edge label " + std::to_string(lab) + " used " +
                                                              std::to_string(v.size()) + " times");
    auto other_end = [&](slot s) {
        const auto& v = uses[recs[s.first].label[static_cast<std::size_t>(s.second)]];
        return v[0] == s ? v[1] : v[0];
    };
    // Slot roles at a classical record.
    auto is_out = [&](slot s) {
        const auto& r = recs[s.first];
        if (s.second == 2) return true;
        if (s.second == 0) return false;
        return r.sign > 0 ? s.second == 1 : s.second == 3;
    };
    auto out_of = [&](slot in) -> slot {  // in-slot -> out-slot of the same strand
        if (in.second == 0) return {in.first, 2};
        return {in.first, in.second == 1 ? 3 : 1};
    };

    std::vector<std::array<bool, 4>> seen(recs.size(), {false, false, false, false});
    std::vector<component> comps;
    for (std::size_t r = 0; r < recs.size(); ++r) {
        if (!recs[r].classical) continue;
        for (int k : {2, recs[r].sign > 0 ? 1 : 3}) {
            const slot start{r, k};
            if (seen[r][static_cast<std::size_t>(k)]) continue;
            component comp;
            slot cur = start;
            seen[r][static_cast<std::size_t>(k)] = true;
            for (std::size_t guard = 0;; ++guard) {
                if (guard > 8 * recs.size() + 8) throw diagram_error(diagram_errc::open_strand, "strand does not close");
                slot nxt = other_end(cur);
                while (!recs[nxt.first].classical) {
                    seen[nxt.first][static_cast<std::size_t>(nxt.second)] = true;
                    const slot through{nxt.first, (nxt.second + 2) % 4};
                    seen[through.first][static_cast<std::size_t>(through.second)] = true;
                    nxt = other_end(through);
                    if (++guard > 8 * recs.size() + 8)
                        throw diagram_error(diagram_errc::open_strand, "strand does not close");
                }
                if (is_out(nxt))
                    throw diagram_error(diagram_errc::open_strand,
                                        "edge " + std::to_string(recs[cur.first].label[static_cast<std::size_t>(cur.second)]) +
                                            " joins two outgoing ends");
                seen[nxt.first][static_cast<std::size_t>(nxt.second)] = true;
                const auto& rec = recs[nxt.first];
                comp.push_back(passage{static_cast<int>(nxt.first) + 1,
                                       (nxt.second == 0) ? role::under : role::over, rec.sign});
                cur = out_of(nxt);
                if (cur == start) break;
                if (seen[cur.first][static_cast<std::size_t>(cur.second)])
                    throw diagram_error(diagram_errc::open_strand, "strand re-enters a traced arc");
                seen[cur.first][static_cast<std::size_t>(cur.second)] = true;
            }
            comps.push_back(std::move(comp));
        }
    }
    // Loops that meet only virtual records.
    for (std::size_t r = 0; r < recs.size(); ++r) {
        if (recs[r].classical) continue;
        for (int k = 0; k < 4; ++k) {
            if (seen[r][static_cast<std::size_t>(k)]) continue;
            const slot start{r, k};
            slot cur = start;
            for (;;) {
                seen[cur.first][static_cast<std::size_t>(cur.second)] = true;
                const slot through{cur.first, (cur.second + 2) % 4};
                seen[through.first][static_cast<std::size_t>(through.second)] = true;
                cur = other_end(through);
                if (cur == start) break;
                if (seen[cur.first][static_cast<std::size_t>(cur.second)])
                    throw diagram_error(diagram_errc::open_strand, "virtual loop does not close");
            }
            comps.emplace_back();
        }
    }
    return detail::build_normalized(std::move(comps));
}

/// PD records if the text contains any X[ or V[, Gauss code otherwise.
inline bool looks_like_pd(std::string_view text) {
    return text.find("X[") != std::string_view::npos || text.find("V[") != std::string_view::npos;
}

} // namespace vkb
