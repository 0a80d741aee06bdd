#pragma once

/**
 * @file laurent.hpp
 * @brief Exact Laurent polynomials in one variable A over the integers.
 *
 * Terms are stored as (exponent, coefficient) pairs sorted by exponent with
 * no zero coefficients, so two polynomials are equal iff their term vectors
 * are equal.
 */

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vkb {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

template <typename Coeff>
class basic_laurent {
public:
    using coefficient_type = Coeff;
    using term = std::pair<int, Coeff>;

    basic_laurent() = default;

    /// Constant polynomial.
    explicit basic_laurent(Coeff constant) {
        if (constant != 0) terms_.emplace_back(0, std::move(constant));
    }

    basic_laurent(std::initializer_list<term> terms) : terms_(terms) { normalize(); }

    static basic_laurent from_terms(std::vector<term> terms) {
        basic_laurent p;
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    static basic_laurent monomial(Coeff c, int exponent) {
        basic_laurent p;
        if (c != 0) p.terms_.emplace_back(exponent, std::move(c));
        return p;
    }

    static basic_laurent one() { return basic_laurent(Coeff(1)); }

    const std::vector<term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    int min_exponent() const {
        if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
        return terms_.front().first;
    }
    int max_exponent() const {
        if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
        return terms_.back().first;
    }

    Coeff coefficient(int exponent) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                                   [](const term& t, int e) { return t.first < e; });
        if (it != terms_.end() && it->first == exponent) return it->second;
        return Coeff(0);
    }

    /// Multiplication by A^k.
    basic_laurent shifted(int k) const {
        basic_laurent p = *this;
        for (auto& t : p.terms_) t.first += k;
        return p;
    }

    /// p(A^-1).
    basic_laurent mirrored() const {
        basic_laurent p;
        p.terms_.reserve(terms_.size());
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
        return p;
    }

    basic_laurent operator-() const {
        basic_laurent p = *this;
        for (auto& t : p.terms_) t.second = -t.second;
        return p;
    }

    basic_laurent& operator+=(const basic_laurent& q) { return *this = merge(*this, q, false); }
    basic_laurent& operator-=(const basic_laurent& q) { return *this = merge(*this, q, true); }
    basic_laurent& operator*=(const basic_laurent& q) { return *this = *this * q; }

    friend basic_laurent operator+(const basic_laurent& p, const basic_laurent& q) { return merge(p, q, false); }
    friend basic_laurent operator-(const basic_laurent& p, const basic_laurent& q) { return merge(p, q, true); }

    friend basic_laurent operator*(const basic_laurent& p, const basic_laurent& q) {
        if (p.is_zero() || q.is_zero()) return {};
        const int lo = p.terms_.front().first + q.terms_.front().first;
        const int hi = p.terms_.back().first + q.terms_.back().first;
        std::vector<Coeff> dense(static_cast<std::size_t>(hi - lo + 1));
        for (const auto& [ep, cp] : p.terms_)
            for (const auto& [eq, cq] : q.terms_) dense[static_cast<std::size_t>(ep + eq - lo)] += cp * cq;
        basic_laurent r;
        for (std::size_t i = 0; i < dense.size(); ++i)
            if (dense[i] != 0) r.terms_.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
        return r;
    }

    friend basic_laurent operator*(const Coeff& c, const basic_laurent& p) {
        if (c == 0) return {};
        basic_laurent r = p;
        for (auto& t : r.terms_) t.second *= c;
        return r;
    }

    friend bool operator==(const basic_laurent&, const basic_laurent&) = default;

    /// Sum of coefficients, i.e. the value at A = 1.
    Coeff evaluate_at_one() const {
        Coeff s = 0;
        for (const auto& t : terms_) s += t.second;
        return s;
    }

    std::set<int> exponent_set() const {
        std::set<int> s;
        for (const auto& t : terms_) s.insert(t.first);
        return s;
    }

private:
    std::vector<term> terms_;

    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const term& a, const term& b) { return a.first < b.first; });
        std::vector<term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const term& t) { return t.second == 0; });
        terms_ = std::move(out);
    }

    static basic_laurent merge(const basic_laurent& p, const basic_laurent& q, bool subtract) {
        basic_laurent r;
        r.terms_.reserve(p.terms_.size() + q.terms_.size());
        auto a = p.terms_.begin();
        auto b = q.terms_.begin();
        while (a != p.terms_.end() || b != q.terms_.end()) {
            if (b == q.terms_.end() || (a != p.terms_.end() && a->first < b->first)) {
                r.terms_.push_back(*a++);
            } else if (a == p.terms_.end() || b->first < a->first) {
                r.terms_.emplace_back(b->first, subtract ? Coeff(-b->second) : b->second);
                ++b;
            } else {
                Coeff c = subtract ? Coeff(a->second - b->second) : Coeff(a->second + b->second);
                if (c != 0) r.terms_.emplace_back(a->first, std::move(c));
                ++a;
                ++b;
            }
        }
        return r;
    }
};

using laurent_poly = basic_laurent<integer>;

/// (sign * A^base_exp)^k for any integer k.
inline laurent_poly monomial_pow(int sign, int base_exp, int k) {
    const bool negative = sign < 0 && (k % 2 != 0);
    return laurent_poly::monomial(negative ? integer(-1) : integer(1), base_exp * k);
}

/// The loop value -A^2 - A^-2.
inline laurent_poly loop_factor() { return laurent_poly{{-2, integer(-1)}, {2, integer(-1)}}; }

inline laurent_poly pow(const laurent_poly& p, unsigned k) {
    laurent_poly r = laurent_poly::one();
    for (unsigned i = 0; i < k; ++i) r *= p;
    return r;
}

inline integer evaluate_at_one(const laurent_poly& p) { return p.evaluate_at_one(); }
inline std::set<int> exponent_set(const laurent_poly& p) { return p.exponent_set(); }

/// Residue of the exponents modulo 4, when they share one.
enum class residue { r0 = 0, r1 = 1, r2 = 2, r3 = 3, mixed, empty };

inline int mod4(int e) { return ((e % 4) + 4) % 4; }

inline residue congruence_class_mod4(const laurent_poly& p) {
    if (p.is_zero()) return residue::empty;
    const int r = mod4(p.terms().front().first);
    for (const auto& t : p.terms())
        if (mod4(t.first) != r) return residue::mixed;
    return static_cast<residue>(r);
}

inline std::string to_string(residue r) {
    switch (r) {
    case residue::mixed: return "mixed";
    case residue::empty: return "empty";
    default: return std::to_string(static_cast<int>(r));
    }
}

/**
 * True iff p = A^a * sum_i c_i A^{4i} with c_i c_j >= 0 for i, j of equal
 * parity and c_i c_j <= 0 otherwise. a is the least exponent. Absent grid
 * points have c_i = 0 and impose nothing.
 */
inline bool is_alternating_form(const laurent_poly& p) {
    if (p.is_zero()) return true;
    const auto cls = congruence_class_mod4(p);
    if (cls == residue::mixed) return false;
    const int base = p.min_exponent();
    // All nonzero c_i must have sign (-1)^i * s for one fixed s.
    int expected = 0;
    for (const auto& [e, c] : p.terms()) {
        const int i = (e - base) / 4;
        const int s = (c > 0 ? 1 : -1) * (i % 2 == 0 ? 1 : -1);
        if (expected == 0)
            expected = s;
        else if (s != expected)
            return false;
    }
    return true;
}

inline std::string to_string(const laurent_poly& p, char var = 'A') {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool neg = c < 0;
        const integer mag = neg ? integer(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag;
        os << var;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

/**
 * Parses the text rendering produced by to_string. Also accepts implicit
 * multiplication ("3A^2"), spaces anywhere, and exponents with a sign.
 */
inline laurent_poly parse_laurent(std::string_view text, char var = 'A') {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    if (s == "0") return {};
    std::vector<laurent_poly::term> terms;
    std::size_t i = 0;
    auto fail = [&](const char* why) {
        throw std::invalid_argument(std::string("bad polynomial '") + std::string(text) + "': " + why);
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!terms.empty()) {
            fail("expected '+' or '-'");
        }
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        integer c = digits.empty() ? integer(1) : integer(digits);
        if (i < s.size() && s[i] == '*') {
            if (digits.empty()) fail("'*' without coefficient");
            ++i;
        }
        int e = 0;
        if (i < s.size() && s[i] == var) {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t j = i;
                if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
                const std::size_t k0 = j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == k0) fail("missing exponent");
                e = std::stoi(s.substr(i, j - i));
                i = j;
            }
        } else if (digits.empty()) {
            fail("expected coefficient or variable");
        }
        terms.emplace_back(e, sign < 0 ? integer(-c) : c);
    }
    return laurent_poly::from_terms(std::move(terms));
}

} // namespace vkb
