#pragma once

// Splice recursion for the f-polynomial at one crossing, and the
// finite-type (A = e^x) expansion of the crossing-switch difference.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "vkb/bracket.hpp"
#include "vkb/diagram.hpp"
#include "vkb/laurent.hpp"

namespace vkb {

/**
 * With f0 the f-polynomial of the oriented smoothing and finf that of the
 * other smoothing (re-oriented along one arc), at a crossing of sign s:
 *
 *   f = -A^{-2s} f0 - A^{-6 ell} A^{-4s} finf
 *
 * where ell is the signed count of crossings met exactly once by the
 * reversed arc.
 */
struct skein_report {
    int crossing = 0;
    int sign = 0;
    int k = 0;
    int ell = 0;         // for the first arc
    int ell_second = 0;  // for the second arc
    laurent_poly f, f0, finf, finf_second, rhs;
    bool holds = false;         // with the first arc reversed
    bool holds_second = false;  // with the second arc reversed
    bool writhe_ok = false;     // writhe(D) = k + ell + s and writhe(D_inf) = k - ell, for both arcs
    bool arcs_agree = false;    // finf equal for both arcs (guaranteed only when D is a knot)

    bool ok() const { return holds && holds_second && writhe_ok; }
};

inline laurent_poly skein_rhs(int sign, int ell, const laurent_poly& f0, const laurent_poly& finf) {
    const laurent_poly t0 = -(f0.shifted(-2 * sign));
    const laurent_poly tinf = -(monomial_pow(-1, 3, -2 * ell) * finf.shifted(-4 * sign));
    return t0 + tinf;
}

inline skein_report skein_identity_check(const diagram& d, int id, const bracket_options& opt = {}) {
    skein_report r;
    const auto ctx = make_splice_context(d, id, arc_choice::first);
    const auto ctx2 = make_splice_context(d, id, arc_choice::second);
    const auto d0 = splice_oriented(d, id);
    const auto dinf = splice_disoriented(d, id, arc_choice::first);
    const auto dinf2 = splice_disoriented(d, id, arc_choice::second);
    r.crossing = id;
    r.sign = ctx.sign;
    r.k = ctx.k;
    r.ell = ctx.ell;
    r.ell_second = ctx2.ell;
    r.f = f_polynomial(d, opt);
    r.f0 = f_polynomial(d0, opt);
    r.finf = f_polynomial(dinf, opt);
    r.finf_second = f_polynomial(dinf2, opt);
    r.arcs_agree = r.finf == r.finf_second;
    r.writhe_ok = writhe(d) == ctx.k + ctx.ell + ctx.sign && writhe(dinf) == ctx.k - ctx.ell &&
                  writhe(d) == ctx2.k + ctx2.ell + ctx2.sign && writhe(dinf2) == ctx2.k - ctx2.ell;
    r.rhs = skein_rhs(ctx.sign, ctx.ell, r.f0, r.finf);
    r.holds = r.f == r.rhs;
    r.holds_second = r.f == skein_rhs(ctx2.sign, ctx2.ell, r.f0, r.finf_second);
    return r;
}

class identity_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Throws identity_violation when the recursion fails at any crossing.
inline void require_skein_identity(const diagram& d, const bracket_options& opt = {}) {
    for (int id = 1; id <= d.crossing_count(); ++id) {
        const auto r = skein_identity_check(d, id, opt);
        if (!r.ok())
            throw identity_violation("splice recursion fails at crossing " + std::to_string(id));
    }
}

/// Taylor coefficients of p(e^x): v_m = sum_j c_j j^m / m!.
inline std::vector<rational> finite_type_coefficients(const laurent_poly& p, int order) {
    std::vector<rational> v;
    integer factorial = 1;
    for (int m = 0; m <= order; ++m) {
        if (m > 0) factorial *= m;
        integer num = 0;
        for (const auto& [e, c] : p.terms()) num += c * boost::multiprecision::pow(integer(e), static_cast<unsigned>(m));
        v.emplace_back(num, factorial);
    }
    return v;
}

/**
 * Recursion for v_n of the crossing-switch difference f(D+) - f(D-):
 *
 *   sum_{k<n} 2^{n-k}/(n-k)! [ (1-(-1)^{n-k}) v_k(f0)
 *                             + ((2-3l)^{n-k} - (-2-3l)^{n-k}) v_k(finf) ]
 *
 * evaluated for l = ell and for l = -ell.
 */
inline std::vector<rational> switch_series_rhs(const std::vector<rational>& v0, const std::vector<rational>& vinf, int l,
                                               int order) {
    std::vector<rational> out;
    for (int n = 0; n <= order; ++n) {
        rational sum = 0;
        for (int k = 0; k < n; ++k) {
            const int j = n - k;
            integer fact = 1;
            for (int t = 2; t <= j; ++t) fact *= t;
            const rational scale(boost::multiprecision::pow(integer(2), static_cast<unsigned>(j)), fact);
            const integer odd = (j % 2 == 0) ? integer(0) : integer(2);
            const integer mixed = boost::multiprecision::pow(integer(2 - 3 * l), static_cast<unsigned>(j)) -
                                  boost::multiprecision::pow(integer(-2 - 3 * l), static_cast<unsigned>(j));
            sum += scale * (rational(odd) * v0[static_cast<std::size_t>(k)] +
                            rational(mixed) * vinf[static_cast<std::size_t>(k)]);
        }
        out.push_back(sum);
    }
    return out;
}

/// f(D+) - f(D-) = (A^2 - A^-2) f0 + A^{-6 ell} (A^4 - A^-4) finf.
inline laurent_poly switch_difference_rhs(int ell, const laurent_poly& f0, const laurent_poly& finf) {
    const laurent_poly a2 = laurent_poly{{2, integer(1)}, {-2, integer(-1)}};
    const laurent_poly a4 = laurent_poly{{4 - 6 * ell, integer(1)}, {-4 - 6 * ell, integer(-1)}};
    return a2 * f0 + a4 * finf;
}

struct finite_type_report {
    int crossing = 0;
    int ell = 0;
    int order = 0;
    laurent_poly f_plus, f_minus, f0, finf;
    bool difference_identity_holds = false;
    std::vector<rational> v_switch;        // v_n of f(D+) - f(D-)
    std::vector<rational> rhs_as_defined;  // series with l = ell
    std::vector<rational> rhs_negated;     // series with l = -ell
    std::vector<bool> agree_as_defined;
    std::vector<bool> agree_negated;

    bool all_as_defined() const { return std::find(agree_as_defined.begin(), agree_as_defined.end(), false) == agree_as_defined.end(); }
    bool all_negated() const { return std::find(agree_negated.begin(), agree_negated.end(), false) == agree_negated.end(); }

    /// Which reading of ell reproduces the series through `order`.
    std::string convention() const {
        if (all_as_defined() && all_negated()) return "both";
        if (all_as_defined()) return "ell";
        if (all_negated()) return "-ell";
        return "neither";
    }
};

inline finite_type_report finite_type_recursion_check(const diagram& d, int id, int order, const bracket_options& opt = {}) {
    finite_type_report r;
    r.crossing = id;
    r.order = order;
    const diagram plus = d.sign(id) > 0 ? d : crossing_change(d, id);
    const diagram minus = d.sign(id) > 0 ? crossing_change(d, id) : d;
    r.ell = make_splice_context(d, id).ell;
    r.f_plus = f_polynomial(plus, opt);
    r.f_minus = f_polynomial(minus, opt);
    r.f0 = f_polynomial(splice_oriented(d, id), opt);
    r.finf = f_polynomial(splice_disoriented(d, id), opt);
    r.difference_identity_holds = (r.f_plus - r.f_minus) == switch_difference_rhs(r.ell, r.f0, r.finf);
    r.v_switch = finite_type_coefficients(r.f_plus - r.f_minus, order);
    const auto v0 = finite_type_coefficients(r.f0, order);
    const auto vinf = finite_type_coefficients(r.finf, order);
    r.rhs_as_defined = switch_series_rhs(v0, vinf, r.ell, order);
    r.rhs_negated = switch_series_rhs(v0, vinf, -r.ell, order);
    for (int n = 0; n <= order; ++n) {
        const auto i = static_cast<std::size_t>(n);
        r.agree_as_defined.push_back(r.v_switch[i] == r.rhs_as_defined[i]);
        r.agree_negated.push_back(r.v_switch[i] == r.rhs_negated[i]);
    }
    return r;
}

} // namespace vkb
