#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "vkb/gauss_io.hpp"
#include "vkb/skein.hpp"
#include "vkb/verify.hpp"

using namespace vkb;

namespace {

laurent_poly P(const char* s) { return parse_laurent(s); }

std::vector<diagram> small_diagrams() {
    auto ds = enumerate_all({.min_crossings = 1, .max_crossings = 4, .max_components = 1,
                             .dedupe = dedupe_mode::cyclic_relabel});
    const auto links = enumerate_all({.min_crossings = 1, .max_crossings = 3, .max_components = 2,
                                      .dedupe = dedupe_mode::cyclic_relabel});
    ds.insert(ds.end(), links.begin(), links.end());
    return ds;
}

oracle::poly monomial(int e, long long c) { return {{e, c}}; }

} // namespace

TEST(Skein, IdentityOnEnumeration) {
    int sites = 0, ell_nonzero = 0, knot_sites = 0;
    for (const auto& d : small_diagrams()) {
        for (int id = 1; id <= d.crossing_count(); ++id) {
            const auto r = skein_identity_check(d, id);
            ++sites;
            ell_nonzero += r.ell != 0;
            EXPECT_TRUE(r.ok()) << serialize_inline(d) << " at " << id;
            if (d.component_count() == 1) {
                ++knot_sites;
                EXPECT_TRUE(r.arcs_agree) << serialize_inline(d) << " at " << id;
            }
        }
    }
    EXPECT_GT(knot_sites, 1000);
    EXPECT_GT(ell_nonzero, 100);
    EXPECT_GT(sites, knot_sites);
}

TEST(Skein, IdentityAgainstOracleF) {
    // f = -A^(-2s) f0 - A^(-6 ell - 4s) finf, evaluated with the oracle state sum
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        const auto d = random_diagram(rng, 1 + trial % 8, 1 + trial % 2);
        const int id = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d.crossing_count()));
        const auto ctx = make_splice_context(d, id);
        const auto f = oracle::f_polynomial(d);
        const auto f0 = oracle::f_polynomial(splice_oriented(d, id));
        const auto finf = oracle::f_polynomial(splice_disoriented(d, id));
        const auto rhs = oracle::add(oracle::mul(monomial(-2 * ctx.sign, -1), f0),
                                     oracle::mul(monomial(-6 * ctx.ell - 4 * ctx.sign, -1), finf));
        EXPECT_EQ(f, rhs) << serialize_inline(d) << " at " << id;
    }
}

TEST(Skein, RequireIdentity) {
    EXPECT_NO_THROW(require_skein_identity(parse_gauss("O1-U2-O3-U1-O2-U3-")));
    EXPECT_NO_THROW(require_skein_identity(parse_gauss("O1-O2-U1-U2-")));
    EXPECT_NO_THROW(require_skein_identity(parse_gauss(".")));
}

TEST(Skein, VirtualTrefoilSite) {
    const auto r = skein_identity_check(parse_gauss("O1-O2-U1-U2-"), 1);
    EXPECT_EQ(r.sign, -1);
    EXPECT_NE(r.ell, 0);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.f, P("A^4 + A^6 - A^10"));
}

TEST(FiniteType, Coefficients) {
    const auto v = finite_type_coefficients(P("A^4 + A^12 - A^16"), 3);
    ASSERT_EQ(v.size(), 4U);
    EXPECT_EQ(v[0], rational(1));
    EXPECT_EQ(v[1], rational(0));
    EXPECT_EQ(v[2], rational(-48));
    EXPECT_EQ(v[3], rational(64 + 1728 - 4096, 6));
    EXPECT_EQ(finite_type_coefficients(laurent_poly::one(), 4), (std::vector<rational>{1, 0, 0, 0, 0}));
}

TEST(FiniteType, SeriesIsTaylorExpansionOfDifference) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = random_diagram(rng, 1 + trial % 6, 1 + trial % 2);
        const int id = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d.crossing_count()));
        const auto f0 = f_polynomial(splice_oriented(d, id));
        const auto finf = f_polynomial(splice_disoriented(d, id));
        for (int l = -3; l <= 3; ++l) {
            const auto series = switch_series_rhs(finite_type_coefficients(f0, 6), finite_type_coefficients(finf, 6), l, 6);
            EXPECT_EQ(series, finite_type_coefficients(switch_difference_rhs(l, f0, finf), 6));
        }
    }
}

TEST(FiniteType, DifferenceIdentityAndConvention) {
    int ell_nonzero = 0, negated_agree = 0;
    for (const auto& d : small_diagrams()) {
        for (int id = 1; id <= d.crossing_count(); ++id) {
            const auto r = finite_type_recursion_check(d, id, 5);
            EXPECT_TRUE(r.difference_identity_holds) << serialize_inline(d) << " at " << id;
            EXPECT_TRUE(r.all_as_defined()) << serialize_inline(d) << " at " << id;
            if (r.ell != 0) {
                ++ell_nonzero;
                negated_agree += r.all_negated();
                EXPECT_EQ(r.convention(), "ell");
            } else {
                EXPECT_EQ(r.convention(), "both");
            }
        }
    }
    EXPECT_GT(ell_nonzero, 100);
    EXPECT_EQ(negated_agree, 0);
}

TEST(FiniteType, DifferenceAgainstOracle) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = random_diagram(rng, 1 + trial % 7, 1 + trial % 2);
        const int id = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d.crossing_count()));
        const auto plus = d.sign(id) > 0 ? d : crossing_change(d, id);
        const auto minus = crossing_change(plus, id);
        const int ell = make_splice_context(d, id).ell;
        const auto lhs = oracle::add(oracle::f_polynomial(plus), oracle::mul(monomial(0, -1), oracle::f_polynomial(minus)));
        const auto f0 = oracle::f_polynomial(splice_oriented(d, id));
        const auto finf = oracle::f_polynomial(splice_disoriented(d, id));
        const oracle::poly a2{{2, 1}, {-2, -1}};
        const oracle::poly a4{{4 - 6 * ell, 1}, {-4 - 6 * ell, -1}};
        EXPECT_EQ(lhs, oracle::add(oracle::mul(a2, f0), oracle::mul(a4, finf))) << serialize_inline(d) << " at " << id;
    }
}
