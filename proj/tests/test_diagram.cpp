#include <random>
#include <string>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "vkb/diagram.hpp"
#include "vkb/gauss_io.hpp"
#include "vkb/verify.hpp"

using namespace vkb;

namespace {

const char* const right_trefoil = "O1+U2+O3+U1+O2+U3+";
const char* const left_trefoil = "O1-U2-O3-U1-O2-U3-";
const char* const virtual_trefoil = "O1+O2+U1+U2+";

diagram G(const char* s) { return parse_gauss(s); }

diagram_errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const diagram_error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no diagram_error thrown";
    return diagram_errc::malformed_token;
}

} // namespace

TEST(GaussParse, Trefoil) {
    const auto d = G(right_trefoil);
    EXPECT_EQ(d.crossing_count(), 3);
    EXPECT_EQ(d.component_count(), 1U);
    EXPECT_EQ(writhe(d), 3);
}

TEST(GaussParse, VirtualTrefoil) {
    const auto d = G(virtual_trefoil);
    EXPECT_EQ(d.crossing_count(), 2);
    EXPECT_EQ(d.component_count(), 1U);
    EXPECT_EQ(writhe(d), 2);
}

TEST(GaussParse, Errors) {
    EXPECT_EQ(error_of([] { G("O1+U2+O1-"); }), diagram_errc::sign_mismatch);
    EXPECT_EQ(error_of([] { G("O1+U1-"); }), diagram_errc::sign_mismatch);
    EXPECT_EQ(error_of([] { G("O1+O1+"); }), diagram_errc::dangling_crossing);
    EXPECT_EQ(error_of([] { G("O1+U2+"); }), diagram_errc::dangling_crossing);
    EXPECT_EQ(error_of([] { G("O1U1"); }), diagram_errc::malformed_token);
    EXPECT_EQ(error_of([] { G("X1+U1+"); }), diagram_errc::malformed_token);
    EXPECT_EQ(error_of([] { G("O+U1+"); }), diagram_errc::malformed_token);
}

TEST(GaussParse, RelabelsByFirstAppearance) {
    EXPECT_EQ(G("O7+U3+O9+U7+O3+U9+"), G(right_trefoil));
    EXPECT_EQ(serialize_inline(G("U5-O5-")), "U1-O1-");
}

TEST(GaussParse, CommentsBlankLinesAndEmptyComponents) {
    const auto d = G("# Hopf link\nO1+U2+\n\nU1+O2+\n");
    EXPECT_EQ(d.component_count(), 2U);
    EXPECT_EQ(G(".").component_count(), 1U);
    EXPECT_EQ(G(".;.").component_count(), 2U);
    EXPECT_EQ(G("O1+U1+;.").component_count(), 2U);
    EXPECT_EQ(G("O1−U1−"), G("O1-U1-"));
}

TEST(GaussParse, MultiDiagramFile) {
    const auto ds = parse_gauss_file("# first\nO1+U1+\n\n# second\nO1+U2+\nU1+O2+\n\n\n.\n");
    ASSERT_EQ(ds.size(), 3U);
    EXPECT_EQ(ds[0].crossing_count(), 1);
    EXPECT_EQ(ds[1].component_count(), 2U);
    EXPECT_EQ(ds[2].crossing_count(), 0);
}

TEST(GaussParse, MutatedInputsNeverYieldInvalidDiagrams) {
    const std::string alphabet = "OU0123456789+-;. \n#x";
    const std::vector<std::string> seeds{right_trefoil, virtual_trefoil, "O1+U2+;U1+O2+", "O1-U1-", "."};
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> ch(0, alphabet.size() - 1);
    for (int trial = 0; trial < 20000; ++trial) {
        std::string s = seeds[static_cast<std::size_t>(trial) % seeds.size()];
        for (int k = std::uniform_int_distribution<int>(1, 4)(rng); k > 0; --k) {
            const auto pos = std::uniform_int_distribution<std::size_t>(0, s.size())(rng);
            switch (rng() % 3) {
            case 0: s.insert(pos, 1, alphabet[ch(rng)]); break;
            case 1:
                if (pos < s.size()) s.erase(pos, 1);
                break;
            default:
                if (pos < s.size()) s[pos] = alphabet[ch(rng)];
            }
        }
        try {
            const auto d = parse_gauss(s);
            const diagram again(d.components());  // re-runs validation
            EXPECT_EQ(parse_gauss(serialize(again)), d) << s;
        } catch (const diagram_error&) {
        }
    }
}

TEST(Serialize, RoundTrip) {
    EXPECT_EQ(parse_gauss(serialize(G(right_trefoil))), G(right_trefoil));
    EXPECT_EQ(serialize(diagram::unlink(2)), ".\n.\n");
    EXPECT_EQ(parse_gauss(serialize(diagram::unlink(2))), diagram::unlink(2));
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto d = random_diagram(rng, trial % 9, 1 + trial % 3, true);
        EXPECT_EQ(parse_gauss(serialize(d)), d);
        EXPECT_EQ(parse_gauss(serialize_inline(d)), d);
    }
}

TEST(Pd, ClassicalTrefoilMatchesGaussCode) {
    // labels counterclockwise from the incoming under-strand
    const auto d = parse_pd("PD[X[1,4,2,5]-, X[3,6,4,1]-, X[5,2,6,3]-]");
    EXPECT_EQ(canonical_form(d), canonical_form(G(left_trefoil)));
    const auto r = parse_pd("X[1,5,2,4]+ X[3,1,4,6]+ X[5,3,6,2]+");
    EXPECT_EQ(canonical_form(r), canonical_form(G(right_trefoil)));
}

TEST(Pd, VirtualCrossingsVanish) {
    const auto d = parse_pd("V[1,2,2,1]");
    EXPECT_EQ(d.crossing_count(), 0);
    EXPECT_EQ(d.component_count(), 1U);
    // virtual trefoil: two classical crossings and one virtual crossing
    const auto v = parse_pd("X[5,3,6,2]+ X[6,4,1,3]+ # virtual\n V[1,4,2,5]");
    EXPECT_EQ(canonical_form(v), canonical_form(G(virtual_trefoil)));
}

TEST(Pd, Errors) {
    EXPECT_EQ(error_of([] { parse_pd("X[1,1,1,2]+"); }), diagram_errc::bad_degree);
    EXPECT_EQ(error_of([] { parse_pd("X[1,2,3,4]+"); }), diagram_errc::bad_degree);
    EXPECT_EQ(error_of([] { parse_pd("X[1,2,2,1]+ X[3,4,4,3]+ X[1,3,5,5]+"); }), diagram_errc::bad_degree);
    // orientation clash: edge 1 leaves both records
    EXPECT_EQ(error_of([] { parse_pd("X[2,4,1,3]+ X[4,2,1,3]+"); }), diagram_errc::open_strand);
    EXPECT_EQ(error_of([] { parse_pd("X[1,2,3]+"); }), diagram_errc::malformed_token);
    EXPECT_EQ(error_of([] { parse_pd("X[1,2,1,2]"); }), diagram_errc::malformed_token);
}

TEST(Writhe, Examples) {
    EXPECT_EQ(writhe(G(right_trefoil)), 3);
    EXPECT_EQ(writhe(G(".")), 0);
    EXPECT_EQ(writhe(G(virtual_trefoil)), 2);
    EXPECT_EQ(writhe(G(left_trefoil)), -3);
}

TEST(CrossingChange, InvolutionAndWrithe) {
    const auto t = G(right_trefoil);
    for (int id = 1; id <= 3; ++id) {
        EXPECT_EQ(crossing_change(crossing_change(t, id), id), t);
        EXPECT_EQ(writhe(crossing_change(t, id)), 1);
        EXPECT_EQ(crossing_change(t, id).component_count(), 1U);
    }
    EXPECT_EQ(error_of([] { crossing_change(G("."), 1); }), diagram_errc::unknown_crossing);
}

TEST(SpliceOriented, Examples) {
    const auto t = G(right_trefoil);
    for (int id = 1; id <= 3; ++id) {
        const auto d0 = splice_oriented(t, id);
        EXPECT_EQ(d0.component_count(), 2U);
        EXPECT_EQ(d0.crossing_count(), 2);
        EXPECT_EQ(writhe(d0), 2);
    }
    const auto kink = splice_oriented(G("O1+U1+"), 1);
    EXPECT_EQ(kink.component_count(), 2U);
    EXPECT_EQ(kink.crossing_count(), 0);
    EXPECT_EQ(error_of([] { splice_oriented(G("."), 1); }), diagram_errc::unknown_crossing);
}

TEST(SpliceOriented, RepeatedSplicingTerminates) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        auto d = random_diagram(rng, 6, 2);
        while (d.crossing_count() > 0) {
            const auto n = d.component_count();
            const auto c = d.crossing_count();
            d = splice_oriented(d, 1);
            EXPECT_EQ(d.crossing_count(), c - 1);
            EXPECT_TRUE(d.component_count() + 1 == n || d.component_count() == n + 1);
        }
    }
}

TEST(SpliceDisoriented, Examples) {
    const auto kink = splice_disoriented(G("O1+U1+"), 1);
    EXPECT_EQ(kink.component_count(), 1U);
    EXPECT_EQ(kink.crossing_count(), 0);
    EXPECT_EQ(splice_disoriented(G(virtual_trefoil), 1).crossing_count(), 1);
}

TEST(SpliceContext, PartitionAndWrithes) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 500; ++trial) {
        const auto d = random_diagram(rng, 1 + trial % 7, 1 + trial % 3);
        for (int id = 1; id <= d.crossing_count(); ++id)
            for (auto arc : {arc_choice::first, arc_choice::second}) {
                const auto ctx = make_splice_context(d, id, arc);
                EXPECT_EQ(ctx.same.size() + ctx.mixed.size() + 1, static_cast<std::size_t>(d.crossing_count()));
                std::set<int> all(ctx.same.begin(), ctx.same.end());
                all.insert(ctx.mixed.begin(), ctx.mixed.end());
                all.insert(id);
                EXPECT_EQ(all.size(), static_cast<std::size_t>(d.crossing_count()));
                EXPECT_EQ(writhe(d), ctx.k + ctx.ell + ctx.sign);
                EXPECT_EQ(writhe(splice_disoriented(d, id, arc)), ctx.k - ctx.ell);
                EXPECT_EQ(writhe(splice_oriented(d, id)), ctx.k + ctx.ell);
            }
    }
}

TEST(SpliceContext, Examples) {
    const auto kink = make_splice_context(G("O1+U1+"), 1);
    EXPECT_EQ(kink.k, 0);
    EXPECT_EQ(kink.ell, 0);
    for (int id = 1; id <= 3; ++id) {
        const auto ctx = make_splice_context(G(right_trefoil), id);
        EXPECT_EQ(ctx.k + ctx.ell, 2);
    }
    EXPECT_EQ(make_splice_context(G(virtual_trefoil), 1).ell, 1);
}

TEST(Diagram, LocateAndSigns) {
    const auto d = G("O1+U2-O3+U1+O2-U3+");
    EXPECT_EQ(d.sign(2), -1);
    EXPECT_EQ(d.locate(1).over, (site{0, 0}));
    EXPECT_EQ(d.locate(1).under, (site{0, 3}));
    EXPECT_EQ(error_of([&] { d.locate(4); }), diagram_errc::unknown_crossing);
    EXPECT_EQ(mirror(d), G("O1-U2+O3-U1-O2+U3-"));
}
