#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "vkb/bracket.hpp"
#include "vkb/gauss_io.hpp"
#include "vkb/moves.hpp"
#include "vkb/verify.hpp"

using namespace vkb;

namespace {

constexpr move_kind all_kinds[] = {move_kind::r1_add, move_kind::r1_remove, move_kind::r2_add, move_kind::r2_remove,
                                   move_kind::r3};

bool throws_inapplicable(const diagram& d, const move& m) {
    try {
        apply_move(d, m);
    } catch (const diagram_error& e) {
        return e.code() == diagram_errc::inapplicable_move;
    }
    return false;
}

} // namespace

TEST(Moves, R1AddThenRemove) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        const auto d = random_diagram(rng, trial % 6, 1 + trial % 2);
        const auto m = random_move(d, move_kind::r1_add, rng);
        ASSERT_TRUE(m);
        const auto e = apply_move(d, *m);
        EXPECT_EQ(e.crossing_count(), d.crossing_count() + 1);
        EXPECT_EQ(writhe(e), writhe(d) + m->sign);
        EXPECT_EQ(apply_move(e, move{.kind = move_kind::r1_remove, .a = e.crossing_count()}), d);
    }
}

TEST(Moves, R2AddThenRemove) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const auto d = random_diagram(rng, trial % 6, 1 + trial % 3);
        const auto m = random_move(d, move_kind::r2_add, rng);
        ASSERT_TRUE(m);
        const auto e = apply_move(d, *m);
        const int c = d.crossing_count();
        EXPECT_EQ(e.crossing_count(), c + 2);
        EXPECT_EQ(writhe(e), writhe(d));
        EXPECT_EQ(apply_move(e, move{.kind = move_kind::r2_remove, .a = c + 1, .b = c + 2}), d);
    }
}

TEST(Moves, R2OnEmptyLoop) {
    const auto e = apply_move(diagram::unlink(1), move{.kind = move_kind::r2_add, .gap = {0, 0}, .gap2 = {0, 0}});
    EXPECT_EQ(serialize_inline(e), "O1+O2-U1+U2-");
    EXPECT_EQ(to_string(f_polynomial(e)), "1");
}

TEST(Moves, R3TwiceIsIdentityAndKeepsF) {
    std::mt19937_64 rng(3);
    int sites = 0;
    for (int trial = 0; trial < 3000 && sites < 300; ++trial) {
        auto d = random_diagram(rng, 3 + trial % 5, 1 + trial % 2);
        for (const auto& m : candidate_moves(d, move_kind::r3)) {
            ++sites;
            const auto e = apply_move(d, m);
            EXPECT_EQ(e.crossing_count(), d.crossing_count());
            EXPECT_EQ(writhe(e), writhe(d));
            EXPECT_EQ(apply_move(e, m), d) << serialize_inline(d);
            EXPECT_EQ(oracle::f_polynomial(e), oracle::f_polynomial(d)) << serialize_inline(d);
        }
    }
    EXPECT_GT(sites, 50);
}

TEST(Moves, R3ReversesThreePairs) {
    // top O1 O2, middle U1 O3, bottom U2 U3 on one component
    const auto d = parse_gauss("O1+O2+U1+O3+U2+U3+");
    const auto cands = candidate_moves(d, move_kind::r3);
    ASSERT_EQ(cands.size(), 1U);
    EXPECT_EQ(serialize_inline(apply_move(d, cands[0])), "O2+O1+O3+U1+U3+U2+");
}

TEST(Moves, InapplicableSites) {
    const auto t = parse_gauss("O1+U2+O3+U1+O2+U3+");
    EXPECT_TRUE(candidate_moves(t, move_kind::r3).empty());
    EXPECT_TRUE(candidate_moves(t, move_kind::r1_remove).empty());
    EXPECT_TRUE(candidate_moves(t, move_kind::r2_remove).empty());
    EXPECT_TRUE(throws_inapplicable(t, move{.kind = move_kind::r3, .a = 1, .b = 2, .c = 3}));
    EXPECT_TRUE(throws_inapplicable(t, move{.kind = move_kind::r1_remove, .a = 1}));
    EXPECT_TRUE(throws_inapplicable(t, move{.kind = move_kind::r2_remove, .a = 1, .b = 2}));
    EXPECT_TRUE(throws_inapplicable(t, move{.kind = move_kind::r1_add, .gap = {0, 7}}));
    EXPECT_TRUE(throws_inapplicable(t, move{.kind = move_kind::r1_add, .gap = {1, 0}}));
    EXPECT_TRUE(throws_inapplicable(t, move{.kind = move_kind::r1_add, .sign = 0}));
    // same-sign bigon is not an R2 site
    EXPECT_TRUE(throws_inapplicable(parse_gauss("O1+O2+U1+U2+"), move{.kind = move_kind::r2_remove, .a = 1, .b = 2}));
}

TEST(Moves, RandomWalkKeepsDiagramsValid) {
    std::mt19937_64 rng(4);
    auto d = parse_gauss("O1+U2+O3+U1+O2+U3+");
    int applied = 0;
    for (int step = 0; step < 10000; ++step) {
        auto kind = all_kinds[rng() % 5];
        if (d.crossing_count() > 14) kind = rng() % 2 ? move_kind::r1_remove : move_kind::r2_remove;
        const auto m = random_move(d, kind, rng);
        if (!m) continue;
        const auto e = apply_move(d, *m);
        ++applied;
        const diagram again(e.components());
        EXPECT_EQ(again, e);
        for (int id = 1; id <= e.crossing_count(); ++id) {
            const auto l = e.locate(id);
            EXPECT_EQ(e.at(l.over).sign, e.at(l.under).sign);
        }
        d = e;
    }
    EXPECT_GT(applied, 5000);
}

TEST(Moves, FInvariantAlongRandomWalks) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto d = random_diagram(rng, 1 + trial % 4, 1 + trial % 2);
        const auto f0 = oracle::f_polynomial(d);
        for (int step = 0; step < 8; ++step) {
            auto kind = all_kinds[rng() % 5];
            if (d.crossing_count() > 9) kind = move_kind::r2_remove;
            const auto m = random_move(d, kind, rng);
            if (!m) continue;
            d = apply_move(d, *m);
            EXPECT_EQ(oracle::f_polynomial(d), f0) << to_string(kind) << " " << serialize_inline(d);
            EXPECT_EQ(oracle::from(f_polynomial(d)), f0);
        }
    }
}

TEST(Moves, SeededApply) {
    const auto t = parse_gauss("O1+U2+O3+U1+O2+U3+");
    EXPECT_EQ(apply_move(t, move_kind::r1_add, 9), apply_move(t, move_kind::r1_add, 9));
    EXPECT_THROW(apply_move(t, move_kind::r3, 9), diagram_error);
}
