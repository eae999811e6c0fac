#include <gtest/gtest.h>

#include <crosscap/canonical.hpp>
#include <crosscap/moves.hpp>
#include <crosscap/reduce.hpp>
#include <crosscap/serialize.hpp>

using namespace crosscap;

namespace {

KnotEulerGraph trefoil() { return parse_graph("V:1;P:o;C:(0,0,A,A)|(0,0,B,B)"); }

}

TEST(Reduce, EmptyStaysEmpty)
{
    EXPECT_TRUE(reduce(KnotEulerGraph{}).trivial());
}

TEST(Reduce, ReducedGraphIsFixed)
{
    EXPECT_EQ(serialize(reduce(trefoil())), "V:1;P:o;C:(0,0,A,A)|(0,0,B,B)");
}

TEST(Reduce, RemovesKinks)
{
    auto g = trefoil();
    for (int k = 0; k < 5; ++k)
        g = r1_plus(g, g.cycle.size() - 1);
    EXPECT_EQ(g.cycle.size(), 12u);
    EXPECT_EQ(canonical_code(reduce(g)), canonical_code(trefoil()));
}

TEST(Reduce, SingleCrossingLoopVanishes)
{
    EXPECT_TRUE(reduce(parse_graph("V:1;P:O;C:(0,0,A,A)|(0,0,B,B)")).trivial());
}

TEST(Reduce, MergesAdjacentRegions)
{
    const auto lo = decompose_vertex(trefoil(), 0, {Parity::Odd, Parity::Even, true, false});
    ASSERT_EQ(lo.vertices.size(), 2u);
    const auto r = reduce(lo);
    EXPECT_EQ(r.vertices.size(), 1u);
    EXPECT_EQ(canonical_code(r), canonical_code(trefoil()));
}

TEST(Reduce, Idempotent)
{
    const auto g = parse_graph("V:4;P:oOOO;C:(0,3,A,A)|(3,0,B,B)|(0,1,A,B)|(1,1,A,B)|(1,3,A,B)|(3,2,A,A)|(2,2,B,A)|(2,0,B,B)");
    const auto r = reduce(g);
    EXPECT_EQ(reduce(r), r);
    EXPECT_EQ(serialize(r), "V:2;P:oo;C:(0,1,A,A)|(1,0,B,B)|(0,1,A,B)|(1,0,A,B)");
}

TEST(Reduce, RejectsInvalid)
{
    KnotEulerGraph g;
    g.vertices.resize(2);
    g.cycle = {{0, 1, Pole::A, Pole::A}, {1, 0, Pole::A, Pole::A}};
    EXPECT_THROW(reduce(g), Error);
}
