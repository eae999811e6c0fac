#include <gtest/gtest.h>

#include <crosscap/keg.hpp>
#include <crosscap/serialize.hpp>

using namespace crosscap;

namespace {

KnotEulerGraph trefoil()
{
    return parse_graph("V:1;P:o;C:(0,0,A,A)|(0,0,B,B)");
}

bool has(const ValidationReport& r, const std::string& inv)
{
    for (const auto& v : r.violations)
        if (v.invariant == inv)
            return true;
    return false;
}

} // namespace

TEST(Parity, Addition)
{
    EXPECT_EQ(Parity::Odd + Parity::Odd, Parity::Even);
    EXPECT_EQ(Parity::Odd + Parity::Even, Parity::Odd);
    EXPECT_EQ(Parity::Even + Parity::Odd, Parity::Odd);
    EXPECT_EQ(Parity::Even + Parity::Even, Parity::Even);
}

TEST(Pole, CrossSwapsOnlyForOdd)
{
    EXPECT_EQ(cross(Pole::A, Parity::Odd), Pole::B);
    EXPECT_EQ(cross(Pole::B, Parity::Even), Pole::B);
    EXPECT_LT(Pole::A, Pole::B);
}

TEST(Validate, EmptyGraphIsOk)
{
    EXPECT_TRUE(validate(KnotEulerGraph{}).ok());
    EXPECT_EQ(validate(KnotEulerGraph{}).to_string(), "ok");
}

TEST(Validate, TrefoilFamily)
{
    EXPECT_TRUE(validate(trefoil()).ok());
}

TEST(Validate, ThreeEdgeCycle)
{
    KnotEulerGraph g;
    g.vertices.push_back({});
    g.cycle = {{0, 0, Pole::A, Pole::A}, {0, 0, Pole::B, Pole::B}, {0, 0, Pole::A, Pole::B}};
    const auto r = validate(g);
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(has(r, "valence ≠ 4"));
    EXPECT_TRUE(has(r, "E ≠ 2V"));
}

TEST(Validate, OpenCycle)
{
    KnotEulerGraph g;
    g.vertices.resize(2);
    g.cycle = {{0, 1, Pole::A, Pole::A}, {0, 1, Pole::B, Pole::B}, {1, 0, Pole::B, Pole::A}, {1, 0, Pole::A, Pole::B}};
    EXPECT_TRUE(has(validate(g), "cycle not closed"));
}

TEST(Validate, UnknownVertex)
{
    KnotEulerGraph g;
    g.vertices.resize(1);
    g.cycle = {{0, 3, Pole::A, Pole::A}, {3, 0, Pole::B, Pole::B}};
    const auto r = validate(g);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violations[0].invariant, "unknown vertex");
    EXPECT_EQ(r.violations[0].where, "edge 0");
}

TEST(Validate, KinkMustBeOdd)
{
    KnotEulerGraph g = trefoil();
    g.vertices[0] = Vertex{Parity::Even, true, Strands::Parallel};
    EXPECT_TRUE(has(validate(g), "kink parity"));
}

TEST(Validate, PassParity)
{
    // an odd region must move each strand to the other pole
    KnotEulerGraph g;
    g.vertices.push_back({});
    g.cycle = {{0, 0, Pole::A, Pole::A}, {0, 0, Pole::B, Pole::B}};
    g.vertices[0].parity = Parity::Even;
    EXPECT_TRUE(has(validate(g), "pass parity"));
}

TEST(Validate, StrandOrientationOfOddVertex)
{
    KnotEulerGraph g = trefoil();
    g.vertices[0].strands = Strands::Antiparallel;
    EXPECT_TRUE(has(validate(g), "strand orientation"));
}

TEST(ReverseEdge, Examples)
{
    EXPECT_EQ(reverse_edge({1, 2, Pole::A, Pole::B}), (Edge{2, 1, Pole::B, Pole::A}));
    EXPECT_EQ(reverse_edge({3, 3, Pole::B, Pole::A}), (Edge{3, 3, Pole::A, Pole::B}));
    const Edge e{4, 7, Pole::B, Pole::B};
    EXPECT_EQ(reverse_edge(reverse_edge(e)), e);
}

TEST(Rotate, ShiftsCycle)
{
    const auto g = parse_graph("V:2;P:ee;C:(0,1,A,A)|(1,0,A,B)|(0,1,B,B)|(1,0,B,A)");
    const auto r = rotate(g, 1);
    EXPECT_EQ(r.cycle[0], g.cycle[1]);
    EXPECT_EQ(r.cycle[3], g.cycle[0]);
    EXPECT_TRUE(validate(r).ok());
    EXPECT_EQ(rotate(g, 4), g);
}

TEST(Relabel, MovesVertexData)
{
    const auto g = parse_graph("V:3;P:ooe;C:(0,1,A,A)|(1,2,B,A)|(2,1,A,B)|(1,0,A,A)|(0,2,B,B)|(2,0,B,B)");
    const auto r = relabel(g, {2, 0, 1});
    EXPECT_EQ(r.vertices[1].parity, Parity::Even);
    EXPECT_EQ(r.cycle[0].from, 2u);
    EXPECT_EQ(r.cycle[0].to, 0u);
    EXPECT_TRUE(validate(r).ok());
}

TEST(SwapPoles, IsAnInvolution)
{
    const auto g = parse_graph("V:2;P:ee;C:(0,1,A,A)|(1,0,A,B)|(0,1,B,B)|(1,0,B,A)");
    const auto s = swap_poles(g, 1);
    EXPECT_NE(s, g);
    EXPECT_TRUE(validate(s).ok());
    EXPECT_EQ(swap_poles(s, 1), g);
}
