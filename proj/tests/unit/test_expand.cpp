#include <gtest/gtest.h>

#include <crosscap/expand.hpp>
#include <crosscap/serialize.hpp>

using namespace crosscap;

TEST(Expand, TrivialGraph)
{
    const auto out = expand_all(KnotEulerGraph{});
    const Code tre = canonical_code(parse_graph("V:1;P:o;C:(0,0,A,A)|(0,0,B,B)"));
    EXPECT_TRUE(out.count(tre));
    for (const auto& [c, g] : out) {
        EXPECT_TRUE(is_realizable(g));
        EXPECT_EQ(canonical_code(g), c);
    }
}

TEST(Expand, ResultsAreReducedAndCanonical)
{
    const auto out = expand_all(parse_graph("V:1;P:o;C:(0,0,A,A)|(0,0,B,B)"));
    EXPECT_FALSE(out.empty());
    for (const auto& [c, g] : out) {
        EXPECT_TRUE(validate(g).ok());
        EXPECT_EQ(reduce(g), g);
        EXPECT_EQ(canonical_code(g), c);
        EXPECT_TRUE(is_realizable(g));
    }
}

TEST(Expand, NarrowerSpaceGivesSubset)
{
    const auto g = parse_graph("V:1;P:o;C:(0,0,A,A)|(0,0,B,B)");
    VariantSpace small;
    small.gaps = false;
    small.double_gaps = false;
    small.loop_families = false;
    small.part_families = false;
    const auto a = expand_all(g, small), b = expand_all(g);
    for (const auto& kv : a)
        EXPECT_TRUE(b.count(kv.first));
}

TEST(Expand, VariantsAreValid)
{
    const auto g = parse_graph("V:1;P:o;C:(0,0,A,A)|(0,0,B,B)");
    const auto vs = bridge_variants(g, 0, 1, VariantSpace{});
    EXPECT_FALSE(vs.empty());
    for (const auto& v : vs) {
        const std::size_t cuts = v.split_s.count ? v.split_s.count - 1u : 0u;
        EXPECT_EQ(bridge(g, 0, 1, v).cycle.size(), 3 * (2 + 2 * cuts) + 2);
    }
}

TEST(Expand, RejectsInvalid)
{
    KnotEulerGraph g;
    g.vertices.resize(1);
    EXPECT_THROW(expand_all(g), Error);
}
