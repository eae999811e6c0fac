#include <gtest/gtest.h>

#include <crosscap/oracle.hpp>

using namespace crosscap;

TEST(Splice, Examples)
{
    EXPECT_EQ(to_string(splice_minus(parse_gauss("abcabc"), 0)), "cbbc");
    EXPECT_EQ(to_string(splice_minus(parse_gauss("aa"), 0)), "");
    EXPECT_EQ(to_string(splice_minus(parse_gauss("abab"), 0)), "bb");
    EXPECT_THROW(splice_minus(parse_gauss("abab"), 5), Error);
}

TEST(R1Minus, Examples)
{
    EXPECT_EQ(to_string(r1_minus(parse_gauss("aabcbc"), 0)), "bcbc");
    EXPECT_EQ(to_string(r1_minus(parse_gauss("abcbca"), 0)), "bcbc");
    EXPECT_THROW(r1_minus(parse_gauss("abab"), 0), Error);
    EXPECT_THROW(r1_minus(parse_gauss("aa"), 1), Error);
}

TEST(UMinus, Values)
{
    EXPECT_EQ(u_minus(parse_gauss("")), 0);
    EXPECT_EQ(u_minus(parse_gauss("aa")), 0);
    EXPECT_EQ(u_minus(parse_gauss("abcabc")), 1);
    EXPECT_EQ(u_minus(parse_gauss("abcdbadc")), 2);
    EXPECT_EQ(u_minus(parse_gauss("abcdeabcde")), 1);
    EXPECT_EQ(u_minus(parse_gauss("abcabcdefdef")), 2);
}

TEST(UMinus, WitnessReplays)
{
    for (const char* text : {"abcabc", "abcdbadc", "abcdefgadcbgfe", "abcabcdefdef"}) {
        const GaussWord w0 = parse_gauss(text);
        const auto r = u_minus_witness(w0);
        GaussWord w = w0;
        int splices = 0;
        for (const auto& m : r.witness) {
            const auto it = std::find(w.names.begin(), w.names.end(), m.label);
            ASSERT_NE(it, w.names.end());
            const auto x = static_cast<std::uint32_t>(it - w.names.begin());
            if (m.kind == Move::Kind::Splice) {
                w = splice_minus(w, x);
                ++splices;
            } else {
                w = r1_minus(w, x);
            }
        }
        EXPECT_TRUE(w.trivial()) << text;
        EXPECT_EQ(splices, r.value) << text;
    }
}

TEST(UMinus, EagerKinkRemovalAgrees)
{
    UMinusOptions lazy;
    lazy.eager_r1 = false;
    for (const char* text : {"abcabc", "abcdbadc", "abcdeabcde", "aabcbc", "abcdecabed"})
        EXPECT_EQ(u_minus(parse_gauss(text)), u_minus(parse_gauss(text), lazy)) << text;
}

TEST(UMinus, MoveText)
{
    EXPECT_EQ(to_string(Move{Move::Kind::Splice, "a"}), "S- a");
    EXPECT_EQ(to_string(Move{Move::Kind::Kink, "b"}), "RI- b");
}
