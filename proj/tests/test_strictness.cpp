#include "doctest.h"

#include <algorithm>

#include "strictbs/singularity.hpp"
#include "strictbs/strictness.hpp"

using namespace strictbs;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

Split SplitOf(const Word& left, const Word& right, int n) {
    return Split{word_to_perm(left, n), word_to_perm(right, n)};
}

}  // namespace

TEST_CASE("fibre_table for (s1, s2s3s2s1) over 4231") {
    const auto table = fibre_table(SplitOf({1}, {2, 3, 2, 1}, 4));
    std::vector<Permutation> doubled;
    for (const auto& [v, count] : table.counts) {
        CHECK(count <= 2);
        if (count == 2) doubled.push_back(v);
    }
    std::sort(doubled.begin(), doubled.end());
    CHECK(doubled == std::vector<Permutation>{P("1234"), P("1243"), P("2134"), P("2143")});
}

TEST_CASE("fibre_table for (s2, s1s3s2) over 3412") {
    const auto table = fibre_table(SplitOf({2}, {1, 3, 2}, 4));
    std::vector<Permutation> doubled;
    for (const auto& [v, count] : table.counts)
        if (count >= 2) doubled.push_back(v);
    std::sort(doubled.begin(), doubled.end());
    CHECK(doubled == std::vector<Permutation>{P("1234"), P("1324")});
}

TEST_CASE("fibre_table for disjoint supports is all ones") {
    const auto table = fibre_table(SplitOf({1}, {3}, 4));
    CHECK(table.counts.size() == 4);
    for (const auto& [v, count] : table.counts) CHECK(count == 1);
}

TEST_CASE("fibre_table rejects non-reduced pairs") {
    CHECK_THROWS_AS(fibre_table(Split{P("2134"), P("2134")}), std::invalid_argument);
    CHECK_THROWS_AS(fibre_table(Split{Permutation::identity(4), P("2134")}),
                    std::invalid_argument);
}

TEST_CASE("fibre surjectivity and mass conservation on S_5") {
    for (const Permutation& w : *symmetric_group(5)) {
        if (w.length() < 2) continue;
        for (const Split& split : length_additive_splits(w)) {
            const auto table = fibre_table(split);
            const auto iw = interval(w);
            // every fixed point of X^w is hit
            CHECK(table.counts.size() == iw->size());
            for (const Permutation& v : iw->elements)
                CHECK(table.counts.count(v) == 1);
            uint64_t mass = 0;
            for (const auto& [v, count] : table.counts) mass += count;
            CHECK(mass == uint64_t(interval(split.w1)->size()) * interval(split.w2)->size());
        }
    }
}

TEST_CASE("is_strict on known strict splits") {
    CHECK(is_strict(SplitOf({1}, {2, 3, 2, 1}, 4)));   // 4231
    CHECK(is_strict(SplitOf({2}, {1, 3, 2}, 4)));      // 3412
    for (const Split& split : length_additive_splits(P("45312")))
        CHECK_FALSE(is_strict(split));
}

TEST_CASE("is_strict agrees with full fibre table check") {
    for (const Permutation& w : *symmetric_group(5)) {
        if (w.length() < 2) continue;
        const auto profile = singular_profile(w);
        for (const Split& split : length_additive_splits(w)) {
            const auto table = fibre_table(split);
            bool expect = true;
            for (const auto& [v, count] : table.counts)
                if (count >= 2 && !profile->singular_at(v)) expect = false;
            CHECK(is_strict(split) == expect);
        }
    }
}

TEST_CASE("on smooth varieties strictness means bijectivity") {
    for (const Permutation& w : *symmetric_group(5)) {
        if (w.length() < 2 || !is_smooth_variety(w)) continue;
        for (const Split& split : length_additive_splits(w)) {
            if (!is_strict(split)) continue;
            for (const auto& [v, count] : fibre_table(split).counts)
                CHECK(count == 1);
        }
    }
}

TEST_CASE("strict_splits of 256413 is exactly (s1, 156423)") {
    const auto splits = strict_splits(P("256413"));
    REQUIRE(splits.size() == 1);
    CHECK(splits[0] == Split{P("213456"), P("156423")});
}

TEST_CASE("strict_splits of 45312 is empty") {
    CHECK(strict_splits(P("45312")).empty());
}

TEST_CASE("strict_splits of 456123 contains the expected split") {
    const Split expected = SplitOf({3, 4, 5, 2, 3}, {4, 1, 2, 3}, 6);
    REQUIRE(expected.length_additive());
    const auto splits = strict_splits(P("456123"));
    CHECK(std::count(splits.begin(), splits.end(), expected) == 1);
}

TEST_CASE("BSTuple parsing") {
    const BSTuple q = BSTuple::parse("13-312");
    REQUIRE(q.factors.size() == 6);
    CHECK(q.factors[0] == Permutation::simple(4, 1));
    CHECK(q.factors[2].is_identity());
    CHECK(q.factors[5] == Permutation::simple(4, 2));
    CHECK(q.str() == "13-312");

    const BSTuple tuple = BSTuple::parse("(1323,1,2)");
    REQUIRE(tuple.factors.size() == 3);
    CHECK(tuple.factors[0] == word_to_perm({1, 3, 2, 3}, 4));
    CHECK(tuple.factors[1] == Permutation::simple(4, 1));
    CHECK(tuple.reduced());

    const BSTuple with_e = BSTuple::parse("(1323,e,2)");
    CHECK(with_e.factors[1].is_identity());
    CHECK_FALSE(with_e.reduced());

    CHECK_THROWS_AS(BSTuple::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(BSTuple::parse("(12,3"), std::invalid_argument);
    CHECK_THROWS_AS(BSTuple::parse("1x2"), std::invalid_argument);
}

TEST_CASE("nonreduced_codim1_subtuples of the word 132312") {
    const BSTuple q = BSTuple::parse("132312");
    REQUIRE(q.reduced());
    REQUIRE(q.product() == P("4321"));
    auto subs = nonreduced_codim1_subtuples(q);
    std::vector<std::string> names;
    for (const BSTuple& sub : subs) names.push_back(sub.str());
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"13-312", "132-12", "1323-2"});
}

TEST_CASE("nonreduced_codim1_subtuples of (s1s3s2s3, s1, s2)") {
    const BSTuple q = BSTuple::parse("(1323,1,2)");
    const auto subs = nonreduced_codim1_subtuples(q);
    REQUIRE(subs.size() == 2);
    BSTuple expect1 = BSTuple::parse("(132,1,2)");
    BSTuple expect2 = BSTuple::parse("(1323,e,2)");
    CHECK(std::count(subs.begin(), subs.end(), expect1) == 1);
    CHECK(std::count(subs.begin(), subs.end(), expect2) == 1);
}

TEST_CASE("nonreduced_codim1_subtuples edge cases") {
    CHECK(nonreduced_codim1_subtuples(BSTuple::parse("1")).empty());
    CHECK_THROWS_AS(nonreduced_codim1_subtuples(BSTuple::parse("11")),
                    std::invalid_argument);
}

TEST_CASE("subtuple outputs are non-reduced with total length deficit one") {
    for (const std::string& text : {"132312", "(1323,1,2)", "121", "2132"}) {
        const BSTuple q = BSTuple::parse(text);
        for (const BSTuple& sub : nonreduced_codim1_subtuples(q)) {
            CHECK_FALSE(sub.reduced());
            CHECK(sub.total_length() == q.total_length() - 1);
            for (size_t i = 0; i < q.factors.size(); ++i)
                CHECK(bruhat_leq(sub.factors[i], q.factors[i]));
        }
    }
}
