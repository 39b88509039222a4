#include "doctest.h"

#include <algorithm>
#include <set>

#include "strictbs/bruhat.hpp"

using namespace strictbs;

namespace {
Permutation P(const std::string& s) { return Permutation::parse(s); }
}

TEST_CASE("interval basics") {
    const auto id = interval(Permutation::identity(4));
    CHECK(id->size() == 1);
    CHECK(id->elements.front() == Permutation::identity(4));

    const auto s2 = interval(Permutation::simple(4, 2));
    CHECK(s2->size() == 2);

    // brute-force filter of S_4 by bruhat_leq
    const auto iv = interval(P("4231"));
    size_t expect = 0;
    for (const Permutation& v : *symmetric_group(4))
        if (bruhat_leq(v, P("4231"))) ++expect;
    CHECK(iv->size() == expect);
    for (const Permutation& v : iv->elements) CHECK(iv->contains(v));
    CHECK_FALSE(iv->contains(P("4321")));
}

TEST_CASE("interval elements sorted by length then lex") {
    const auto iv = interval(P("45312"));
    for (size_t i = 1; i < iv->elements.size(); ++i) {
        const int la = iv->elements[i - 1].length();
        const int lb = iv->elements[i].length();
        CHECK(la <= lb);
        if (la == lb) CHECK(iv->elements[i - 1].code() < iv->elements[i].code());
    }
}

TEST_CASE("demazure product") {
    CHECK(demazure_product({}, 5) == Permutation::identity(5));
    CHECK(demazure_product({{1}, {1}}, 4) == Permutation::simple(4, 1));
    CHECK(demazure_product({{1, 2, 1, 2}}, 3) == P("321"));
    CHECK_THROWS_AS(demazure_product({{7}}, 4), std::invalid_argument);
}

TEST_CASE("demazure product of a reduced word is the ordinary product") {
    for (const Permutation& w : *symmetric_group(4))
        for (const Word& word : reduced_words(w))
            CHECK(demazure_product({word}, 4) == w);
}

TEST_CASE("demazure product dominates the ordinary product in S_4") {
    // whenever the ordinary product is as long as the word, the word is
    // reduced and the two agree; otherwise Dem >= product in Bruhat order
    const auto& s4 = *symmetric_group(4);
    for (const Permutation& w : s4) {
        for (const Word& word : reduced_words(w)) {
            for (int extra = 1; extra <= 3; ++extra) {
                Word longer = word;
                longer.push_back(extra);
                const Permutation prod = word_to_perm(longer, 4);
                const Permutation dem = demazure_product({longer}, 4);
                if (prod.length() <= static_cast<int>(longer.size()))
                    CHECK(bruhat_leq(prod, dem));
            }
        }
    }
}

TEST_CASE("reduced words") {
    CHECK(reduced_words(Permutation::identity(3)) == std::vector<Word>{{}});

    auto words = reduced_words(P("321"));
    std::sort(words.begin(), words.end());
    CHECK(words == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});

    const auto w45312 = reduced_words(P("45312"));
    const Word target_word{2, 3, 2, 1, 4, 2, 3, 2};
    CHECK(std::count(w45312.begin(), w45312.end(), target_word) == 1);
}

TEST_CASE("reduced word count of the longest element of S_4") {
    // brute force over all length-6 words in letters 1..3
    const Permutation w0 = P("4321");
    int count = 0;
    for (int mask = 0; mask < 3 * 3 * 3 * 3 * 3 * 3; ++mask) {
        Word word;
        int m = mask;
        for (int i = 0; i < 6; ++i) {
            word.push_back(m % 3 + 1);
            m /= 3;
        }
        if (word_to_perm(word, 4) == w0) ++count;
    }
    CHECK(count == 16);
    CHECK(reduced_words(w0).size() == 16);
}

TEST_CASE("reduced words are distinct and reduced") {
    for (const Permutation& w : *symmetric_group(4)) {
        const auto words = reduced_words(w);
        std::set<Word> unique(words.begin(), words.end());
        CHECK(unique.size() == words.size());
        for (const Word& word : words) {
            CHECK(static_cast<int>(word.size()) == w.length());
            CHECK(word_to_perm(word, 4) == w);
        }
    }
}

TEST_CASE("length_additive_splits basics") {
    const Permutation s1s3 = compose(Permutation::simple(4, 1), Permutation::simple(4, 3));
    auto splits = length_additive_splits(s1s3);
    REQUIRE(splits.size() == 2);
    const Permutation s1 = Permutation::simple(4, 1);
    const Permutation s3 = Permutation::simple(4, 3);
    // same length, so lex order on w1: 1243 before 2134
    CHECK(splits[0] == Split{s3, s1});
    CHECK(splits[1] == Split{s1, s3});

    // Q = (s_1, s_2s_3s_2s_1) for 4231
    const auto splits4231 = length_additive_splits(P("4231"));
    const Split expected{P("2134"), word_to_perm({2, 3, 2, 1}, 4)};
    CHECK(std::count(splits4231.begin(), splits4231.end(), expected) == 1);

    CHECK(length_additive_splits(Permutation::simple(4, 1)).empty());
    CHECK(length_additive_splits(Permutation::identity(4)).empty());
}

TEST_CASE("every division of s2s3s2s1s4s2s3s2 has s2 below both factors") {
    const Permutation s2 = Permutation::simple(5, 2);
    const Word word{2, 3, 2, 1, 4, 2, 3, 2};
    REQUIRE(word_to_perm(word, 5) == P("45312"));
    for (size_t cut = 1; cut < word.size(); ++cut) {
        const Word left(word.begin(), word.begin() + cut);
        const Word right(word.begin() + cut, word.end());
        CHECK(bruhat_leq(s2, word_to_perm(left, 5)));
        CHECK(bruhat_leq(s2, word_to_perm(right, 5)));
    }
}

TEST_CASE("splits are valid and deterministically ordered") {
    for (const Permutation& w : *symmetric_group(4)) {
        const auto splits = length_additive_splits(w);
        for (const Split& split : splits) {
            CHECK(split.product() == w);
            CHECK(split.w1.length() + split.w2.length() == w.length());
            CHECK_FALSE(split.w1.is_identity());
            CHECK_FALSE(split.w2.is_identity());
        }
        for (size_t i = 1; i < splits.size(); ++i) {
            const int la = splits[i - 1].w1.length();
            const int lb = splits[i].w1.length();
            CHECK(la <= lb);
            if (la == lb) CHECK(splits[i - 1].w1.code() < splits[i].w1.code());
        }
    }
}

TEST_CASE("element-level splits equal reduced-word divisions on S_5") {
    for (const Permutation& w : *symmetric_group(5)) {
        if (w.length() < 2) continue;
        std::set<std::pair<Permutation, Permutation>> by_words;
        for (const Word& word : reduced_words(w)) {
            for (size_t cut = 1; cut < word.size(); ++cut) {
                const Word left(word.begin(), word.begin() + cut);
                const Word right(word.begin() + cut, word.end());
                by_words.emplace(word_to_perm(left, 5), word_to_perm(right, 5));
            }
        }
        std::set<std::pair<Permutation, Permutation>> by_elements;
        for (const Split& split : length_additive_splits(w))
            by_elements.emplace(split.w1, split.w2);
        CHECK(by_elements == by_words);
    }
}
