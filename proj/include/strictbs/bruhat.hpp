#pragma once

#include <memory>
#include <unordered_set>
#include <vector>

#include "strictbs/permutation.hpp"

namespace strictbs {

// Lower Bruhat interval [e, top]. Elements are sorted by (length, one-line
// lex), the order the search and the fibre counter iterate in.
struct Interval {
    Permutation top;
    std::vector<Permutation> elements;
    std::unordered_set<uint64_t> codes;

    size_t size() const { return elements.size(); }
    bool contains(const Permutation& v) const {
        return v.rank() == top.rank() && codes.count(v.code()) != 0;
    }
};

// Cached per w; safe to call concurrently.
std::shared_ptr<const Interval> interval(const Permutation& w);

// All of S_n in one-line lexicographic order (cached).
std::shared_ptr<const std::vector<Permutation>> symmetric_group(int n);

// Length-additive factorization w = w1 * w2 with both factors nontrivial.
struct Split {
    Permutation w1, w2;

    Permutation product() const { return compose(w1, w2); }
    bool length_additive() const {
        return w1.length() + w2.length() == product().length();
    }
    bool operator==(const Split& o) const = default;
    auto operator<=>(const Split& o) const = default;
};

// Demazure fold of the concatenated letters; empty input gives the identity.
Permutation demazure_product(const std::vector<Word>& words, int n);

// Every reduced word of w exactly once, by recursion on right descents.
std::vector<Word> reduced_words(const Permutation& w);

// All nontrivial length-additive splits of w, ordered by ascending
// length(w1) then lexicographic w1. Empty when length(w) < 2.
std::vector<Split> length_additive_splits(const Permutation& w);

}  // namespace strictbs
