#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "strictbs/bruhat.hpp"
#include "strictbs/permutation.hpp"

namespace strictbs {

// Fibre counts of the product map [e,w1] x [e,w2] -> [e,w] on fixed points.
struct FibreTable {
    Split split;
    std::unordered_map<Permutation, uint32_t, PermHash> counts;
};

// Requires a length-additive (reduced) pair.
FibreTable fibre_table(const Split& split);

// True iff every fixed point with fibre count >= 2 is a singular point of
// X^w, w = w1*w2 (injectivity over the smooth locus). Short-circuits on the
// first smooth multi-fibre point.
bool is_strict(const Split& split);

// All length-additive splits of w passing is_strict, in the deterministic
// exploration order (ascending length(w1), then lex w1).
std::vector<Split> strict_splits(const Permutation& w);

// Generalized Bott-Samelson tuple (factors may be identity or non-simple).
struct BSTuple {
    std::vector<Permutation> factors;

    int rank() const;
    Permutation product() const;
    int total_length() const;
    // Reduced iff the ordinary product has length equal to the sum of the
    // factor lengths (equivalently, equals the Demazure fold).
    bool reduced() const;

    bool operator==(const BSTuple&) const = default;

    // Accepts digit strings with '-' for identity letters ("13-312") and
    // parenthesized factor words ("(1323,1,2)" with "e" or "-" for identity).
    // A rank of 0 infers n as max letter + 1.
    static BSTuple parse(const std::string& text, int n = 0);
    std::string str() const;  // dash notation when all factors are letters
};

// All sub-tuples R = (v_1,...,v_k), v_i <= w_i, with total length deficit
// exactly 1 and R non-reduced. Requires q reduced.
std::vector<BSTuple> nonreduced_codim1_subtuples(const BSTuple& q);

}  // namespace strictbs
