#pragma once

#include <memory>
#include <unordered_set>
#include <vector>

#include "strictbs/permutation.hpp"

namespace strictbs {

// Global smoothness: X^w is smooth iff w avoids 3412 and 4231.
bool is_smooth_variety(const Permutation& w);

// Tangent-space dimension of X^w at the fixed point e_v: the number of
// transpositions t with v*t <= w. Requires v <= w.
int tangent_dim(const Permutation& w, const Permutation& v);

// Pointwise smoothness: tangent_dim(w,v) == length(w). Requires v <= w.
bool is_smooth_at(const Permutation& w, const Permutation& v);

struct SingularProfile {
    Permutation w;
    // All v <= w where X^w is singular at e_v, in (length, lex) order.
    std::vector<Permutation> singular_points;
    // Bruhat-maximal singular points. Downward closure of the singular set is
    // not assumed anywhere; points are computed one by one.
    std::vector<Permutation> maximal_singular;
    std::unordered_set<uint64_t> singular_codes;

    bool singular_at(const Permutation& v) const {
        return singular_codes.count(v.code()) != 0;
    }
};

// Cached per w; safe to call concurrently.
std::shared_ptr<const SingularProfile> singular_profile(const Permutation& w);

}  // namespace strictbs
