#include "strictbs/singularity.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "strictbs/bruhat.hpp"

namespace strictbs {

namespace {

const Permutation& pattern3412() {
    static const Permutation p({3, 4, 1, 2});
    return p;
}
const Permutation& pattern4231() {
    static const Permutation p({4, 2, 3, 1});
    return p;
}

struct Key {
    uint8_t n;
    uint64_t code;
    bool operator==(const Key&) const = default;
};
struct KeyHash {
    size_t operator()(const Key& k) const {
        uint64_t x = k.code ^ (uint64_t(k.n) << 56);
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ULL;
        return static_cast<size_t>(x ^ (x >> 33));
    }
};

std::shared_mutex g_profile_mu;
std::unordered_map<Key, std::shared_ptr<const SingularProfile>, KeyHash> g_profiles;

}  // namespace

bool is_smooth_variety(const Permutation& w) {
    if (w.rank() < 4) return true;
    return !pattern_contains(w, pattern3412()) && !pattern_contains(w, pattern4231());
}

int tangent_dim(const Permutation& w, const Permutation& v) {
    if (!bruhat_leq(v, w))
        throw std::invalid_argument("tangent_dim requires v <= w");
    const int n = w.rank();
    int dim = 0;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (bruhat_leq(compose(v, Permutation::transposition(n, i, j)), w)) ++dim;
    return dim;
}

bool is_smooth_at(const Permutation& w, const Permutation& v) {
    return tangent_dim(w, v) == w.length();
}

std::shared_ptr<const SingularProfile> singular_profile(const Permutation& w) {
    const Key key{static_cast<uint8_t>(w.rank()), w.code()};
    {
        std::shared_lock lock(g_profile_mu);
        if (auto it = g_profiles.find(key); it != g_profiles.end()) return it->second;
    }
    auto profile = std::make_shared<SingularProfile>();
    profile->w = w;
    const auto iv = interval(w);
    for (const Permutation& v : iv->elements)
        if (!is_smooth_at(w, v)) profile->singular_points.push_back(v);
    for (const Permutation& v : profile->singular_points)
        profile->singular_codes.insert(v.code());
    for (const Permutation& v : profile->singular_points) {
        bool maximal = true;
        for (const Permutation& u : profile->singular_points) {
            if (u != v && bruhat_leq(v, u)) {
                maximal = false;
                break;
            }
        }
        if (maximal) profile->maximal_singular.push_back(v);
    }
    std::unique_lock lock(g_profile_mu);
    auto [it, inserted] = g_profiles.emplace(key, std::move(profile));
    return it->second;
}

}  // namespace strictbs
