#include "strictbs/bruhat.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace strictbs {

namespace {

struct Key {
    uint8_t n;
    uint64_t code;
    bool operator==(const Key&) const = default;
};
struct KeyHash {
    size_t operator()(const Key& k) const {
        uint64_t x = k.code ^ (uint64_t(k.n) << 56);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        return static_cast<size_t>(x ^ (x >> 31));
    }
};

bool length_lex_less(const Permutation& a, const Permutation& b) {
    const int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a.code() < b.code();
}

std::shared_mutex g_sym_mu;
std::unordered_map<int, std::shared_ptr<const std::vector<Permutation>>> g_sym;

std::shared_mutex g_interval_mu;
std::unordered_map<Key, std::shared_ptr<const Interval>, KeyHash> g_intervals;

}  // namespace

std::shared_ptr<const std::vector<Permutation>> symmetric_group(int n) {
    {
        std::shared_lock lock(g_sym_mu);
        if (auto it = g_sym.find(n); it != g_sym.end()) return it->second;
    }
    std::vector<int> vals(n);
    std::iota(vals.begin(), vals.end(), 1);
    auto all = std::make_shared<std::vector<Permutation>>();
    do {
        all->emplace_back(vals);
    } while (std::next_permutation(vals.begin(), vals.end()));
    std::unique_lock lock(g_sym_mu);
    auto [it, inserted] = g_sym.emplace(n, std::move(all));
    return it->second;
}

std::shared_ptr<const Interval> interval(const Permutation& w) {
    const Key key{static_cast<uint8_t>(w.rank()), w.code()};
    {
        std::shared_lock lock(g_interval_mu);
        if (auto it = g_intervals.find(key); it != g_intervals.end()) return it->second;
    }
    auto iv = std::make_shared<Interval>();
    iv->top = w;
    for (const Permutation& v : *symmetric_group(w.rank()))
        if (bruhat_leq(v, w)) iv->elements.push_back(v);
    std::sort(iv->elements.begin(), iv->elements.end(), length_lex_less);
    iv->codes.reserve(iv->elements.size());
    for (const Permutation& v : iv->elements) iv->codes.insert(v.code());
    std::unique_lock lock(g_interval_mu);
    auto [it, inserted] = g_intervals.emplace(key, std::move(iv));
    return it->second;
}

Permutation demazure_product(const std::vector<Word>& words, int n) {
    Permutation d = Permutation::identity(n);
    int len = 0;
    for (const Word& word : words) {
        for (int letter : word) {
            if (letter < 1 || letter >= n)
                throw std::invalid_argument("word letter out of range: " +
                                            std::to_string(letter));
            const Permutation next = compose(d, Permutation::simple(n, letter));
            const int nlen = next.length();
            if (nlen > len) {
                d = next;
                len = nlen;
            }
        }
    }
    return d;
}

namespace {

void reduced_words_rec(const Permutation& w, int len, Word& suffix,
                       std::vector<Word>& out) {
    if (len == 0) {
        out.emplace_back(suffix.rbegin(), suffix.rend());
        return;
    }
    const int n = w.rank();
    for (int i = 1; i < n; ++i) {
        if (w(i) > w(i + 1)) {  // right descent: l(w s_i) = l(w) - 1
            suffix.push_back(i);
            reduced_words_rec(compose(w, Permutation::simple(n, i)), len - 1, suffix, out);
            suffix.pop_back();
        }
    }
}

}  // namespace

std::vector<Word> reduced_words(const Permutation& w) {
    std::vector<Word> out;
    Word suffix;
    reduced_words_rec(w, w.length(), suffix, out);
    return out;
}

std::vector<Split> length_additive_splits(const Permutation& w) {
    std::vector<Split> out;
    const int len = w.length();
    if (len < 2) return out;
    // Candidates w1 range over the right-weak-order lower set of w, a subset
    // of [e,w]; interval elements are already in (length, lex) order.
    for (const Permutation& w1 : interval(w)->elements) {
        const int l1 = w1.length();
        if (l1 == 0 || l1 == len) continue;
        const Permutation w2 = compose(w1.inverse(), w);
        if (l1 + w2.length() == len) out.push_back(Split{w1, w2});
    }
    return out;
}

}  // namespace strictbs
