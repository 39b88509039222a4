#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace strictbs {

inline constexpr int kMaxRank = 16;

// Element of S_n in one-line notation over {1,...,n}, packed 4 bits per
// position into a single word. Position 1 occupies the top nibble, so for a
// fixed rank the raw code compares in one-line lexicographic order and
// doubles as the hash key.
class Permutation {
public:
    Permutation() : n_(1), code_(0) {}
    explicit Permutation(const std::vector<int>& one_line);

    static Permutation identity(int n);
    // Adjacent transposition s_i, swapping i and i+1 (1 <= i <= n-1).
    static Permutation simple(int n, int i);
    // Transposition t_{ij} with 1 <= i < j <= n.
    static Permutation transposition(int n, int i, int j);

    int rank() const { return n_; }
    // Value at 1-based position.
    int operator()(int pos) const {
        return static_cast<int>((code_ >> shift(pos)) & 0xFULL) + 1;
    }
    std::vector<int> one_line() const;

    Permutation inverse() const;
    // Inversion count; equals the length of any reduced word.
    int length() const;
    bool is_identity() const;

    uint64_t code() const { return code_; }

    bool operator==(const Permutation& o) const = default;
    // Rank first, then one-line lexicographic.
    std::strong_ordering operator<=>(const Permutation& o) const {
        if (n_ != o.n_) return n_ <=> o.n_;
        return code_ <=> o.code_;
    }

    // "45312" for n <= 9, "4,5,3,1,2" otherwise.
    std::string str() const;
    // Accepts both digit-string (n <= 9) and comma-separated forms.
    static Permutation parse(const std::string& text);

private:
    static int shift(int pos) { return 4 * (kMaxRank - pos); }

    uint8_t n_;
    uint64_t code_;
};

struct PermHash {
    size_t operator()(const Permutation& p) const {
        // splitmix64 finalizer; the raw code is too regular to use directly
        uint64_t x = p.code() ^ (uint64_t(p.rank()) << 60);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return static_cast<size_t>(x);
    }
};

// Composition under the fixed convention (u∘v)(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);

// Bruhat order via the rank-matrix (dot-count) criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

// True iff some subsequence of w's one-line values is order-isomorphic to p.
bool pattern_contains(const Permutation& w, const Permutation& p);

// Embed p into the identity of S_n starting at position k.
Permutation translate(const Permutation& p, int k, int n);

// A word is a sequence of simple-reflection indices, evaluated left to right.
using Word = std::vector<int>;

Permutation word_to_perm(const Word& word, int n);
bool is_reduced(const Word& word, int n);

std::string word_str(const Word& word);

}  // namespace strictbs
