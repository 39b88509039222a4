#include "strictbs/strictness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "strictbs/singularity.hpp"

namespace strictbs {

FibreTable fibre_table(const Split& split) {
    if (split.w1.is_identity() || split.w2.is_identity())
        throw std::invalid_argument("split factors must be nontrivial");
    if (!split.length_additive())
        throw std::invalid_argument("split is not length-additive (Q not reduced)");
    FibreTable table;
    table.split = split;
    const auto i1 = interval(split.w1);
    const auto i2 = interval(split.w2);
    table.counts.reserve(i1->size() * i2->size() / 2);
    for (const Permutation& v1 : i1->elements)
        for (const Permutation& v2 : i2->elements)
            ++table.counts[compose(v1, v2)];
    return table;
}

bool is_strict(const Split& split) {
    if (split.w1.is_identity() || split.w2.is_identity())
        throw std::invalid_argument("split factors must be nontrivial");
    if (!split.length_additive())
        throw std::invalid_argument("split is not length-additive (Q not reduced)");
    const Permutation w = split.product();
    const auto profile = singular_profile(w);
    const auto i1 = interval(split.w1);
    const auto i2 = interval(split.w2);
    std::unordered_map<uint64_t, uint32_t> seen;
    seen.reserve(i1->size() * i2->size() / 2);
    // Intervals are in (length, lex) order, so duplicates over short smooth
    // points surface early and abort the scan.
    for (const Permutation& v1 : i1->elements) {
        for (const Permutation& v2 : i2->elements) {
            const Permutation v = compose(v1, v2);
            if (++seen[v.code()] == 2 && !profile->singular_at(v)) return false;
        }
    }
    return true;
}

std::vector<Split> strict_splits(const Permutation& w) {
    std::vector<Split> out;
    for (const Split& split : length_additive_splits(w))
        if (is_strict(split)) out.push_back(split);
    return out;
}

int BSTuple::rank() const {
    if (factors.empty()) throw std::logic_error("empty tuple");
    return factors.front().rank();
}

Permutation BSTuple::product() const {
    Permutation p = Permutation::identity(rank());
    for (const Permutation& f : factors) p = compose(p, f);
    return p;
}

int BSTuple::total_length() const {
    int len = 0;
    for (const Permutation& f : factors) len += f.length();
    return len;
}

bool BSTuple::reduced() const { return product().length() == total_length(); }

BSTuple BSTuple::parse(const std::string& text, int n) {
    std::vector<std::vector<int>> factor_words;
    std::string body = text;
    const bool parenthesized = !text.empty() && text.front() == '(';
    if (parenthesized) {
        if (text.back() != ')') throw std::invalid_argument("unbalanced tuple: " + text);
        body = text.substr(1, text.size() - 2);
        factor_words.emplace_back();
        for (char c : body) {
            if (c == ',') {
                factor_words.emplace_back();
            } else if (c >= '1' && c <= '9') {
                factor_words.back().push_back(c - '0');
            } else if (c == 'e' || c == '-' || c == ' ') {
                // identity marker / separator noise
            } else {
                throw std::invalid_argument("bad tuple character: " + std::string(1, c));
            }
        }
    } else {
        for (char c : body) {
            if (c == '-') {
                factor_words.emplace_back();
            } else if (c >= '1' && c <= '9') {
                factor_words.push_back({c - '0'});
            } else {
                throw std::invalid_argument("bad tuple character: " + std::string(1, c));
            }
        }
    }
    if (factor_words.empty()) throw std::invalid_argument("empty tuple: " + text);
    if (n == 0) {
        for (const auto& word : factor_words)
            for (int letter : word) n = std::max(n, letter + 1);
        if (n == 0) throw std::invalid_argument("cannot infer rank of all-identity tuple");
    }
    BSTuple q;
    for (const auto& word : factor_words) q.factors.push_back(word_to_perm(word, n));
    return q;
}

std::string BSTuple::str() const {
    bool all_letters = true;
    std::string dash;
    for (const Permutation& f : factors) {
        if (f.is_identity()) {
            dash += '-';
        } else if (f.length() == 1 && f.rank() <= 10) {
            int i = 1;
            while (f(i) == i) ++i;
            dash += static_cast<char>('0' + i);
        } else {
            all_letters = false;
            break;
        }
    }
    if (all_letters) return dash;
    std::string out = "(";
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += ',';
        out += factors[i].is_identity() ? std::string("e") : factors[i].str();
    }
    return out + ")";
}

std::vector<BSTuple> nonreduced_codim1_subtuples(const BSTuple& q) {
    if (!q.reduced()) throw std::invalid_argument("tuple is not reduced");
    std::vector<BSTuple> out;
    for (size_t pos = 0; pos < q.factors.size(); ++pos) {
        const Permutation& w_i = q.factors[pos];
        const int li = w_i.length();
        if (li == 0) continue;
        for (const Permutation& v : interval(w_i)->elements) {
            if (v.length() != li - 1) continue;
            BSTuple sub = q;
            sub.factors[pos] = v;
            if (!sub.reduced()) out.push_back(std::move(sub));
        }
    }
    return out;
}

}  // namespace strictbs
