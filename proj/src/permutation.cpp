#include "strictbs/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace strictbs {

Permutation::Permutation(const std::vector<int>& one_line) {
    const int n = static_cast<int>(one_line.size());
    if (n < 1 || n > kMaxRank)
        throw std::invalid_argument("permutation rank must be in [1," +
                                    std::to_string(kMaxRank) + "]");
    uint64_t seen = 0;
    uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
        const int v = one_line[i];
        if (v < 1 || v > n)
            throw std::invalid_argument("one-line value out of range: " + std::to_string(v));
        if (seen & (1ULL << v))
            throw std::invalid_argument("repeated one-line value: " + std::to_string(v));
        seen |= 1ULL << v;
        code |= static_cast<uint64_t>(v - 1) << shift(i + 1);
    }
    n_ = static_cast<uint8_t>(n);
    code_ = code;
}

Permutation Permutation::identity(int n) {
    if (n < 1 || n > kMaxRank) throw std::invalid_argument("bad rank");
    Permutation p;
    p.n_ = static_cast<uint8_t>(n);
    p.code_ = 0;
    for (int i = 1; i <= n; ++i)
        p.code_ |= static_cast<uint64_t>(i - 1) << shift(i);
    return p;
}

Permutation Permutation::simple(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple reflection index out of range");
    return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n))
        throw std::invalid_argument("transposition indices out of range");
    Permutation p = identity(n);
    const uint64_t vi = (p.code_ >> shift(i)) & 0xFULL;
    const uint64_t vj = (p.code_ >> shift(j)) & 0xFULL;
    p.code_ &= ~((0xFULL << shift(i)) | (0xFULL << shift(j)));
    p.code_ |= (vj << shift(i)) | (vi << shift(j));
    return p;
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> v(n_);
    for (int i = 1; i <= n_; ++i) v[i - 1] = (*this)(i);
    return v;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.n_ = n_;
    p.code_ = 0;
    for (int i = 1; i <= n_; ++i)
        p.code_ |= static_cast<uint64_t>(i - 1) << shift((*this)(i));
    return p;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 1; i < n_; ++i) {
        const int vi = (*this)(i);
        for (int j = i + 1; j <= n_; ++j)
            if (vi > (*this)(j)) ++inv;
    }
    return inv;
}

bool Permutation::is_identity() const { return *this == identity(n_); }

std::string Permutation::str() const {
    std::string out;
    for (int i = 1; i <= n_; ++i) {
        if (n_ > 9 && i > 1) out += ',';
        out += std::to_string((*this)(i));
    }
    return out;
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> vals;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed permutation: " + text);
            }
            if (pos != tok.size())
                throw std::invalid_argument("malformed permutation: " + text);
            vals.push_back(v);
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("malformed permutation: " + text);
            vals.push_back(c - '0');
        }
    }
    if (vals.empty()) throw std::invalid_argument("empty permutation string");
    return Permutation(vals);
}

Permutation compose(const Permutation& u, const Permutation& v) {
    if (u.rank() != v.rank()) throw std::invalid_argument("rank mismatch in compose");
    const int n = u.rank();
    std::vector<int> vals(n);
    for (int i = 1; i <= n; ++i) vals[i - 1] = u(v(i));
    return Permutation(vals);
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.rank() != w.rank()) throw std::invalid_argument("rank mismatch in bruhat_leq");
    if (u == w) return true;
    const int n = u.rank();
    // u <= w iff r_u(i,j) >= r_w(i,j) for all i,j, with r(i,j) = #{a<=i : p(a)<=j}.
    int ru[kMaxRank + 1] = {0};
    int rw[kMaxRank + 1] = {0};
    for (int i = 1; i < n; ++i) {
        for (int j = u(i); j <= n; ++j) ++ru[j];
        for (int j = w(i); j <= n; ++j) ++rw[j];
        for (int j = 1; j < n; ++j)
            if (ru[j] < rw[j]) return false;
    }
    return true;
}

namespace {

bool contains_from(const Permutation& w, const Permutation& p,
                   int wpos, int ppos, std::vector<int>& picked) {
    const int pn = p.rank();
    if (ppos > pn) return true;
    const int wn = w.rank();
    for (int i = wpos; i <= wn - (pn - ppos); ++i) {
        // check order-isomorphy of w(i) against already picked values
        bool ok = true;
        for (int t = 0; t < ppos - 1 && ok; ++t) {
            const bool want = p(t + 1) < p(ppos);
            const bool have = picked[t] < w(i);
            ok = want == have;
        }
        if (!ok) continue;
        picked[ppos - 1] = w(i);
        if (contains_from(w, p, i + 1, ppos + 1, picked)) return true;
    }
    return false;
}

}  // namespace

bool pattern_contains(const Permutation& w, const Permutation& p) {
    if (p.rank() > w.rank())
        throw std::invalid_argument("pattern rank exceeds permutation rank");
    std::vector<int> picked(p.rank());
    return contains_from(w, p, 1, 1, picked);
}

Permutation translate(const Permutation& p, int k, int n) {
    const int m = p.rank();
    if (k < 1 || k + m - 1 > n)
        throw std::invalid_argument("translation start out of range");
    std::vector<int> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = i + 1;
    for (int i = 0; i < m; ++i) vals[k - 1 + i] = p(i + 1) + (k - 1);
    return Permutation(vals);
}

Permutation word_to_perm(const Word& word, int n) {
    Permutation p = Permutation::identity(n);
    std::vector<int> vals = p.one_line();
    for (int letter : word) {
        if (letter < 1 || letter >= n)
            throw std::invalid_argument("word letter out of range: " + std::to_string(letter));
        std::swap(vals[letter - 1], vals[letter]);  // right-multiply by s_letter
    }
    return Permutation(vals);
}

bool is_reduced(const Word& word, int n) {
    return word_to_perm(word, n).length() == static_cast<int>(word.size());
}

std::string word_str(const Word& word) {
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += 's' + std::to_string(word[i]);
    }
    return out;
}

}  // namespace strictbs
