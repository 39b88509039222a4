#include "strictbs/search.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "strictbs/singularity.hpp"
#include "strictbs/strictness.hpp"

namespace strictbs {

std::optional<MemoEntry> SearchCache::lookup(const Permutation& w) const {
    std::shared_lock lock(mu_);
    if (auto it = map_.find(w.code()); it != map_.end()) return it->second;
    return std::nullopt;
}

void SearchCache::store(const Permutation& w, const MemoEntry& entry) {
    std::unique_lock lock(mu_);
    map_.emplace(w.code(), entry);
}

size_t SearchCache::size() const {
    std::shared_lock lock(mu_);
    return map_.size();
}

std::vector<std::pair<Permutation, MemoEntry>> SearchCache::snapshot() const {
    std::shared_lock lock(mu_);
    std::vector<std::pair<Permutation, MemoEntry>> out;
    out.reserve(map_.size());
    for (const auto& [code, entry] : map_) {
        // rebuild the permutation from its packed code
        std::vector<int> vals;
        vals.reserve(n_);
        for (int i = 1; i <= n_; ++i)
            vals.push_back(static_cast<int>((code >> (4 * (kMaxRank - i))) & 0xF) + 1);
        out.emplace_back(Permutation(vals), entry);
    }
    return out;
}

namespace {

MemoEntry decide(const Permutation& w, SearchCache& cache) {
    if (auto hit = cache.lookup(w)) return *hit;
    MemoEntry entry{ResolveStatus::Unresolvable, {}};
    if (is_smooth_variety(w)) {
        entry.status = ResolveStatus::Smooth;
    } else {
        for (const Split& split : length_additive_splits(w)) {
            // factor checks are memoized and usually cheaper than is_strict
            if (decide(split.w1, cache).status == ResolveStatus::Unresolvable) continue;
            if (decide(split.w2, cache).status == ResolveStatus::Unresolvable) continue;
            if (!is_strict(split)) continue;
            entry.status = ResolveStatus::Resolvable;
            entry.split = split;
            break;
        }
    }
    cache.store(w, entry);
    return entry;
}

std::unique_ptr<ResolutionTree> build_tree(const Permutation& w, SearchCache& cache) {
    const MemoEntry entry = decide(w, cache);
    auto node = std::make_unique<ResolutionTree>();
    node->root = w;
    if (entry.status == ResolveStatus::Resolvable) {
        node->split = entry.split;
        node->left = build_tree(entry.split.w1, cache);
        node->right = build_tree(entry.split.w2, cache);
    }
    return node;
}

}  // namespace

bool resolvable(const Permutation& w, SearchCache& cache) {
    if (w.rank() != cache.rank())
        throw std::invalid_argument("cache rank does not match permutation rank");
    return decide(w, cache).status != ResolveStatus::Unresolvable;
}

std::optional<ResolutionTree> strictly_resolvable(const Permutation& w, SearchCache& cache) {
    if (!resolvable(w, cache)) return std::nullopt;
    return std::move(*build_tree(w, cache));
}

bool validate_tree(const ResolutionTree& tree) {
    if (tree.is_leaf())
        return is_smooth_variety(tree.root) && !tree.left && !tree.right;
    const Split& split = *tree.split;
    if (split.product() != tree.root || !split.length_additive()) return false;
    if (!tree.left || !tree.right) return false;
    if (tree.left->root != split.w1 || tree.right->root != split.w2) return false;
    if (!is_strict(split)) return false;
    return validate_tree(*tree.left) && validate_tree(*tree.right);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs fn(w) over all of S_n on options.jobs threads, honoring the time
// budget; returns the number of items never started.
long parallel_over_sn(int n, const RunOptions& options,
                      const std::function<void(const Permutation&)>& fn) {
    const auto all = symmetric_group(n);
    const auto start = Clock::now();
    std::atomic<size_t> next{0};
    auto cut_off = [&] {
        if (options.stop && options.stop->load()) return true;
        return options.max_seconds > 0 && seconds_since(start) > options.max_seconds;
    };
    auto worker = [&] {
        while (true) {
            if (cut_off()) return;
            const size_t i = next.fetch_add(1);
            if (i >= all->size()) return;
            fn((*all)[i]);
        }
    };
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
        if (options.on_progress) options.on_progress();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        while (next.load() < all->size() && !cut_off()) {
            std::this_thread::sleep_for(std::chrono::milliseconds(200));
            if (options.on_progress) options.on_progress();
        }
        for (auto& t : threads) t.join();
        if (options.on_progress) options.on_progress();
    }
    const size_t started = std::min(next.load(), all->size());
    return static_cast<long>(all->size() - started);
}

}  // namespace

ScanResult scan(int n, SearchCache& cache, const RunOptions& options) {
    if (cache.rank() != n) throw std::invalid_argument("cache rank mismatch");
    const auto start = Clock::now();
    ScanResult result;
    result.n = n;
    std::mutex mu;
    result.remaining = parallel_over_sn(n, options, [&](const Permutation& w) {
        if (is_smooth_variety(w)) return;
        const bool ok = resolvable(w, cache);
        std::lock_guard lock(mu);
        ++result.total_singular;
        if (ok) {
            ++result.resolvable;
        } else {
            result.unresolvable.push_back(w);
        }
    });
    std::sort(result.unresolvable.begin(), result.unresolvable.end());
    result.seconds = seconds_since(start);
    return result;
}

std::vector<Permutation> bruhat_minimal(const std::vector<Permutation>& s) {
    std::vector<Permutation> out;
    for (const Permutation& a : s) {
        bool minimal = true;
        for (const Permutation& b : s) {
            if (b != a && bruhat_leq(b, a)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Permutation pi_n(int n) {
    if (n < 6) throw std::invalid_argument("pi_n requires n >= 6");
    std::vector<int> vals;
    vals.reserve(n);
    vals.push_back(n);
    vals.push_back(3);
    vals.push_back(2);
    for (int v = 4; v <= n - 3; ++v) vals.push_back(v);
    vals.push_back(n - 1);
    vals.push_back(n - 2);
    vals.push_back(1);
    return Permutation(vals);
}

GammaList gamma(int n) {
    if (n < 5) throw std::invalid_argument("gamma requires n >= 5");
    std::set<Permutation> elements;
    if (n == 5) {
        elements.insert(Permutation({4, 5, 3, 1, 2}));
    } else {
        elements.insert(pi_n(n));
        for (const Permutation& p : gamma(n - 1).elements)
            for (int k = 1; k + p.rank() - 1 <= n; ++k)
                elements.insert(translate(p, k, n));
    }
    GammaList out;
    out.n = n;
    out.elements.assign(elements.begin(), elements.end());
    return out;
}

ConjectureReport verify_conjecture(int n, SearchCache& cache, const RunOptions& options) {
    if (cache.rank() != n) throw std::invalid_argument("cache rank mismatch");
    const auto start = Clock::now();
    const GammaList exceptions = gamma(n);
    ConjectureReport report;
    report.n = n;
    std::mutex mu;
    report.remaining = parallel_over_sn(n, options, [&](const Permutation& w) {
        if (is_smooth_variety(w)) {
            std::lock_guard lock(mu);
            ++report.smooth;
            return;
        }
        bool above_exception = false;
        for (const Permutation& v : exceptions.elements) {
            if (bruhat_leq(v, w)) {
                above_exception = true;
                break;
            }
        }
        if (above_exception) {
            std::lock_guard lock(mu);
            ++report.skipped;
            return;
        }
        const bool ok = resolvable(w, cache);
        std::lock_guard lock(mu);
        ++report.checked;
        if (!ok) report.counterexamples.push_back(w);
    });
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    report.seconds = seconds_since(start);
    return report;
}

}  // namespace strictbs
