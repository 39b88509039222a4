#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "strictbs/bruhat.hpp"
#include "strictbs/permutation.hpp"

namespace strictbs {

// Witness of a successful recursive strict resolution: leaves are smooth,
// every node's split is strict with both factors resolved below it.
struct ResolutionTree {
    Permutation root;
    std::optional<Split> split;  // empty => smooth leaf
    std::unique_ptr<ResolutionTree> left, right;

    bool is_leaf() const { return !split.has_value(); }
};

enum class ResolveStatus : uint8_t { Smooth, Resolvable, Unresolvable };

struct MemoEntry {
    ResolveStatus status;
    Split split;  // meaningful only when status == Resolvable
};

// Per-rank memo table. Concurrent readers; insertions are idempotent (any
// two workers computing the same w get identical results by determinism).
class SearchCache {
public:
    explicit SearchCache(int n) : n_(n) {}

    int rank() const { return n_; }
    std::optional<MemoEntry> lookup(const Permutation& w) const;
    void store(const Permutation& w, const MemoEntry& entry);
    size_t size() const;
    std::vector<std::pair<Permutation, MemoEntry>> snapshot() const;

private:
    int n_;
    mutable std::shared_mutex mu_;
    std::unordered_map<uint64_t, MemoEntry> map_;
};

// Decision only; memoized.
bool resolvable(const Permutation& w, SearchCache& cache);

// Full witness: a Leaf for smooth w, otherwise the tree built from the first
// (deterministic order) strict split with both factors resolvable; nullopt
// when no such split exists.
std::optional<ResolutionTree> strictly_resolvable(const Permutation& w, SearchCache& cache);

// Re-check a tree node by node, independently of the memo that produced it.
bool validate_tree(const ResolutionTree& tree);

struct RunOptions {
    int jobs = 1;
    // Called from the orchestrating thread roughly once a second while
    // workers run (checkpointing hook); may be empty.
    std::function<void()> on_progress;
    // Stop handing out new work once elapsed seconds exceed this (0 = no
    // limit). Items not started are reported as remaining.
    double max_seconds = 0.0;
    std::atomic<bool>* stop = nullptr;
};

struct ScanResult {
    int n = 0;
    std::vector<Permutation> unresolvable;  // sorted lex
    long total_singular = 0;
    long resolvable = 0;
    long remaining = 0;  // nonzero only when a time budget cut the run short
    double seconds = 0.0;
};

// All singular w in S_n that admit no recursive strict resolution.
ScanResult scan(int n, SearchCache& cache, const RunOptions& options = {});

// Elements of s not strictly above any other element of s.
std::vector<Permutation> bruhat_minimal(const std::vector<Permutation>& s);

// The exceptional permutation n,3,2,4,...,(n-3),(n-1),(n-2),1 (n >= 6).
Permutation pi_n(int n);

struct GammaList {
    int n = 0;
    std::vector<Permutation> elements;  // sorted lex, deduplicated
};

// Recursive exception list: gamma(5) = {45312}; gamma(n) = {pi_n} together
// with all translations of gamma(n-1) into S_n.
GammaList gamma(int n);

struct ConjectureReport {
    int n = 0;
    long checked = 0;    // singular, not above any gamma element, tested
    long skipped = 0;    // singular but above some gamma element
    long smooth = 0;
    long remaining = 0;  // not reached before the time budget expired
    std::vector<Permutation> counterexamples;  // expected empty for n <= 8
    double seconds = 0.0;
};

// Tests every singular w not above gamma(n) for resolvability.
ConjectureReport verify_conjecture(int n, SearchCache& cache, const RunOptions& options = {});

}  // namespace strictbs
