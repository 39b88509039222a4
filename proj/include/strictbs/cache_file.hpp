#pragma once

#include <string>
#include <unordered_set>

#include "strictbs/search.hpp"

namespace strictbs {

// Line-oriented, append-friendly checkpoint of a SearchCache.
//
//   strictbs-cache <version> <rank>
//   <perm> smooth
//   <perm> unresolvable
//   <perm> resolvable <w1> <w2>
//
// Permutations are comma-separated one-line notation. A file whose header
// version or rank does not match is ignored wholesale. Unparseable trailing
// lines (a killed run) are dropped, and resolvable entries whose split
// factors are neither present nor smooth are dropped as inconsistent.
inline constexpr int kCacheFormatVersion = 1;

// Loads entries into cache. Returns the number of entries adopted; 0 when
// the file is missing or has a mismatched header.
size_t load_cache_file(const std::string& path, SearchCache& cache);

// Incremental writer: appends to a compatible existing file, otherwise
// rewrites it with a fresh header.
class CacheWriter {
public:
    CacheWriter(std::string path, int rank);

    // Appends all memo entries not yet persisted and flushes to disk.
    void checkpoint(const SearchCache& cache);

    const std::string& path() const { return path_; }

private:
    std::string path_;
    int rank_;
    std::unordered_set<uint64_t> persisted_;
};

// Resolves a cache path against the STRICTBS_CACHE_DIR environment variable:
// relative paths land in that directory when it is set.
std::string resolve_cache_path(const std::string& path);

}  // namespace strictbs
