#include "strictbs/cache_file.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "strictbs/singularity.hpp"

namespace strictbs {

namespace {

struct RawEntry {
    Permutation w;
    MemoEntry entry;
};

bool parse_header(const std::string& line, int rank) {
    std::istringstream in(line);
    std::string magic;
    int version = 0, file_rank = 0;
    in >> magic >> version >> file_rank;
    return !in.fail() && magic == "strictbs-cache" && version == kCacheFormatVersion &&
           file_rank == rank;
}

bool header_compatible(const std::string& path, int rank) {
    std::ifstream in(path);
    std::string line;
    return in && std::getline(in, line) && parse_header(line, rank);
}

std::vector<RawEntry> read_entries(const std::string& path, int rank) {
    std::vector<RawEntry> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    if (!std::getline(in, line) || !parse_header(line, rank)) return out;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string perm_str, status;
        if (!(ls >> perm_str >> status)) continue;
        try {
            RawEntry raw;
            raw.w = Permutation::parse(perm_str);
            if (raw.w.rank() != rank) continue;
            if (status == "smooth") {
                raw.entry.status = ResolveStatus::Smooth;
            } else if (status == "unresolvable") {
                raw.entry.status = ResolveStatus::Unresolvable;
            } else if (status == "resolvable") {
                std::string f1, f2;
                if (!(ls >> f1 >> f2)) continue;
                raw.entry.status = ResolveStatus::Resolvable;
                raw.entry.split.w1 = Permutation::parse(f1);
                raw.entry.split.w2 = Permutation::parse(f2);
                if (raw.entry.split.w1.rank() != rank ||
                    raw.entry.split.w2.rank() != rank)
                    continue;
            } else {
                continue;
            }
            out.push_back(std::move(raw));
        } catch (const std::exception&) {
            // torn or corrupt line; skip
        }
    }
    return out;
}

std::string entry_line(const Permutation& w, const MemoEntry& entry) {
    std::string line = w.str();
    // force comma-separated form for rank safety
    if (w.rank() <= 9) {
        std::string csv;
        for (int i = 1; i <= w.rank(); ++i) {
            if (i > 1) csv += ',';
            csv += std::to_string(w(i));
        }
        line = csv;
    }
    auto comma_form = [](const Permutation& p) {
        std::string s;
        for (int i = 1; i <= p.rank(); ++i) {
            if (i > 1) s += ',';
            s += std::to_string(p(i));
        }
        return s;
    };
    switch (entry.status) {
        case ResolveStatus::Smooth:
            line += " smooth";
            break;
        case ResolveStatus::Unresolvable:
            line += " unresolvable";
            break;
        case ResolveStatus::Resolvable:
            line += " resolvable " + comma_form(entry.split.w1) + " " +
                    comma_form(entry.split.w2);
            break;
    }
    return line;
}

}  // namespace

size_t load_cache_file(const std::string& path, SearchCache& cache) {
    const int rank = cache.rank();
    std::vector<RawEntry> entries = read_entries(path, rank);
    if (entries.empty()) return 0;
    std::unordered_set<uint64_t> present;
    for (const RawEntry& raw : entries) present.insert(raw.w.code());
    size_t adopted = 0;
    for (const RawEntry& raw : entries) {
        if (raw.entry.status == ResolveStatus::Resolvable) {
            auto backed = [&](const Permutation& f) {
                return present.count(f.code()) != 0 || is_smooth_variety(f);
            };
            if (!backed(raw.entry.split.w1) || !backed(raw.entry.split.w2)) continue;
        }
        cache.store(raw.w, raw.entry);
        ++adopted;
    }
    return adopted;
}

CacheWriter::CacheWriter(std::string path, int rank)
    : path_(std::move(path)), rank_(rank) {
    if (header_compatible(path_, rank_)) {
        for (const RawEntry& raw : read_entries(path_, rank_))
            persisted_.insert(raw.w.code());
        return;
    }
    // fresh or incompatible file: rewrite header
    std::ofstream out(path_, std::ios::trunc);
    out << "strictbs-cache " << kCacheFormatVersion << " " << rank_ << "\n";
}

void CacheWriter::checkpoint(const SearchCache& cache) {
    std::ofstream out(path_, std::ios::app);
    if (!out) return;
    for (const auto& [w, entry] : cache.snapshot()) {
        if (persisted_.count(w.code())) continue;
        out << entry_line(w, entry) << "\n";
        persisted_.insert(w.code());
    }
    out.flush();
}

std::string resolve_cache_path(const std::string& path) {
    const char* dir = std::getenv("STRICTBS_CACHE_DIR");
    if (!dir || *dir == '\0') return path;
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    return (std::filesystem::path(dir) / p).string();
}

}  // namespace strictbs
