// strictbs: decide strict Bott-Samelson resolvability of Schubert varieties.

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <iostream>
#include <memory>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "strictbs/cache_file.hpp"
#include "strictbs/search.hpp"
#include "strictbs/singularity.hpp"
#include "strictbs/strictness.hpp"

using json = nlohmann::json;
using namespace strictbs;

namespace {

std::atomic<bool> g_interrupted{false};

void handle_sigint(int) { g_interrupted.store(true); }

// rank-safe serialized form: always comma-separated
std::string comma_form(const Permutation& p) {
    std::string s;
    for (int i = 1; i <= p.rank(); ++i) {
        if (i > 1) s += ',';
        s += std::to_string(p(i));
    }
    return s;
}

bool no_timing() {
    const char* v = std::getenv("STRICTBS_NO_TIMING");
    return v && *v && std::string(v) != "0";
}

double report_seconds(double seconds) { return no_timing() ? 0.0 : seconds; }

void print_tree(const ResolutionTree& tree, std::ostream& out, int depth) {
    for (int i = 0; i < depth; ++i) out << "  ";
    if (tree.is_leaf()) {
        out << tree.root.str() << "  (smooth)\n";
        return;
    }
    out << tree.root.str() << " = " << tree.split->w1.str() << " * "
        << tree.split->w2.str() << "\n";
    print_tree(*tree.left, out, depth + 1);
    print_tree(*tree.right, out, depth + 1);
}

json tree_json(const ResolutionTree& tree) {
    json node;
    node["root"] = comma_form(tree.root);
    if (tree.is_leaf()) {
        node["smooth"] = true;
    } else {
        node["split"] = {comma_form(tree.split->w1), comma_form(tree.split->w2)};
        node["left"] = tree_json(*tree.left);
        node["right"] = tree_json(*tree.right);
    }
    return node;
}

struct CommonFlags {
    std::string format = "text";
    int jobs = 0;
    std::string cache_path;
    double flush_interval = 10.0;
    double max_seconds = 0.0;
};

int effective_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Shared scan/verify plumbing: optional resumable cache plus periodic flush.
struct CheckpointedRun {
    SearchCache cache;
    std::unique_ptr<CacheWriter> writer;
    std::mutex writer_mu;
    RunOptions options;

    CheckpointedRun(int n, const CommonFlags& flags) : cache(n) {
        options.jobs = effective_jobs(flags.jobs);
        options.max_seconds = flags.max_seconds;
        options.stop = &g_interrupted;
        if (!flags.cache_path.empty()) {
            const std::string path = resolve_cache_path(flags.cache_path);
            load_cache_file(path, cache);
            writer = std::make_unique<CacheWriter>(path, n);
            auto last = std::make_shared<std::chrono::steady_clock::time_point>(
                std::chrono::steady_clock::now());
            const double interval = flags.flush_interval;
            options.on_progress = [this, last, interval] {
                const auto now = std::chrono::steady_clock::now();
                if (std::chrono::duration<double>(now - *last).count() < interval) return;
                *last = now;
                std::lock_guard lock(writer_mu);
                writer->checkpoint(cache);
            };
        }
    }

    void final_flush() {
        if (!writer) return;
        std::lock_guard lock(writer_mu);
        writer->checkpoint(cache);
    }
};

int cmd_resolve(const std::string& perm_str, const CommonFlags& flags) {
    Permutation w;
    try {
        w = Permutation::parse(perm_str);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    SearchCache cache(w.rank());
    const auto tree = strictly_resolvable(w, cache);
    if (flags.format == "json") {
        json out;
        out["command"] = "resolve";
        out["rank"] = w.rank();
        out["resolvable"] = tree.has_value();
        if (tree) out["tree"] = tree_json(*tree);
        std::cout << out.dump(2) << "\n";
    } else if (tree) {
        print_tree(*tree, std::cout, 0);
    } else {
        std::cout << "no strict resolution\n";
    }
    return tree ? 0 : 1;
}

int cmd_scan(int n, const CommonFlags& flags) {
    CheckpointedRun run(n, flags);
    const ScanResult result = scan(n, run.cache, run.options);
    run.final_flush();
    if (flags.format == "json") {
        json out;
        out["command"] = "scan";
        out["rank"] = n;
        json results = json::array();
        for (const Permutation& w : result.unresolvable) results.push_back(comma_form(w));
        out["results"] = results;
        out["summary"] = {{"checked", result.total_singular},
                          {"resolvable", result.resolvable},
                          {"unresolvable", static_cast<long>(result.unresolvable.size())},
                          {"remaining", result.remaining},
                          {"seconds", report_seconds(result.seconds)}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const Permutation& w : result.unresolvable) std::cout << w.str() << "\n";
        std::cout << "singular: " << result.total_singular
                  << "  resolvable: " << result.resolvable
                  << "  unresolvable: " << result.unresolvable.size();
        if (result.remaining) std::cout << "  remaining: " << result.remaining;
        if (!no_timing()) std::cout << "  seconds: " << result.seconds;
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(int n, const CommonFlags& flags) {
    CheckpointedRun run(n, flags);
    const ConjectureReport report = verify_conjecture(n, run.cache, run.options);
    run.final_flush();
    if (flags.format == "json") {
        json out;
        out["command"] = "verify";
        out["rank"] = n;
        json results = json::array();
        for (const Permutation& w : report.counterexamples) results.push_back(comma_form(w));
        out["results"] = results;
        out["summary"] = {{"checked", report.checked},
                          {"skipped", report.skipped},
                          {"smooth", report.smooth},
                          {"remaining", report.remaining},
                          {"counterexamples", static_cast<long>(report.counterexamples.size())},
                          {"seconds", report_seconds(report.seconds)}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const Permutation& w : report.counterexamples)
            std::cout << "counterexample: " << w.str() << "\n";
        std::cout << "checked: " << report.checked << "  skipped: " << report.skipped
                  << "  smooth: " << report.smooth
                  << "  counterexamples: " << report.counterexamples.size();
        if (report.remaining) std::cout << "  remaining: " << report.remaining;
        if (!no_timing()) std::cout << "  seconds: " << report.seconds;
        std::cout << "\n";
    }
    return report.counterexamples.empty() ? 0 : 1;
}

int cmd_gamma(int n, const CommonFlags& flags) {
    const GammaList list = gamma(n);
    if (flags.format == "json") {
        json out;
        out["command"] = "gamma";
        out["rank"] = n;
        json results = json::array();
        for (const Permutation& w : list.elements) results.push_back(comma_form(w));
        out["results"] = results;
        out["summary"] = {{"count", static_cast<long>(list.elements.size())}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const Permutation& w : list.elements) std::cout << w.str() << "\n";
    }
    return 0;
}

int cmd_singular_locus(const std::string& perm_str, const CommonFlags& flags) {
    Permutation w;
    try {
        w = Permutation::parse(perm_str);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const auto profile = singular_profile(w);
    if (flags.format == "json") {
        json out;
        out["command"] = "singular-locus";
        out["rank"] = w.rank();
        json maximal = json::array();
        for (const Permutation& v : profile->maximal_singular)
            maximal.push_back(comma_form(v));
        json points = json::array();
        for (const Permutation& v : profile->singular_points) points.push_back(comma_form(v));
        out["results"] = {{"maximal", maximal}, {"singular_points", points}};
        out["summary"] = {{"smooth", profile->singular_points.empty()}};
        std::cout << out.dump(2) << "\n";
    } else if (profile->singular_points.empty()) {
        std::cout << "smooth\n";
    } else {
        std::cout << "maximal singular components:";
        for (const Permutation& v : profile->maximal_singular) std::cout << " " << v.str();
        std::cout << "\nsingular points (" << profile->singular_points.size() << "):";
        for (const Permutation& v : profile->singular_points) std::cout << " " << v.str();
        std::cout << "\n";
    }
    return 0;
}

int cmd_bsni(const std::string& tuple_str, int rank, const CommonFlags& flags) {
    BSTuple q;
    try {
        q = BSTuple::parse(tuple_str, rank);
        if (!q.reduced()) {
            std::cerr << "error: tuple is not reduced\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const auto subs = nonreduced_codim1_subtuples(q);
    if (flags.format == "json") {
        json out;
        out["command"] = "bsni";
        out["rank"] = q.rank();
        json results = json::array();
        for (const BSTuple& sub : subs) results.push_back(sub.str());
        out["results"] = results;
        out["summary"] = {{"count", static_cast<long>(subs.size())}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const BSTuple& sub : subs) std::cout << sub.str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, handle_sigint);

    CLI::App app{"strict Bott-Samelson resolution search for Schubert varieties"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string perm_str, tuple_str;
    int rank = 0, tuple_rank = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", flags.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_run_flags = [&](CLI::App* sub) {
        add_format(sub);
        sub->add_option("--jobs", flags.jobs, "worker threads (default: all cores)");
        sub->add_option("--cache", flags.cache_path,
                        "checkpoint file (resumable; relative paths land in "
                        "$STRICTBS_CACHE_DIR)");
        sub->add_option("--flush-interval", flags.flush_interval,
                        "seconds between cache flushes");
        sub->add_option("--max-seconds", flags.max_seconds,
                        "stop handing out work after this many seconds (0 = run "
                        "to completion)");
    };

    auto* resolve = app.add_subcommand("resolve", "find a strict resolution tree");
    resolve->add_option("permutation", perm_str)->required();
    add_format(resolve);

    auto* scan_cmd = app.add_subcommand("scan", "list unresolvable singular w in S_n");
    scan_cmd->add_option("n", rank)->required()->check(CLI::Range(4, 16));
    add_run_flags(scan_cmd);

    auto* verify = app.add_subcommand("verify", "check the exception-list conjecture");
    verify->add_option("n", rank)->required()->check(CLI::Range(5, 16));
    add_run_flags(verify);

    auto* gamma_cmd = app.add_subcommand("gamma", "print the exception list");
    gamma_cmd->add_option("n", rank)->required()->check(CLI::Range(5, 16));
    add_format(gamma_cmd);

    auto* locus = app.add_subcommand("singular-locus", "singular fixed points of X^w");
    locus->add_option("permutation", perm_str)->required();
    add_format(locus);

    auto* bsni = app.add_subcommand("bsni", "non-reduced codimension-1 sub-tuples");
    bsni->add_option("tuple", tuple_str, "e.g. 132312, 13-312 or (1323,1,2)")->required();
    bsni->add_option("--n", tuple_rank, "rank (default: inferred from letters)");
    add_format(bsni);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (resolve->parsed()) return cmd_resolve(perm_str, flags);
        if (scan_cmd->parsed()) return cmd_scan(rank, flags);
        if (verify->parsed()) return cmd_verify(rank, flags);
        if (gamma_cmd->parsed()) return cmd_gamma(rank, flags);
        if (locus->parsed()) return cmd_singular_locus(perm_str, flags);
        if (bsni->parsed()) return cmd_bsni(tuple_str, tuple_rank, flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
