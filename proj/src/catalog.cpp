#include "skewopt/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "skewopt/canonical.hpp"

namespace skewopt {

namespace {

int thread_count(int requested, size_t jobs) {
    int t = requested;
    if (t <= 0) {
        if (const char* env = std::getenv("SKEWOPT_THREADS")) t = std::atoi(env);
    }
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    if (t <= 0) t = 1;
    return static_cast<int>(std::min<size_t>(t, jobs ? jobs : 1));
}

}  // namespace

std::vector<CatalogEntry> build_catalog(int k, const std::vector<int>& orders, int threads,
                                        bool force) {
    std::vector<CatalogEntry> entries;
    for (int n : orders) {
        EnumerateOptions opt;
        opt.force = force;
        for (UndirectedGraph& g : enumerate_regular(k, n, opt)) {
            CatalogEntry e;
            e.order = n;
            e.certificate = canonical_form(g).certificate;
            e.clique_level = classify_clique_level(g);
            e.graph = std::move(g);
            entries.push_back(std::move(e));
        }
    }

    std::atomic<size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (;;) {
                size_t i = cursor.fetch_add(1);
                if (i >= entries.size()) return;
                CatalogEntry& e = entries[i];
                SearchCertificate cert = find_optimum_orientation(e.graph, k);
                e.search_nodes = cert.nodes_explored;
                if (cert.outcome == SearchOutcome::Found) {
                    e.orientable = true;
                    e.witness = std::move(cert.witness);
                } else {
                    e.orientable = false;
                    e.classes_covered = cert.classes_covered;
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            cursor.store(entries.size());
        }
    };

    int t = thread_count(threads, entries.size());
    if (t <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < t; i++) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.certificate < b.certificate;
    });
    return entries;
}

}  // namespace skewopt
