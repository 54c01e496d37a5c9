#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewopt/enumerate.hpp"
#include "skewopt/search.hpp"

namespace skewopt {

struct CatalogEntry {
    UndirectedGraph graph;  // canonically labeled
    std::string certificate;
    int order = 0;
    CliqueLevel clique_level = CliqueLevel::TriangleFree;
    bool orientable = false;
    std::optional<Orientation> witness;
    std::uint64_t search_nodes = 0;
    std::uint64_t classes_covered = 0;  // set when not orientable
};

// Enumerates the connected k-regular even-neighborhood graphs at each order
// and answers orientability for every one. Independent searches may run in
// parallel (threads = 0 picks SKEWOPT_THREADS or the hardware count); the
// result is sorted by (order, certificate) and does not depend on the thread
// count.
std::vector<CatalogEntry> build_catalog(int k, const std::vector<int>& orders, int threads = 0,
                                        bool force = false);

}  // namespace skewopt
