#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewopt/graph.hpp"

namespace skewopt {

struct EnumerateOptions {
    bool connected = true;
    // Keep only graphs with the even neighborhood property, and prune the
    // generation tree with the parity test as vertex pairs close.
    bool even_neighborhood = true;
    std::optional<CliqueLevel> clique_level;
    bool force = false;           // allow n beyond the measured feasibility bound
    std::uint64_t max_nodes = 0;  // 0 = unlimited
};

// One representative per isomorphism class of k-regular graphs on n
// vertices, generated by completing one vertex at a time with untouched
// vertices collapsed to a single candidate, then deduplicated by canonical
// form. Output graphs are canonically labeled and sorted by certificate.
std::vector<UndirectedGraph> enumerate_regular(int k, int n, const EnumerateOptions& options = {});

// Largest n the enumeration handles comfortably for this k (measured, not
// theoretical). The CLI refuses larger orders without --force.
int enumeration_bound(int k);

}  // namespace skewopt
