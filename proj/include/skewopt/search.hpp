#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewopt/orientation.hpp"

namespace skewopt {

enum class SearchOutcome { Found, None };

// Result of an optimum-orientation search. On None the search certifies
// exhaustion: classes_covered equals 2^(m-n+1), the number of switching
// classes of a connected graph, all refuted.
struct SearchCertificate {
    SearchOutcome outcome = SearchOutcome::None;
    std::optional<Orientation> witness;
    std::uint64_t nodes_explored = 0;
    std::uint64_t classes_covered = 0;
    double wall_time = 0.0;
};

struct SearchOptions {
    std::uint64_t max_nodes = 0;  // 0 = unlimited
    bool collect_all = false;     // keep every witness in the quotient
};

// Backtracking over the m-n+1 non-tree edge signs of a connected k-regular
// graph; spanning-tree arcs are pinned parent -> child, which visits each
// switching class exactly once. Prunes through incremental two-walk balance
// counters and propagates forced signs to a fixpoint before branching.
// Graphs failing the even-neighborhood parity test short-circuit to None.
SearchCertificate find_optimum_orientation(const UndirectedGraph& g, int k,
                                           const SearchOptions& options = {});

// Every optimum orientation in the switching quotient, in search order.
std::vector<Orientation> all_optimum_orientations(const UndirectedGraph& g, int k,
                                                  std::uint64_t max_nodes = 0);

// Independent oracle: tries all 2^m orientations directly. Node count is the
// number of orientations examined.
SearchCertificate brute_force_search(const UndirectedGraph& g, int k);

}  // namespace skewopt
