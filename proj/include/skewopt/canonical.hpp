#pragma once

#include <string>
#include <vector>

#include "skewopt/graph.hpp"

namespace skewopt {

struct CanonicalForm {
    std::vector<int> labeling;  // labeling[old] = canonical index
    std::string certificate;    // graph6 of the relabeled graph
};

// Canonical labeling by equitable refinement plus backtracking over the
// refinement-stable cells, with orbit pruning from discovered automorphisms.
// Two graphs are isomorphic iff their certificates compare equal. Exact but
// exponential in the worst case; intended for n <= 32 (hard cap 64).
CanonicalForm canonical_form(const UndirectedGraph& g);

bool isomorphic(const UndirectedGraph& a, const UndirectedGraph& b);

}  // namespace skewopt
