#pragma once

#include <string>
#include <vector>

#include "skewopt/orientation.hpp"

namespace skewopt {

// The fixed optimum orientations shipped with the library, named after their
// catalog indices: G4 (n=8), G16 and G17 (n=12), G31 (n=24). All satisfy
// S^T S = 5 I exactly.
enum class FixedMatrix { G4, G16, G17, G31 };

Orientation fixed_orientation(FixedMatrix which);

// Prism lift: from an orientation with S^T S = k I on n vertices to one with
// S^T S = (k+1) I on 2n vertices, via the block matrix [[S, I], [-I, -S]].
// The underlying graph equals cartesian_product(P2, graph) with the same
// vertex numbering. Throws if the input is not optimum for its degree.
Orientation p2_lift(const Orientation& o);

// Block-tridiagonal family of 5-regular optimum orientations, defined for
// every n divisible by 4 with n >= 12. The terminating blocks differ with
// the parity of n/4.
Orientation g12_family(int n);

// Two-block family of 5-regular optimum orientations, defined for every n
// divisible by 4 with n >= 16.
Orientation g26_family(int n);

// Optimum orientation of the d-dimensional hypercube, built by iterating the
// prism lift from a single oriented edge. S^T S = d I on 2^d vertices.
Orientation hypercube_orientation(int d);

struct BlockIdentity {
    std::string name;
    bool ok = false;
};

// Evaluates every block identity behind g12_family and g26_family with exact
// integer arithmetic and reports each one.
std::vector<BlockIdentity> block_identities();

}  // namespace skewopt
