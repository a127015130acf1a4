#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

#include "lwl/graph.hpp"

namespace lwl {

using BigInt = boost::multiprecision::cpp_int;

/// Exact count plus the wall time it took to compute.
struct CountResult {
    BigInt value;
    double seconds = 0.0;
};

/// Size caps for the brute-force counters. Counts grow like n^|V(F)|, so
/// these are hard errors rather than soft warnings.
struct OracleLimits {
    int max_pattern = 12;
    int max_host = 64;
    int max_iso = 16;
    int max_spasm = 8;
};

class OracleBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Number of edge-preserving maps V(f) -> V(g). Backtracking in a
/// connectivity-respecting order; disconnected patterns factor into a
/// product over components.
CountResult hom_count(const Graph& f, const Graph& g, const OracleLimits& limits = {});

/// Number of injective edge-preserving maps V(f) -> V(g).
CountResult sub_count(const Graph& f, const Graph& g, const OracleLimits& limits = {});

/// Injective homomorphisms of the L-cycle into g that pin a fixed cycle
/// vertex to v; equals twice the number of distinct L-cycles through v.
CountResult rooted_sub_cycle(const Graph& g, int v, int cycle_len);

/// All pairwise non-isomorphic surjective homomorphic images of f:
/// partitions of V(f) with no block containing two adjacent vertices,
/// quotiented to simple graphs and deduplicated by brute-force
/// isomorphism.
std::vector<Graph> spasm(const Graph& f, const OracleLimits& limits = {});

/// Exact isomorphism by pruned permutation search behind degree-sequence
/// and color-refinement prefilters.
bool is_iso_bruteforce(const Graph& f, const Graph& g, const OracleLimits& limits = {});

bool is_forest(const Graph& g);

}  // namespace lwl
