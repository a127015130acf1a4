#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lwl/graph.hpp"

namespace lwl {

class NotCactusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every edge lies on at most one simple cycle, i.e. every biconnected
/// block is a single edge or a chordless cycle.
bool is_cactus(const Graph& g);

/// Cactus whose cycles all have at most r vertices.
bool is_r_cactus(const Graph& g, int r);

/// Width-<=2 tree decomposition of a connected (fan) cactus built from
/// three gadgets: a singleton bag per vertex, a 2-bag per bridge edge, and
/// per cycle an alternating path of 2- and 3-bags rooted at the cycle
/// vertex closest to the root. Fan chords (all incident to that vertex)
/// are covered by the existing cycle bags.
struct TreeDecomposition {
    enum class Gadget { Node, TreeEdge, Cycle };

    Graph tree;
    std::vector<std::vector<int>> bags;  // sorted vertex ids of g
    std::vector<Gadget> kinds;
    int root = 0;

    int width() const;
};

/// Throws NotCactusError when g is not a connected fan cactus. Cycle
/// orientation ties are broken by a relabel-invariant bottom-up canonical
/// code, so isomorphic rooted inputs yield isomorphic decompositions.
TreeDecomposition canonical_tree_decomposition(const Graph& g, int root);

struct TdValidation {
    bool valid = true;
    std::string violation;  // first failed condition, empty when valid

    explicit operator bool() const { return valid; }
};

/// Checks the tree-decomposition axioms: non-empty bags, every edge inside
/// some bag, and per-vertex bag connectivity (plus that `tree` is a tree).
TdValidation validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// Recursive depth where a parent-child step counts only when either
/// endpoint has a singleton bag; returns the maximum over all tree nodes.
int td_depth(const TreeDecomposition& td);

/// Rooted AHU encoding with nodes labeled by (gadget kind, bag size,
/// number of g-edges inside the bag). Equal for isomorphic rooted inputs.
std::string td_canonical_code(const TreeDecomposition& td, const Graph& g);

}  // namespace lwl
