#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lwl/graph.hpp"
#include "lwl/paths.hpp"

namespace lwl {

enum class MethodKind { Wl1, Loopy, Kwl };

/// Which refinement to run. Loopy carries the path order r, k-WL the
/// tuple order k.
struct MethodSpec {
    MethodKind kind = MethodKind::Wl1;
    int r = 0;
    int k = 2;

    static MethodSpec wl1() { return {MethodKind::Wl1, 0, 0}; }
    static MethodSpec loopy(int r) { return {MethodKind::Loopy, r, 0}; }
    static MethodSpec kwl(int k) { return {MethodKind::Kwl, 0, k}; }

    std::string name() const;
};

struct RefineOptions {
    /// 0 means run until the partition is stable (bounded by the unit count).
    int max_iters = 0;
    /// Append adjacency-to-center bits to every path tuple (the stronger
    /// signature variant; off reproduces the plain update).
    bool atp = false;
    /// Use the plain-WL-on-the-tuple-graph k-WL variant instead of the
    /// oblivious position-wise one.
    bool kwl_literal = false;
    std::size_t kwl_tuple_limit = 1'000'000;
    std::size_t path_budget = kDefaultPathBudget;
    /// Optional initial vertex labels (defaults to a uniform coloring).
    std::vector<int> seed_labels;
};

/// Colors are dense canonical ranks 0..num_colors-1: within each round the
/// distinct signatures are sorted and numbered in order, so ids are
/// reproducible across runs and machines.
struct Coloring {
    std::vector<int> colors;
    int round = 0;
    int num_colors = 0;
};

struct RefinementResult {
    std::vector<Coloring> history;  // rounds 0..iterations
    Coloring stable;
    int iterations = 0;
    /// Canonical transcript of the whole run (per-round sorted signature
    /// tables with multiplicities). Equal strings iff equal invariants;
    /// comparable across independent runs.
    std::string graph_invariant;
};

/// Classic 1-WL color refinement.
RefinementResult wl1_refine(const Graph& g, const RefineOptions& opts = {});

/// Loopy refinement of order r: each round hashes, besides the neighbor
/// color multiset, the multiset of color tuples along every stored path of
/// length q for q = 1..r. Requires pn.max_length() >= r.
RefinementResult loopy_refine(const Graph& g, const PathNeighborhood& pn, int r,
                              const RefineOptions& opts = {});

/// k-WL over all n^k tuples (k in {2,3}). Initial colors are the ordered
/// atomic types; the oblivious update replaces one coordinate at a time.
RefinementResult kwl_refine(const Graph& g, int k, const RefineOptions& opts = {});

/// Dispatch on MethodSpec (computes the path neighborhood itself for loopy).
RefinementResult refine(const Graph& g, const MethodSpec& method, const RefineOptions& opts = {});

struct CompareResult {
    bool distinguished = false;
    int iterations = 0;
    std::string invariant_g;
    std::string invariant_h;
};

/// Refines the disjoint union so color ids are shared, then compares the
/// per-side stable histograms.
CompareResult compare_graphs(const Graph& g, const Graph& h, const MethodSpec& method,
                             const RefineOptions& opts = {});

/// Run-independent canonical invariant string for bucketing; equal
/// fingerprints iff equal graph invariants under the method.
std::string invariant_fingerprint(const Graph& g, const MethodSpec& method,
                                  const RefineOptions& opts = {});

}  // namespace lwl
