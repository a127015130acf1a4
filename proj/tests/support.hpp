#pragma once

// Shared helpers for the test binaries.

#include <map>
#include <string>
#include <vector>

#include "lwl/generators.hpp"
#include "lwl/graph.hpp"
#include "lwl/oracles.hpp"
#include "lwl/refine.hpp"

namespace lwl::testsupport {

/// All graphs on exactly n vertices up to isomorphism, by incremental
/// one-vertex extension with invariant bucketing and exact isomorphism
/// dedup. Practical through n = 8 (12346 classes).
inline std::vector<Graph> all_graphs_up_to_iso(int n) {
    std::vector<Graph> level{Graph(1)};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, std::vector<Graph>> classes;
        for (const auto& g : level) {
            for (int mask = 0; mask < (1 << (size - 1)); ++mask) {
                Graph h(size);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int b = 0; b < size - 1; ++b)
                    if (mask >> b & 1) h.add_edge(b, size - 1);
                const std::string key =
                    std::to_string(h.num_edges()) + "#" + invariant_fingerprint(h, MethodSpec::wl1());
                auto& bucket = classes[key];
                bool fresh = true;
                for (const auto& seen : bucket)
                    if (is_iso_bruteforce(seen, h)) {
                        fresh = false;
                        break;
                    }
                if (fresh) bucket.push_back(h);
            }
        }
        level.clear();
        for (auto& [key, bucket] : classes)
            for (auto& g : bucket) level.push_back(std::move(g));
    }
    return level;
}

inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
    std::vector<Graph> out;
    for (auto& g : all_graphs_up_to_iso(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace lwl::testsupport
