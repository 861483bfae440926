#pragma once

// Shared test support: fixture loading, independent oracles and random
// taxonomy generators. The oracles here deliberately avoid the library's
// search implementations.

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "taxsim/taxsim.hpp"

namespace testsupport {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

inline taxsim::Taxonomy load_fixture(const std::string& name) {
    return taxsim::Taxonomy::parse(read_file(fixture_path(name)));
}

/// Exhaustive-walk oracle for the direction-change-penalized length.
///
/// Enumerates every walk that never repeats a (concept, direction) state
/// and has at most 2*|C| edges; that class contains the optimum of any
/// least-cost state search. Tractable only for small taxonomies.
inline int oracle_penalized_len(const taxsim::Taxonomy& tax, taxsim::ConceptId from,
                                taxsim::ConceptId to) {
    if (from == to) return 0;
    const std::size_t n = tax.size();
    const int max_edges = static_cast<int>(2 * n);
    // Achievable starting bound: up to the root, one direction change, down.
    int best = tax.depth(from) + tax.depth(to) +
               ((tax.depth(from) > 0 && tax.depth(to) > 0) ? 1 : 0);
    std::vector<char> visited(n * 2, 0);  // (concept, up/down)

    // dir: 0 = up, 1 = down; last = -1 before the first edge
    auto dfs = [&](auto&& self, taxsim::ConceptId cur, int last, int cost, int edges) -> void {
        if (cur == to) {
            best = std::min(best, cost);
            return;
        }
        if (edges >= max_edges || cost >= best) return;
        auto step = [&](taxsim::ConceptId nxt, int dir) {
            if (visited[nxt * 2 + dir]) return;
            int c = 1 + (last >= 0 && last != dir ? 1 : 0);
            visited[nxt * 2 + dir] = 1;
            self(self, nxt, dir, cost + c, edges + 1);
            visited[nxt * 2 + dir] = 0;
        };
        for (taxsim::ConceptId p : tax.parents(cur)) step(p, 0);
        for (taxsim::ConceptId ch : tax.children(cur)) step(ch, 1);
    };
    dfs(dfs, from, -1, 0, 0);
    return best;
}

/// Set-intersection oracle for common-ancestor queries: all common
/// ancestors, computed via explicit ancestor sets.
inline std::vector<taxsim::ConceptId> oracle_common_ancestors(const taxsim::Taxonomy& tax,
                                                              taxsim::ConceptId c1,
                                                              taxsim::ConceptId c2) {
    auto a1 = tax.ancestors_of(c1);
    auto a2 = tax.ancestors_of(c2);
    std::vector<taxsim::ConceptId> common;
    std::set_intersection(a1.begin(), a1.end(), a2.begin(), a2.end(), std::back_inserter(common));
    return common;
}

/// Random rooted tree with n nodes: node i's parent is uniform in [0, i).
/// Returned as edge-list text so the parser is exercised too.
inline std::string random_tree_text(std::mt19937& rng, std::size_t n) {
    std::string text;
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        text += "c" + std::to_string(i) + "\tc" + std::to_string(pick(rng)) + "\n";
    }
    return text;
}

/// Random rooted DAG: node i gets 1-3 distinct parents among [0, i).
inline std::string random_dag_text(std::mt19937& rng, std::size_t n) {
    std::string text;
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> count_dist(1, std::min<std::size_t>(i, 3));
        std::size_t k = count_dist(rng);
        std::vector<std::size_t> pool(i);
        for (std::size_t j = 0; j < i; ++j) pool[j] = j;
        std::shuffle(pool.begin(), pool.end(), rng);
        for (std::size_t j = 0; j < k; ++j)
            text += "c" + std::to_string(i) + "\tc" + std::to_string(pool[j]) + "\n";
    }
    return text;
}

}  // namespace testsupport
