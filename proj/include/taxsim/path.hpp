#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "taxsim/taxonomy.hpp"

namespace taxsim {

/// Per-pair hierarchy geometry.
///
/// n, n1, n2 are the depths of the least common subsumer and the two
/// concepts. path_len is the shortest up-then-down edge count through a
/// common ancestor. raw_l is the direction-change-penalized walk length;
/// effective_l is raw_l except forced to 0 when one concept subsumes the
/// other.
struct PathInfo {
    ConceptId c1 = kInvalidConcept;
    ConceptId c2 = kInvalidConcept;
    ConceptId lcs = kInvalidConcept;
    int n = 0;
    int n1 = 0;
    int n2 = 0;
    int path_len = 0;
    int raw_l = 0;
    int effective_l = 0;
};

namespace detail {

/// Shortest upward distance (parent edges) from c to each of its ancestors;
/// non-ancestors get -1.
inline std::vector<int> up_distances(const Taxonomy& tax, ConceptId c) {
    std::vector<int> dist(tax.size(), -1);
    std::vector<ConceptId> frontier{c}, next;
    dist[c] = 0;
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (ConceptId cur : frontier) {
            for (ConceptId p : tax.parents(cur)) {
                if (dist[p] < 0) {
                    dist[p] = level;
                    next.push_back(p);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

}  // namespace detail

/// Deepest common subsumer of c1 and c2; ties broken by smallest id.
/// The root is always a common ancestor, so the result is total.
inline ConceptId lcs(const Taxonomy& tax, ConceptId c1, ConceptId c2) {
    std::vector<char> a1(tax.size(), 0), a2(tax.size(), 0);
    tax.ancestor_flags(c1, a1);
    tax.ancestor_flags(c2, a2);
    ConceptId best = kInvalidConcept;
    int best_depth = -1;
    for (ConceptId c = 0; c < tax.size(); ++c) {
        if (a1[c] && a2[c] && tax.depth(c) > best_depth) {
            best = c;
            best_depth = tax.depth(c);
        }
    }
    return best;  // smallest id wins ties because of the ascending scan
}

/// Minimum edge count of an up-then-down walk through any common ancestor.
/// Equals n1 + n2 - 2n on trees.
inline int path_len(const Taxonomy& tax, ConceptId c1, ConceptId c2) {
    if (c1 == c2) return 0;
    auto d1 = detail::up_distances(tax, c1);
    auto d2 = detail::up_distances(tax, c2);
    int best = std::numeric_limits<int>::max();
    for (ConceptId c = 0; c < tax.size(); ++c)
        if (d1[c] >= 0 && d2[c] >= 0 && d1[c] + d2[c] < best) best = d1[c] + d2[c];
    return best;
}

/// Penalized shortest-walk length: every edge costs 1, plus 1 more on each
/// edge whose up/down direction differs from the preceding edge's. The
/// first edge never pays the surcharge.
///
/// Implemented as least-cost search over states (concept, last-direction),
/// which handles multiple inheritance and walks that change direction more
/// than once.
inline int penalized_len(const Taxonomy& tax, ConceptId c1, ConceptId c2) {
    if (c1 == c2) return 0;
    constexpr int kNone = 0, kUp = 1, kDown = 2;
    const std::size_t n = tax.size();
    std::vector<int> dist(n * 3, std::numeric_limits<int>::max());
    using Entry = std::pair<int, std::uint64_t>;  // (cost, state)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

    auto state = [n](ConceptId c, int dir) { return std::uint64_t(dir) * n + c; };
    dist[state(c1, kNone)] = 0;
    heap.emplace(0, state(c1, kNone));

    while (!heap.empty()) {
        auto [cost, s] = heap.top();
        heap.pop();
        if (cost > dist[s]) continue;
        ConceptId cur = static_cast<ConceptId>(s % n);
        int dir = static_cast<int>(s / n);
        if (cur == c2) return cost;

        auto relax = [&](ConceptId to, int move_dir) {
            int step = 1 + (dir != kNone && dir != move_dir ? 1 : 0);
            std::uint64_t ns = state(to, move_dir);
            if (cost + step < dist[ns]) {
                dist[ns] = cost + step;
                heap.emplace(cost + step, ns);
            }
        };
        for (ConceptId p : tax.parents(cur)) relax(p, kUp);
        for (ConceptId ch : tax.children(cur)) relax(ch, kDown);
    }
    return std::numeric_limits<int>::max();  // unreachable: hierarchy is connected
}

/// Full geometry bundle for a pair, consistent with the individual
/// operations above.
inline PathInfo path_info(const Taxonomy& tax, ConceptId c1, ConceptId c2) {
    PathInfo info;
    info.c1 = c1;
    info.c2 = c2;
    info.lcs = lcs(tax, c1, c2);
    info.n = tax.depth(info.lcs);
    info.n1 = tax.depth(c1);
    info.n2 = tax.depth(c2);
    info.path_len = path_len(tax, c1, c2);
    info.raw_l = penalized_len(tax, c1, c2);
    bool same_hierarchy = tax.is_ancestor(c1, c2) || tax.is_ancestor(c2, c1);
    info.effective_l = same_hierarchy ? 0 : info.raw_l;
    return info;
}

}  // namespace taxsim
