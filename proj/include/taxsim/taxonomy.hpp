#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "taxsim/error.hpp"

namespace taxsim {

/// Dense handle for an interned concept label, in [0, |C|).
using ConceptId = std::uint32_t;

inline constexpr ConceptId kInvalidConcept = std::numeric_limits<ConceptId>::max();

struct TaxonomyReport {
    std::size_t concept_count = 0;
    std::size_t edge_count = 0;
    int max_depth = 0;
    bool is_tree = false;  // every non-root concept has exactly one parent
};

/// Immutable rooted IS-A hierarchy.
///
/// Built from an edge-list document (one `child<TAB>parent` per line).
/// Multiple parents are allowed (DAG); the parent relation must be acyclic,
/// exactly one concept may be parentless (the root), and every concept must
/// be reachable from the root. Depth is the shortest edge count from the
/// root. All queries are read-only and safe for concurrent use.
class Taxonomy {
public:
    /// Parse and validate an edge-list document.
    ///
    /// Lines starting with `#` and blank lines are ignored. Labels are
    /// interned in first-appearance order (child before parent within a
    /// line). Throws taxonomy_error on malformed lines, duplicate edges,
    /// empty input, multiple roots, cycles or unreachable concepts.
    static Taxonomy parse(std::string_view text);

    std::size_t size() const noexcept { return labels_.size(); }
    ConceptId root() const noexcept { return root_; }
    const std::string& label(ConceptId c) const { return labels_[c]; }

    std::optional<ConceptId> find(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Lookup that throws unknown_concept instead of returning nullopt.
    ConceptId require(std::string_view label) const {
        auto id = find(label);
        if (!id) throw taxonomy_error(errc::unknown_concept, std::string(label));
        return *id;
    }

    std::span<const ConceptId> parents(ConceptId c) const {
        return {parents_[c].data(), parents_[c].size()};
    }
    std::span<const ConceptId> children(ConceptId c) const {
        return {children_[c].data(), children_[c].size()};
    }

    /// Edges on a shortest root-to-c path; depth(root) == 0.
    int depth(ConceptId c) const { return depth_[c]; }

    /// Maximum concept depth in edges (the taxonomy depth D).
    int max_depth() const noexcept { return max_depth_; }

    /// All concepts on any parent-path from c to the root, including c
    /// itself and the root. Returned sorted by id.
    std::vector<ConceptId> ancestors_of(ConceptId c) const {
        std::vector<char> seen(size(), 0);
        ancestor_flags(c, seen);
        std::vector<ConceptId> out;
        for (ConceptId i = 0; i < size(); ++i)
            if (seen[i]) out.push_back(i);
        return out;
    }

    /// True iff a is on some parent-path from d to the root (reflexive).
    bool is_ancestor(ConceptId a, ConceptId d) const {
        if (a == d) return true;
        std::vector<char> seen(size(), 0);
        std::vector<ConceptId> stack{d};
        seen[d] = 1;
        while (!stack.empty()) {
            ConceptId cur = stack.back();
            stack.pop_back();
            for (ConceptId p : parents_[cur]) {
                if (p == a) return true;
                if (!seen[p]) { seen[p] = 1; stack.push_back(p); }
            }
        }
        return false;
    }

    /// Marks every ancestor of c (including c) in `flags`; flags must be
    /// zero-initialized with size() entries.
    void ancestor_flags(ConceptId c, std::vector<char>& flags) const {
        std::vector<ConceptId> stack{c};
        flags[c] = 1;
        while (!stack.empty()) {
            ConceptId cur = stack.back();
            stack.pop_back();
            for (ConceptId p : parents_[cur])
                if (!flags[p]) { flags[p] = 1; stack.push_back(p); }
        }
    }

    TaxonomyReport report() const {
        TaxonomyReport r;
        r.concept_count = size();
        r.edge_count = edges_.size();
        r.max_depth = max_depth_;
        r.is_tree = true;
        for (ConceptId c = 0; c < size(); ++c) {
            if (c == root_) continue;
            if (parents_[c].size() != 1) { r.is_tree = false; break; }
        }
        return r;
    }

    /// Edge list in original order; reparsing yields an identical Taxonomy.
    std::string serialize() const {
        std::string out;
        for (auto [child, parent] : edges_) {
            out += labels_[child];
            out += '\t';
            out += labels_[parent];
            out += '\n';
        }
        return out;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, ConceptId> index_;
    std::vector<std::vector<ConceptId>> parents_;
    std::vector<std::vector<ConceptId>> children_;
    std::vector<std::pair<ConceptId, ConceptId>> edges_;  // (child, parent)
    std::vector<int> depth_;
    ConceptId root_ = kInvalidConcept;
    int max_depth_ = 0;

    ConceptId intern(std::string_view label) {
        auto it = index_.find(std::string(label));
        if (it != index_.end()) return it->second;
        ConceptId id = static_cast<ConceptId>(labels_.size());
        labels_.emplace_back(label);
        index_.emplace(labels_.back(), id);
        parents_.emplace_back();
        children_.emplace_back();
        return id;
    }

    static bool blank(std::string_view s) {
        return s.find_first_not_of(" \t\r\f\v") == std::string_view::npos;
    }
};

inline Taxonomy Taxonomy::parse(std::string_view text) {
    Taxonomy tax;
    std::set<std::pair<ConceptId, ConceptId>> seen_edges;

    long line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || blank(line) || line.front() == '#') continue;

        std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos)
            throw taxonomy_error(errc::malformed_line, "expected child<TAB>parent", line_no);
        std::string_view child = line.substr(0, tab);
        std::string_view parent = line.substr(tab + 1);
        if (parent.find('\t') != std::string_view::npos)
            throw taxonomy_error(errc::malformed_line, "extra TAB in line", line_no);
        if (child.empty() || parent.empty() || blank(child) || blank(parent))
            throw taxonomy_error(errc::malformed_line, "empty or whitespace-only label", line_no);

        ConceptId c = tax.intern(child);
        ConceptId p = tax.intern(parent);
        if (!seen_edges.insert({c, p}).second)
            throw taxonomy_error(errc::duplicate_edge,
                                 std::string(child) + " -> " + std::string(parent), line_no);
        tax.edges_.emplace_back(c, p);
        tax.parents_[c].push_back(p);
        tax.children_[p].push_back(c);
    }

    if (tax.edges_.empty())
        throw taxonomy_error(errc::empty_taxonomy, "no edges in input");

    // Root: the unique concept that never appears in the child column.
    std::vector<ConceptId> parentless;
    for (ConceptId c = 0; c < tax.size(); ++c)
        if (tax.parents_[c].empty()) parentless.push_back(c);
    if (parentless.empty())
        throw taxonomy_error(errc::cycle_detected,
                             "no parentless concept; the parent relation contains a cycle");
    if (parentless.size() > 1) {
        std::string msg = tax.labels_[parentless[0]];
        for (std::size_t i = 1; i < parentless.size(); ++i)
            msg += ", " + tax.labels_[parentless[i]];
        throw taxonomy_error(errc::multiple_roots, msg);
    }
    tax.root_ = parentless[0];

    // Kahn's algorithm over the parent relation: leftover in-degree means a cycle.
    {
        std::vector<std::size_t> remaining(tax.size());
        std::vector<ConceptId> stack;
        for (ConceptId c = 0; c < tax.size(); ++c) {
            remaining[c] = tax.children_[c].size();
            if (remaining[c] == 0) stack.push_back(c);
        }
        std::size_t removed = 0;
        while (!stack.empty()) {
            ConceptId c = stack.back();
            stack.pop_back();
            ++removed;
            for (ConceptId p : tax.parents_[c])
                if (--remaining[p] == 0) stack.push_back(p);
        }
        if (removed != tax.size()) {
            for (ConceptId c = 0; c < tax.size(); ++c)
                if (remaining[c] > 0)
                    throw taxonomy_error(errc::cycle_detected,
                                         "cycle through concept " + tax.labels_[c]);
        }
    }

    // Shortest-path depth from the root; unreached concepts are in a
    // component cut off from the root.
    tax.depth_.assign(tax.size(), -1);
    std::deque<ConceptId> queue{tax.root_};
    tax.depth_[tax.root_] = 0;
    while (!queue.empty()) {
        ConceptId c = queue.front();
        queue.pop_front();
        for (ConceptId ch : tax.children_[c]) {
            if (tax.depth_[ch] < 0) {
                tax.depth_[ch] = tax.depth_[c] + 1;
                queue.push_back(ch);
            }
        }
    }
    for (ConceptId c = 0; c < tax.size(); ++c) {
        if (tax.depth_[c] < 0)
            throw taxonomy_error(errc::cycle_detected,
                                 "concept " + tax.labels_[c] + " unreachable from root " +
                                     tax.labels_[tax.root_]);
        tax.max_depth_ = std::max(tax.max_depth_, tax.depth_[c]);
    }
    return tax;
}

}  // namespace taxsim
