#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "taxsim/measures.hpp"

namespace taxsim {

/// Fixed 6-decimal formatting (round-half-even via the correctly rounded
/// binary-to-decimal conversion).
inline std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct MatrixOptions {
    MeasureKind measure = MeasureKind::WP;
    const IcTable* ic = nullptr;
    std::optional<int> depth_override;
    int workers = 1;
    /// Optional label subset; empty means all concepts.
    std::vector<std::string> filter;
};

/// Full pairwise similarity matrix as CSV. Rows and columns are
/// label-lexicographic; cells are 6-decimal. Rows may be fanned out to
/// `workers` threads; the output bytes do not depend on the worker count.
inline std::string pairwise_matrix_csv(const Taxonomy& tax, const MatrixOptions& opts) {
    std::vector<ConceptId> ids;
    if (opts.filter.empty()) {
        ids.resize(tax.size());
        for (ConceptId c = 0; c < tax.size(); ++c) ids[c] = c;
    } else {
        for (const auto& label : opts.filter) ids.push_back(tax.require(label));
    }
    std::sort(ids.begin(), ids.end(),
              [&](ConceptId a, ConceptId b) { return tax.label(a) < tax.label(b); });

    const std::size_t n = ids.size();
    std::vector<double> values(n * n, 0.0);

    auto compute_row = [&](std::size_t i) {
        for (std::size_t j = i; j < n; ++j) {
            double v = similarity(tax, ids[i], ids[j], opts.measure, opts.ic, opts.depth_override).value;
            values[i * n + j] = v;
            values[j * n + i] = v;  // every measure is symmetric
        }
    };

    int workers = std::max(1, opts.workers);
    if (workers == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) compute_row(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < n;
                     i += static_cast<std::size_t>(workers))
                    compute_row(i);
            });
        }
        for (auto& t : pool) t.join();
    }

    std::string out = "concept";
    for (std::size_t j = 0; j < n; ++j) {
        out += ',';
        out += tax.label(ids[j]);
    }
    out += '\n';
    for (std::size_t i = 0; i < n; ++i) {
        out += tax.label(ids[i]);
        for (std::size_t j = 0; j < n; ++j) {
            out += ',';
            out += format_value(values[i * n + j]);
        }
        out += '\n';
    }
    return out;
}

struct RankedConcept {
    std::string label;
    double value = 0.0;
};

/// k most similar concepts to the anchor (anchor excluded), descending
/// value, ties broken label-lexicographic.
inline std::vector<RankedConcept> top_k(const Taxonomy& tax, ConceptId anchor, std::size_t k,
                                        MeasureKind kind, const IcTable* ic = nullptr,
                                        std::optional<int> depth_override = std::nullopt) {
    std::vector<RankedConcept> ranked;
    for (ConceptId c = 0; c < tax.size(); ++c) {
        if (c == anchor) continue;
        ranked.push_back({tax.label(c), similarity(tax, anchor, c, kind, ic, depth_override).value});
    }
    std::sort(ranked.begin(), ranked.end(), [](const RankedConcept& a, const RankedConcept& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.label < b.label;
    });
    if (ranked.size() > k) ranked.resize(k);
    return ranked;
}

}  // namespace taxsim
