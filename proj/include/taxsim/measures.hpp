#pragma once

#include <cmath>
#include <optional>
#include <string_view>

#include "taxsim/ic.hpp"
#include "taxsim/path.hpp"
#include "taxsim/taxonomy.hpp"

namespace taxsim {

enum class MeasureKind { WP, NEW, RADA, LCH, RESNIK, LIN, JCN };

/// RESNIK, LIN and JCN need corpus-derived information content.
inline bool needs_ic(MeasureKind kind) {
    return kind == MeasureKind::RESNIK || kind == MeasureKind::LIN || kind == MeasureKind::JCN;
}

inline const char* measure_name(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::WP:     return "wp";
        case MeasureKind::NEW:    return "new";
        case MeasureKind::RADA:   return "rada";
        case MeasureKind::LCH:    return "lch";
        case MeasureKind::RESNIK: return "resnik";
        case MeasureKind::LIN:    return "lin";
        case MeasureKind::JCN:    return "jcn";
    }
    return "?";
}

inline std::optional<MeasureKind> measure_from_name(std::string_view name) {
    if (name == "wp") return MeasureKind::WP;
    if (name == "new") return MeasureKind::NEW;
    if (name == "rada") return MeasureKind::RADA;
    if (name == "lch") return MeasureKind::LCH;
    if (name == "resnik") return MeasureKind::RESNIK;
    if (name == "lin") return MeasureKind::LIN;
    if (name == "jcn") return MeasureKind::JCN;
    return std::nullopt;
}

/// Returned when the JCN denominator is zero (identical or
/// IC-indistinguishable concepts).
inline constexpr double kJcnMax = 1e12;

/// Wu-Palmer: 2N / (N1 + N2). The root self-pair (0/0) is defined as 1 so
/// the identity property holds.
inline double sim_wp(const PathInfo& info) {
    if (info.n1 + info.n2 == 0) return 1.0;  // both concepts are the root
    return 2.0 * info.n / static_cast<double>(info.n1 + info.n2);
}

/// Penalized edge-counting measure: sim_wp * e^(-L/D) with L = effective_l
/// (0 when one concept subsumes the other) and D the taxonomy depth.
inline double sim_new(const PathInfo& info, int d) {
    if (d < 1)
        throw taxonomy_error(errc::invalid_depth, "taxonomy depth must be >= 1, got " + std::to_string(d));
    return sim_wp(info) * std::exp(-static_cast<double>(info.effective_l) / d);
}

/// Shortest-path edge count (Rada conceptual distance).
inline int rada_distance(const PathInfo& info) { return info.path_len; }

/// Bounded similarity transform of the Rada distance: 1 / (1 + distance).
inline double sim_rada(const PathInfo& info) {
    return 1.0 / (1.0 + info.path_len);
}

/// Leacock-Chodorow: ln(2 * D_nodes / len_nodes) with node-count lengths
/// (len_nodes = edges + 1) so the self-pair is finite.
inline double sim_lch(const PathInfo& info, int d) {
    if (d < 1)
        throw taxonomy_error(errc::invalid_depth, "taxonomy depth must be >= 1, got " + std::to_string(d));
    return std::log(2.0 * (d + 1) / static_cast<double>(info.path_len + 1));
}

/// Resnik: information content of the least common subsumer.
inline double sim_resnik(const PathInfo& info, const IcTable& ic) {
    return ic.ic(info.lcs);
}

/// Lin: 2 * IC(lcs) / (IC(c1) + IC(c2)).
inline double sim_lin(const PathInfo& info, const IcTable& ic) {
    double a = ic.ic(info.c1);
    double b = ic.ic(info.c2);
    if (a + b == 0.0) {
        if (info.c1 == info.c2) return 1.0;
        throw taxonomy_error(errc::zero_denominator,
                             "both concepts carry the full corpus mass");
    }
    return 2.0 * ic.ic(info.lcs) / (a + b);
}

/// Jiang-Conrath: 1 / (IC(c1) + IC(c2) - 2 * IC(lcs)), capped at kJcnMax
/// when the distance is zero.
inline double sim_jcn(const PathInfo& info, const IcTable& ic) {
    double dist = ic.ic(info.c1) + ic.ic(info.c2) - 2.0 * ic.ic(info.lcs);
    if (dist < 0.0)
        throw taxonomy_error(errc::negative_distance,
                             "negative JCN distance; IC table violates monotonicity");
    if (dist == 0.0) return kJcnMax;
    return 1.0 / dist;
}

struct SimResult {
    ConceptId c1 = kInvalidConcept;
    ConceptId c2 = kInvalidConcept;
    MeasureKind measure = MeasureKind::WP;
    double value = 0.0;
    PathInfo path;
    int used_d = 0;
};

/// Compute one measure for a pair: path geometry once, then dispatch.
/// depth_override substitutes an external D for NEW and LCH without
/// altering the taxonomy.
inline SimResult similarity(const Taxonomy& tax, ConceptId c1, ConceptId c2, MeasureKind kind,
                            const IcTable* ic = nullptr,
                            std::optional<int> depth_override = std::nullopt) {
    if (needs_ic(kind) && ic == nullptr)
        throw taxonomy_error(errc::missing_ic_table,
                             std::string(measure_name(kind)) + " requires a frequency table");
    SimResult res;
    res.c1 = c1;
    res.c2 = c2;
    res.measure = kind;
    res.path = path_info(tax, c1, c2);
    res.used_d = depth_override.value_or(tax.max_depth());
    switch (kind) {
        case MeasureKind::WP:     res.value = sim_wp(res.path); break;
        case MeasureKind::NEW:    res.value = sim_new(res.path, res.used_d); break;
        case MeasureKind::RADA:   res.value = sim_rada(res.path); break;
        case MeasureKind::LCH:    res.value = sim_lch(res.path, res.used_d); break;
        case MeasureKind::RESNIK: res.value = sim_resnik(res.path, *ic); break;
        case MeasureKind::LIN:    res.value = sim_lin(res.path, *ic); break;
        case MeasureKind::JCN:    res.value = sim_jcn(res.path, *ic); break;
    }
    return res;
}

}  // namespace taxsim
