#pragma once

#include <stdexcept>
#include <string>

namespace taxsim {

/// Failure categories surfaced by parsing, IC construction and the measures.
enum class errc {
    malformed_line,
    duplicate_edge,
    empty_taxonomy,
    multiple_roots,
    no_root,
    cycle_detected,
    unknown_concept,
    negative_count,
    zero_total,
    zero_cumulative,
    invalid_depth,
    zero_denominator,
    negative_distance,
    missing_ic_table,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::malformed_line:   return "MalformedLine";
        case errc::duplicate_edge:   return "DuplicateEdge";
        case errc::empty_taxonomy:   return "EmptyTaxonomy";
        case errc::multiple_roots:   return "MultipleRoots";
        case errc::no_root:          return "NoRoot";
        case errc::cycle_detected:   return "CycleDetected";
        case errc::unknown_concept:  return "UnknownConcept";
        case errc::negative_count:   return "NegativeCount";
        case errc::zero_total:       return "ZeroTotal";
        case errc::zero_cumulative:  return "ZeroCumulative";
        case errc::invalid_depth:    return "InvalidDepth";
        case errc::zero_denominator: return "ZeroDenominator";
        case errc::negative_distance:return "NegativeDistance";
        case errc::missing_ic_table: return "MissingIcTable";
    }
    return "UnknownError";
}

class taxonomy_error : public std::runtime_error {
public:
    taxonomy_error(errc code, const std::string& what, long line = -1)
        : std::runtime_error(line >= 0
              ? std::string(errc_name(code)) + " (line " + std::to_string(line) + "): " + what
              : std::string(errc_name(code)) + ": " + what),
          code_(code), line_(line) {}

    errc code() const noexcept { return code_; }
    /// 1-based input line, or -1 when not tied to a line.
    long line() const noexcept { return line_; }

private:
    errc code_;
    long line_;
};

}  // namespace taxsim
