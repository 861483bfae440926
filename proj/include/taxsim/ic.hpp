#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

#include "taxsim/taxonomy.hpp"

namespace taxsim {

/// Raw per-concept corpus counts (the concept itself, not descendants).
class FrequencyTable {
public:
    explicit FrequencyTable(std::size_t concepts) : own_(concepts, 0) {}

    /// Parse a `concept<TAB>count` document against a bound taxonomy.
    /// Unlisted concepts default to 0. `#` comments and blank lines are
    /// ignored.
    static FrequencyTable parse(std::string_view text, const Taxonomy& tax);

    std::uint64_t own(ConceptId c) const { return own_[c]; }
    void set_own(ConceptId c, std::uint64_t count) { own_[c] = count; }
    std::size_t size() const noexcept { return own_.size(); }

private:
    std::vector<std::uint64_t> own_;
};

/// Cumulative counts and information content ic(c) = -ln(cum(c)/total).
///
/// Cumulative counts use set semantics: a concept's own count flows to each
/// ancestor exactly once, even when multiple parent paths exist. Immutable
/// after build; concurrent reads are safe.
class IcTable {
public:
    static IcTable build(const FrequencyTable& freq, const Taxonomy& tax) {
        if (freq.size() != tax.size())
            throw taxonomy_error(errc::unknown_concept, "frequency table bound to a different taxonomy");
        IcTable table;
        table.cum_.assign(tax.size(), 0);
        std::vector<char> flags(tax.size(), 0);
        for (ConceptId c = 0; c < tax.size(); ++c) {
            std::uint64_t cnt = freq.own(c);
            if (cnt == 0) continue;
            std::fill(flags.begin(), flags.end(), 0);
            tax.ancestor_flags(c, flags);
            for (ConceptId a = 0; a < tax.size(); ++a)
                if (flags[a]) table.cum_[a] += cnt;
        }
        table.total_ = table.cum_[tax.root()];
        if (table.total_ == 0)
            throw taxonomy_error(errc::zero_total, "no corpus mass in frequency table");
        return table;
    }

    std::uint64_t cum(ConceptId c) const { return cum_[c]; }
    std::uint64_t total() const noexcept { return total_; }

    /// -ln(cum(c)/total); 0 for the root. Throws for zero-mass concepts.
    double ic(ConceptId c) const {
        if (cum_[c] == 0)
            throw taxonomy_error(errc::zero_cumulative,
                                 "concept id " + std::to_string(c) + " has zero cumulative count");
        return -std::log(static_cast<double>(cum_[c]) / static_cast<double>(total_));
    }

private:
    std::vector<std::uint64_t> cum_;
    std::uint64_t total_ = 0;
};

inline FrequencyTable FrequencyTable::parse(std::string_view text, const Taxonomy& tax) {
    FrequencyTable table(tax.size());
    long line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#' ||
            line.find_first_not_of(" \t\r") == std::string_view::npos)
            continue;

        std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos || tab == 0 || tab + 1 >= line.size())
            throw taxonomy_error(errc::malformed_line, "expected concept<TAB>count", line_no);
        std::string_view label = line.substr(0, tab);
        std::string_view count_str = line.substr(tab + 1);

        auto id = tax.find(label);
        if (!id)
            throw taxonomy_error(errc::unknown_concept, std::string(label), line_no);

        if (count_str.front() == '-')
            throw taxonomy_error(errc::negative_count, std::string(count_str), line_no);
        std::uint64_t count = 0;
        for (char ch : count_str) {
            if (ch < '0' || ch > '9')
                throw taxonomy_error(errc::malformed_line,
                                     "count is not a non-negative integer: " + std::string(count_str),
                                     line_no);
            count = count * 10 + static_cast<std::uint64_t>(ch - '0');
        }
        table.set_own(*id, count);
    }
    return table;
}

}  // namespace taxsim
