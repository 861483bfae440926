// taxsim: taxonomy semantic-similarity CLI.
//
// Exit codes: 0 success, 2 unknown concept label, 3 input/parse error,
// 4 measure precondition failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "taxsim/taxsim.hpp"

namespace {

constexpr int kExitUnknownConcept = 2;
constexpr int kExitInputError = 3;
constexpr int kExitMeasureError = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw taxsim::taxonomy_error(taxsim::errc::malformed_line, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

taxsim::Taxonomy load_taxonomy(const std::string& path) {
    return taxsim::Taxonomy::parse(read_file(path));
}

taxsim::MeasureKind parse_measure(const std::string& name) {
    auto kind = taxsim::measure_from_name(name);
    if (!kind) {
        std::cerr << "error: unknown measure '" << name
                  << "' (expected wp|new|rada|lch|resnik|lin|jcn)\n";
        std::exit(kExitInputError);
    }
    return *kind;
}

/// Loads the IC table when the measure needs one; exits on parse failure.
std::optional<taxsim::IcTable> maybe_load_ic(taxsim::MeasureKind kind, const std::string& freq_path,
                                             const taxsim::Taxonomy& tax) {
    if (freq_path.empty()) {
        if (taxsim::needs_ic(kind)) {
            std::cerr << "error: measure '" << taxsim::measure_name(kind)
                      << "' requires --freq\n";
            std::exit(kExitMeasureError);
        }
        return std::nullopt;
    }
    auto freq = taxsim::FrequencyTable::parse(read_file(freq_path), tax);
    return taxsim::IcTable::build(freq, tax);
}

taxsim::ConceptId resolve(const taxsim::Taxonomy& tax, const std::string& label) {
    auto id = tax.find(label);
    if (!id) {
        std::cerr << "error: unknown concept '" << label << "'\n";
        std::exit(kExitUnknownConcept);
    }
    return *id;
}

void print_report(const taxsim::TaxonomyReport& report) {
    std::cout << "concept_count=" << report.concept_count << '\n'
              << "edge_count=" << report.edge_count << '\n'
              << "max_depth_D=" << report.max_depth << '\n'
              << "is_tree=" << (report.is_tree ? "true" : "false") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Taxonomy semantic-similarity engine"};
    app.require_subcommand(1);

    std::string tax_path, freq_path, measure_name = "wp", out_path, c1, c2, anchor;
    std::optional<int> depth_override;
    int workers = 1;
    int k = 10;
    std::vector<std::string> concept_filter;

    auto* validate = app.add_subcommand("validate", "Parse a taxonomy and report its statistics");
    validate->add_option("tax", tax_path, "taxonomy file")->required();

    auto* info = app.add_subcommand("info", "Show taxonomy statistics and the root concept");
    info->add_option("tax", tax_path, "taxonomy file")->required();

    auto* sim = app.add_subcommand("sim", "Similarity of one concept pair");
    sim->add_option("--tax", tax_path, "taxonomy file")->required();
    sim->add_option("--measure", measure_name, "wp|new|rada|lch|resnik|lin|jcn");
    sim->add_option("--freq", freq_path, "frequency file for IC measures");
    sim->add_option("--depth-override", depth_override, "external taxonomy depth D");
    sim->add_option("c1", c1, "first concept")->required();
    sim->add_option("c2", c2, "second concept")->required();

    auto* matrix = app.add_subcommand("matrix", "Full pairwise similarity matrix as CSV");
    matrix->add_option("--tax", tax_path, "taxonomy file")->required();
    matrix->add_option("--measure", measure_name, "wp|new|rada|lch|resnik|lin|jcn");
    matrix->add_option("--freq", freq_path, "frequency file for IC measures");
    matrix->add_option("--depth-override", depth_override, "external taxonomy depth D");
    matrix->add_option("--out", out_path, "output path (default stdout)");
    matrix->add_option("--workers", workers, "worker thread count")->check(CLI::PositiveNumber);
    matrix->add_option("--concepts", concept_filter, "restrict to these labels")->delimiter(',');

    auto* topk = app.add_subcommand("topk", "k nearest concepts to an anchor");
    topk->add_option("--tax", tax_path, "taxonomy file")->required();
    topk->add_option("--measure", measure_name, "wp|new|rada|lch|resnik|lin|jcn");
    topk->add_option("--freq", freq_path, "frequency file for IC measures");
    topk->add_option("--depth-override", depth_override, "external taxonomy depth D");
    topk->add_option("--concept", anchor, "anchor concept")->required();
    topk->add_option("-k", k, "number of neighbours")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate || *info) {
            taxsim::Taxonomy tax = load_taxonomy(tax_path);
            print_report(tax.report());
            if (*info) std::cout << "root=" << tax.label(tax.root()) << '\n';
            return 0;
        }

        taxsim::MeasureKind kind = parse_measure(measure_name);
        taxsim::Taxonomy tax = load_taxonomy(tax_path);
        std::optional<taxsim::IcTable> ic = maybe_load_ic(kind, freq_path, tax);
        const taxsim::IcTable* ic_ptr = ic ? &*ic : nullptr;

        if (*sim) {
            taxsim::ConceptId a = resolve(tax, c1);
            taxsim::ConceptId b = resolve(tax, c2);
            try {
                auto res = taxsim::similarity(tax, a, b, kind, ic_ptr, depth_override);
                std::cout << c1 << '\t' << c2 << '\t' << taxsim::measure_name(kind) << '\t'
                          << taxsim::format_value(res.value) << '\n';
            } catch (const taxsim::taxonomy_error& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitMeasureError;
            }
            return 0;
        }

        if (*matrix) {
            taxsim::MatrixOptions opts;
            opts.measure = kind;
            opts.ic = ic_ptr;
            opts.depth_override = depth_override;
            opts.workers = workers;
            opts.filter = concept_filter;
            std::string csv;
            try {
                csv = taxsim::pairwise_matrix_csv(tax, opts);
            } catch (const taxsim::taxonomy_error& e) {
                std::cerr << "error: " << e.what() << '\n';
                return e.code() == taxsim::errc::unknown_concept ? kExitUnknownConcept
                                                                 : kExitMeasureError;
            }
            if (out_path.empty()) {
                std::cout << csv;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) {
                    std::cerr << "error: cannot write " << out_path << '\n';
                    return kExitInputError;
                }
                out << csv;
            }
            return 0;
        }

        if (*topk) {
            taxsim::ConceptId a = resolve(tax, anchor);
            std::vector<taxsim::RankedConcept> ranked;
            try {
                ranked = taxsim::top_k(tax, a, static_cast<std::size_t>(k), kind, ic_ptr,
                                       depth_override);
            } catch (const taxsim::taxonomy_error& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitMeasureError;
            }
            for (std::size_t i = 0; i < ranked.size(); ++i)
                std::cout << (i + 1) << '\t' << ranked[i].label << '\t'
                          << taxsim::format_value(ranked[i].value) << '\n';
            return 0;
        }
    } catch (const taxsim::taxonomy_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return 0;
}
