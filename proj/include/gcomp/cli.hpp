#pragma once

#include "gcomp/closed_forms.hpp"
#include "gcomp/composer.hpp"
#include "gcomp/families.hpp"
#include "gcomp/graph_io.hpp"
#include "gcomp/harness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gcomp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFailed = 3;

namespace detail {

struct FamilyArgs {
    std::string name;
    std::optional<unsigned> n;
    std::optional<unsigned> m;
    std::vector<unsigned> parents;
    bool has_parents = false;
};

inline void add_family_options(CLI::App* sub, FamilyArgs& fa, const std::string& name_flag) {
    sub->add_option(name_flag, fa.name, "Family: path, cycle, complete, complete-minus-edge, star, tree, wheel, ladder, kmn, petersen");
    sub->add_option("--n", fa.n, "Size parameter (second part size for kmn)");
    sub->add_option("--m", fa.m, "First part size (kmn only)");
    sub->add_option("--parents", fa.parents, "Tree parent list for vertices 1..n-1, comma separated")->delimiter(',');
}

inline FamilySpec to_spec(const FamilyArgs& fa) {
    const auto kind = parse_family_name(fa.name);
    if (!kind) throw std::invalid_argument("unknown family: " + fa.name);
    auto need_n = [&]() -> unsigned {
        if (!fa.n) throw std::invalid_argument(fa.name + " needs --n");
        return *fa.n;
    };
    switch (*kind) {
        case FamilyKind::Petersen: return FamilySpec::petersen();
        case FamilyKind::CompleteBipartite:
            if (!fa.m) throw std::invalid_argument("kmn needs --m");
            return FamilySpec::bipartite(*fa.m, need_n());
        case FamilyKind::Tree: {
            auto spec = FamilySpec::tree(fa.parents);
            if (fa.n && *fa.n != spec.n)
                throw std::invalid_argument("tree: --n must equal the parent list length plus one");
            return spec;
        }
        default: return FamilySpec::of(*kind, need_n());
    }
}

inline std::optional<GraphFormat> to_format(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "json") return GraphFormat::Json;
    return GraphFormat::EdgeList;
}

}  // namespace detail

/// Runs one command line (args excludes the program name). Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counting and enumeration of graph compositions", "gcomp"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "Print the number of compositions C(G)");
    std::string count_graph, count_format, count_method;
    detail::FamilyArgs count_family;
    auto* count_graph_opt = count->add_option("--graph", count_graph, "Graph file (JSON or edge list)");
    count->add_option("--format", count_format, "Graph file format")->check(CLI::IsMember({"json", "edgelist"}));
    detail::add_family_options(count, count_family, "--family");
    count->add_option("--method", count_method, "Force oracle or formula")->check(CLI::IsMember({"oracle", "formula"}));
    count_graph_opt->excludes("--family");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Print every composition in block notation");
    std::string enum_graph, enum_format;
    enumerate->add_option("--graph", enum_graph, "Graph file")->required();
    enumerate->add_option("--format", enum_format, "Graph file format")->check(CLI::IsMember({"json", "edgelist"}));

    // family
    auto* family = app.add_subcommand("family", "Print a family member as JSON");
    detail::FamilyArgs family_args;
    detail::add_family_options(family, family_args, "--name");
    family->get_option("--name")->required();

    // table
    auto* table = app.add_subcommand("table", "Print a table of C(K_{m,n}) as TSV");
    bool table_kmn = false;
    unsigned table_m = 7, table_n = 8;
    table->add_flag("--kmn", table_kmn, "Complete bipartite table")->required();
    table->add_option("--max-m", table_m, "Largest m")->check(CLI::PositiveNumber);
    table->add_option("--max-n", table_n, "Largest n")->check(CLI::PositiveNumber);

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "Print the K_{m,n} coefficient rows a_{m,1..m+1}");
    unsigned coeffs_m = 8;
    coeffs->add_option("--max-m", coeffs_m, "Last row");

    // lyndon
    auto* lyndon = app.add_subcommand("lyndon", "Print the Lyndon compositions of n and L(n)");
    unsigned lyndon_n = 0;
    bool lyndon_count_only = false;
    lyndon->add_option("--n", lyndon_n, "n")->required()->check(CLI::PositiveNumber);
    lyndon->add_flag("--count-only", lyndon_count_only, "Print only L(n)");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the verification harness");
    std::string suite = "all";
    verify->add_option("--suite", suite, "Suite")->check(CLI::IsMember({"all", "families", "kmn", "identities", "glue"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        if (e.get_exit_code() == 0) return kExitOk;
        err << app.help();
        return kExitUsage;
    }

    try {
        if (count->parsed()) {
            if (count_graph.empty() && count_family.name.empty())
                throw std::invalid_argument("count needs --graph or --family");
            if (!count_graph.empty()) {
                if (count_method == "formula") throw std::invalid_argument("no formula for an arbitrary graph file");
                const Graph g = read_graph_file(count_graph, detail::to_format(count_format));
                out << count_compositions(g).value << '\n';
                return kExitOk;
            }
            const auto spec = detail::to_spec(count_family);
            std::optional<BigNat> value;
            if (count_method != "oracle") value = formula_count(spec);
            if (!value) {
                if (count_method == "formula")
                    throw std::invalid_argument("no formula for family " + count_family.name);
                value = count_compositions(build_family(spec)).value;
            }
            out << *value << '\n';
        } else if (enumerate->parsed()) {
            const Graph g = read_graph_file(enum_graph, detail::to_format(enum_format));
            BigNat total = 0;
            for_each_composition(g, [&](const Composition& c) {
                out << c.to_string() << '\n';
                ++total;
            });
            out << "total " << total << '\n';
        } else if (family->parsed()) {
            out << graph_to_json(build_family(detail::to_spec(family_args))).dump() << '\n';
        } else if (table->parsed()) {
            out << generate_kmn_table(table_m, table_n).to_tsv();
        } else if (coeffs->parsed()) {
            for (unsigned m = 0; m <= coeffs_m; ++m) {
                out << m;
                for (const auto& a : kmn_coefficient_row(m).entries) out << '\t' << a;
                out << '\n';
            }
        } else if (lyndon->parsed()) {
            if (!lyndon_count_only)
                for (const auto& lc : lyndon_compositions(lyndon_n)) out << lc.to_string() << '\n';
            if (lyndon_count_only)
                out << lyndon_count(lyndon_n) << '\n';
            else
                out << "L " << lyndon_count(lyndon_n) << '\n';
        } else if (verify->parsed()) {
            const auto report = run_suite(suite);
            report.render(out);
            return report.ok() ? kExitOk : kExitVerifyFailed;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return kExitOk;
}

}  // namespace gcomp::cli
