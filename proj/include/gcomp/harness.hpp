#pragma once

#include "gcomp/closed_forms.hpp"
#include "gcomp/composer.hpp"
#include "gcomp/families.hpp"
#include "gcomp/naive_oracle.hpp"
#include "gcomp/random_graphs.hpp"

#include <array>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace gcomp {

/// Published values the harness reproduces.
namespace reference {

/// C(W_n), n = 1..12.
inline constexpr std::array<std::uint64_t, 12> wheel_counts = {1,   2,    5,    15,   43,    118,
                                                               316, 836, 2199, 5769, 15117, 39592};

/// L(n), n = 1..9.
inline constexpr std::array<std::uint64_t, 9> lyndon_counts = {2, 1, 2, 3, 6, 9, 18, 30, 56};

/// C(K_{m,n}), m = 1..7, n = 1..8.
inline constexpr std::array<std::array<std::uint64_t, 8>, 7> kmn_counts = {{
    {2, 4, 8, 16, 32, 64, 128, 256},
    {4, 12, 34, 96, 274, 792, 2314, 6816},
    {8, 34, 128, 466, 1688, 6154, 22688, 84706},
    {16, 96, 466, 2100, 9226, 40356, 177466, 788100},
    {32, 274, 1688, 9226, 48032, 245554, 1251128, 6402586},
    {64, 792, 6154, 40356, 245554, 1444212, 8380114, 48510036},
    {128, 2314, 22688, 177466, 1251128, 8380114, 54763088, 354298186},
}};

/// Coefficient rows a_{m,1..m+1}, m = 0..8.
inline const std::vector<std::vector<long long>>& kmn_coefficients() {
    static const std::vector<std::vector<long long>> rows = {
        {1},
        {0, 1},
        {-1, 1, 1},
        {-1, -2, 3, 1},
        {2, -9, 1, 6, 1},
        {9, -9, -25, 15, 10, 1},
        {9, 50, -104, -20, 50, 15, 1},
        {-50, 267, -98, -364, 105, 119, 21, 1},
        {-267, 413, 1163, -1610, -539, 574, 238, 28, 1},
    };
    return rows;
}

inline constexpr std::uint64_t petersen_count = 8581;
inline constexpr std::uint64_t k23_count = 34;
inline constexpr std::uint64_t k5_minus_adjacent_pair = 40;
inline constexpr std::uint64_t k5_minus_disjoint_pair = 43;

}  // namespace reference

enum class CheckStatus { Pass, Fail, Skip };

struct Check {
    std::string name;
    std::string params;
    BigInt expected;
    BigInt actual;
    CheckStatus status = CheckStatus::Pass;

    /// "PASS <name> <params> expected=<v> actual=<v>"
    std::string to_line() const {
        const char* tag = status == CheckStatus::Pass ? "PASS" : status == CheckStatus::Fail ? "FAIL" : "SKIP";
        std::string line = std::string(tag) + " " + name + " " + (params.empty() ? "-" : params);
        if (status == CheckStatus::Skip) return line + " expected=- actual=-";
        return line + " expected=" + expected.str() + " actual=" + actual.str();
    }
};

class VerificationReport {
public:
    void add(std::string name, std::string params, BigInt expected, BigInt actual) {
        const auto status = expected == actual ? CheckStatus::Pass : CheckStatus::Fail;
        checks_.push_back({std::move(name), std::move(params), std::move(expected), std::move(actual), status});
    }
    void add(std::string name, std::string params, const BigNat& expected, const BigNat& actual) {
        add(std::move(name), std::move(params), to_int(expected), to_int(actual));
    }
    /// Boolean property: recorded as expected=1 actual=0/1.
    void add_property(std::string name, std::string params, bool holds) {
        add(std::move(name), std::move(params), BigInt(1), BigInt(holds ? 1 : 0));
    }
    void skip(std::string name, std::string params) {
        checks_.push_back({std::move(name), std::move(params), 0, 0, CheckStatus::Skip});
    }
    void append(const VerificationReport& other) {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }

    const std::vector<Check>& checks() const { return checks_; }
    std::size_t passed() const { return tally(CheckStatus::Pass); }
    std::size_t failed() const { return tally(CheckStatus::Fail); }
    std::size_t skipped() const { return tally(CheckStatus::Skip); }
    bool ok() const { return failed() == 0; }

    void render(std::ostream& out) const {
        for (const auto& c : checks_) out << c.to_line() << '\n';
        out << "summary pass=" << passed() << " fail=" << failed() << " skip=" << skipped() << '\n';
    }
    std::string render() const {
        std::ostringstream s;
        render(s);
        return s.str();
    }

private:
    std::size_t tally(CheckStatus st) const {
        std::size_t k = 0;
        for (const auto& c : checks_) k += c.status == st;
        return k;
    }

    std::vector<Check> checks_;
};

enum class OracleKind { Memoized, Naive };

inline BigNat oracle_count(const Graph& g, OracleKind oracle) {
    return oracle == OracleKind::Memoized ? count_compositions(g).value : naive_count_via_set_partitions(g);
}

inline Vertex oracle_limit(OracleKind oracle) {
    return oracle == OracleKind::Memoized ? kMaxVertices : kNaiveOracleMaxVertices;
}

/**
 * Up to `count` distinct parent lists on n vertices: the path, the star, a caterpillar, then
 * seeded random recursive trees. Fewer come back when fewer than `count` lists exist.
 */
inline std::vector<std::vector<Vertex>> sample_trees(Vertex n, std::size_t count = 5, std::uint64_t seed = 7) {
    std::vector<std::vector<Vertex>> out;
    if (n == 0) return out;
    auto add = [&](std::vector<Vertex> p) {
        if (out.size() < count && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    };
    std::vector<Vertex> path, star, caterpillar;
    for (Vertex i = 1; i < n; ++i) {
        path.push_back(i - 1);
        star.push_back(0);
        caterpillar.push_back(i % 2 == 1 ? (i >= 2 ? i - 2 : 0) : i - 1);
    }
    add(path);
    add(star);
    add(caterpillar);
    // (n-1)! distinct lists exist; stop trying once they are exhausted.
    unsigned long long available = 1;
    for (Vertex i = 2; i < n && available < count; ++i) available *= i;
    Rng rng(seed + n);
    for (int attempt = 0; out.size() < std::min<unsigned long long>(count, available) && attempt < 10000; ++attempt) {
        std::vector<Vertex> p;
        for (Vertex i = 1; i < n; ++i) p.push_back(std::uniform_int_distribution<Vertex>(0, i - 1)(rng));
        add(std::move(p));
    }
    return out;
}

namespace detail {

inline std::string join_parents(const std::vector<Vertex>& parents) {
    std::string s;
    for (std::size_t i = 0; i < parents.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(parents[i]);
    }
    return s.empty() ? "none" : s;
}

inline std::string oracle_tag(OracleKind o) { return o == OracleKind::Memoized ? "memo" : "naive"; }

}  // namespace detail

/**
 * One check per member compares the oracle count of build_family(...) with the family formula.
 * Members larger than the oracle's vertex limit (or `max_vertices`) are reported as skipped.
 * Trees contribute one check per sample_trees list.
 */
inline VerificationReport verify_family_range(FamilyKind family, unsigned first, unsigned last,
                                              OracleKind oracle = OracleKind::Memoized,
                                              Vertex max_vertices = kMaxVertices) {
    VerificationReport report;
    const std::string name = "family." + std::string(family_name(family)) + "." + detail::oracle_tag(oracle);
    const Vertex limit = std::min(max_vertices, oracle_limit(oracle));
    auto run = [&](const FamilySpec& spec, const std::string& params) {
        if (spec.vertex_count() > limit) {
            report.skip(name, params);
            return;
        }
        const auto formula = formula_count(spec);
        if (!formula) throw std::invalid_argument("verify_family_range: family has no formula");
        report.add(name, params, *formula, oracle_count(build_family(spec), oracle));
    };
    for (unsigned n = first; n <= last; ++n) {
        const std::string params = "n=" + std::to_string(n);
        if (family == FamilyKind::Tree) {
            for (auto& parents : sample_trees(n))
                run(FamilySpec::tree(parents), params + ",parents=" + detail::join_parents(parents));
        } else if (family == FamilyKind::CompleteBipartite || family == FamilyKind::Petersen) {
            throw std::invalid_argument("verify_family_range: use verify_kmn / verify_petersen");
        } else {
            run(FamilySpec::of(family, n), params);
        }
    }
    return report;
}

/// C(W_n) from formula, recurrence and oracle against the published sequence.
inline VerificationReport verify_wheel_sequence(unsigned oracle_max_n = 8) {
    VerificationReport r;
    for (unsigned n = 1; n <= reference::wheel_counts.size(); ++n) {
        const BigNat published = reference::wheel_counts[n - 1];
        const std::string p = "n=" + std::to_string(n);
        if (n >= 2) r.add("wheel.formula", p, published, wheel_count_formula(n));
        r.add("wheel.recurrence", p, published, wheel_count_recurrence(n));
        if (n <= oracle_max_n) r.add("wheel.oracle", p, published, count_compositions(build_family(FamilySpec::wheel(n))).value);
    }
    return r;
}

inline VerificationReport verify_petersen() {
    VerificationReport r;
    r.add("petersen.oracle", "n=10", BigNat(reference::petersen_count),
          count_compositions(build_family(FamilySpec::petersen())).value);
    return r;
}

/// K_5 minus two adjacent / two disjoint edges, and K_n minus one edge for 3 <= n <= 9.
inline VerificationReport verify_edge_deletion_examples() {
    VerificationReport r;
    const Graph k5 = build_family(FamilySpec::complete(5));
    r.add("k5.minus_adjacent_pair", "removed=0-1,0-2", BigNat(reference::k5_minus_adjacent_pair),
          count_compositions(delete_edges(k5, {{0, 1}, {0, 2}})).value);
    r.add("k5.minus_disjoint_pair", "removed=0-1,2-3", BigNat(reference::k5_minus_disjoint_pair),
          count_compositions(delete_edges(k5, {{0, 1}, {2, 3}})).value);
    for (unsigned n = 3; n <= 9; ++n) {
        const Graph g = delete_edges(build_family(FamilySpec::complete(n)), {{0, 1}});
        r.add("complete_minus_edge.bell_difference", "n=" + std::to_string(n), bell(n) - bell(n - 2),
              count_compositions(g).value);
    }
    return r;
}

struct GluePair {
    Graph first;
    Graph second;
    Vertex first_vertex = 0;
    Vertex second_vertex = 0;
};

/// Fixed pairs (P_2,P_2), (K_3,C_4), (K_3,K_3) followed by `random_count` seeded pairs of at most 6 vertices each.
inline std::vector<GluePair> default_glue_pairs(std::size_t random_count = 12, std::uint64_t seed = 2000) {
    std::vector<GluePair> pairs = {
        {build_family(FamilySpec::path(2)), build_family(FamilySpec::path(2)), 1, 0},
        {build_family(FamilySpec::complete(3)), build_family(FamilySpec::cycle(4)), 0, 0},
        {build_family(FamilySpec::complete(3)), build_family(FamilySpec::complete(3)), 0, 0},
    };
    Rng rng(seed);
    std::uniform_int_distribution<Vertex> size(1, 6);
    std::uniform_real_distribution<double> density(0.2, 0.8);
    for (std::size_t i = 0; i < random_count; ++i) {
        Graph a = random_graph(rng, size(rng), density(rng));
        Graph b = random_graph(rng, size(rng), density(rng));
        const Vertex va = std::uniform_int_distribution<Vertex>(0, a.num_vertices() - 1)(rng);
        const Vertex vb = std::uniform_int_distribution<Vertex>(0, b.num_vertices() - 1)(rng);
        pairs.push_back({std::move(a), std::move(b), va, vb});
    }
    return pairs;
}

/// Product law for disjoint union and vertex join, doubling law for a bridge, all against the oracle.
inline VerificationReport verify_glue_theorems(const std::vector<GluePair>& pairs) {
    VerificationReport r;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        const BigNat c1 = count_compositions(p.first).value;
        const BigNat c2 = count_compositions(p.second).value;
        const std::string params = "pair=" + std::to_string(i) + ",sizes=" + std::to_string(p.first.num_vertices()) +
                                   "+" + std::to_string(p.second.num_vertices());
        r.add("glue.disjoint_union", params, c1 * c2, count_compositions(disjoint_union(p.first, p.second)).value);
        r.add("glue.vertex_join", params, c1 * c2,
              count_compositions(join_at_vertex(p.first, p.first_vertex, p.second, p.second_vertex)).value);
        r.add("glue.bridge", params, 2 * c1 * c2,
              count_compositions(join_by_bridge(p.first, p.first_vertex, p.second, p.second_vertex)).value);
    }
    return r;
}

/// table[m-1][n-1] = C(K_{m,n}).
struct KmnTable {
    unsigned max_m = 0;
    unsigned max_n = 0;
    std::vector<std::vector<BigNat>> values;

    /// Header row "m\n" then n = 1..max_n; one row per m; tab separated.
    std::string to_tsv() const {
        std::string out = "m\\n";
        for (unsigned n = 1; n <= max_n; ++n) out += "\t" + std::to_string(n);
        out += '\n';
        for (unsigned m = 1; m <= max_m; ++m) {
            out += std::to_string(m);
            for (const auto& v : values[m - 1]) out += "\t" + v.str();
            out += '\n';
        }
        return out;
    }
};

inline KmnTable generate_kmn_table(unsigned max_m, unsigned max_n) {
    if (max_m < 1 || max_n < 1) throw std::invalid_argument("generate_kmn_table: sizes must be at least 1");
    KmnTable t{max_m, max_n, {}};
    for (unsigned m = 1; m <= max_m; ++m) {
        auto& row = t.values.emplace_back();
        for (unsigned n = 1; n <= max_n; ++n) row.push_back(kmn_count(m, n));
    }
    return t;
}

/**
 * Coefficient sum against the direct recurrence and against symmetry for 1 <= m, n <= max_side,
 * the oracle for m + n <= oracle_max_vertices, and the published 7 x 8 table.
 */
inline VerificationReport verify_kmn(unsigned max_side = 8, Vertex oracle_max_vertices = 10) {
    VerificationReport r;
    const auto table = generate_kmn_table(7, 8);
    for (unsigned m = 1; m <= 7; ++m)
        for (unsigned n = 1; n <= 8; ++n)
            r.add("kmn.published_table", "m=" + std::to_string(m) + ",n=" + std::to_string(n),
                  BigNat(reference::kmn_counts[m - 1][n - 1]), table.values[m - 1][n - 1]);
    for (unsigned m = 1; m <= max_side; ++m)
        for (unsigned n = 1; n <= max_side; ++n) {
            const std::string p = "m=" + std::to_string(m) + ",n=" + std::to_string(n);
            const BigNat sum = kmn_count(m, n);
            r.add("kmn.direct_recurrence", p, sum, kmn_count_direct(m, n));
            r.add("kmn.symmetry", p, sum, kmn_count(n, m));
            if (m + n <= oracle_max_vertices)
                r.add("kmn.oracle", p, sum, count_compositions(build_family(FamilySpec::bipartite(m, n))).value);
        }
    return r;
}

namespace detail {

/// k-th forward differences of xs.
inline std::vector<BigInt> differences(std::vector<BigInt> xs, unsigned k) {
    for (unsigned step = 0; step < k && !xs.empty(); ++step) {
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) xs[i] = xs[i + 1] - xs[i];
        xs.pop_back();
    }
    return xs;
}

}  // namespace detail

/**
 * Array properties for rows 0..max_m: unit main diagonal, triangular second diagonal, unit row
 * sums and alternating row sums, first column against the complementary Bell numbers,
 * a_{m,2} = -a_{m+1,1}, and polynomial third/fourth/fifth diagonals of degree 4/6/8 (checked by
 * finite differences). Rows 0..8 are also compared with the published table.
 */
inline VerificationReport verify_coefficient_properties(unsigned max_m = 15) {
    if (max_m < 2) throw std::invalid_argument("verify_coefficient_properties: max_m must be at least 2");
    VerificationReport r;
    const auto& published = reference::kmn_coefficients();
    for (unsigned m = 0; m < published.size() && m <= max_m; ++m) {
        const auto row = kmn_coefficient_row(m);
        for (unsigned i = 1; i <= m + 1; ++i)
            r.add("coeff.published_table", "m=" + std::to_string(m) + ",i=" + std::to_string(i),
                  BigInt(published[m][i - 1]), row.at(i));
    }
    for (unsigned m = 0; m <= max_m; ++m) {
        const auto row = kmn_coefficient_row(m);
        const std::string p = "m=" + std::to_string(m);
        BigInt sum = 0, alt = 0;
        for (unsigned i = 1; i <= m + 1; ++i) {
            sum += row.at(i);
            alt += ((m + 1 - i) % 2 == 0 ? 1 : -1) * row.at(i);
        }
        r.add("coeff.main_diagonal", p, BigInt(1), row.at(m + 1));
        if (m >= 1) r.add("coeff.second_diagonal", p, BigInt(m * (m - 1) / 2), row.at(m));
        r.add("coeff.row_sum", p, BigInt(1), sum);
        r.add("coeff.alternating_row_sum", p, BigInt(1), alt);
        r.add("coeff.first_column", p, BigInt(-complementary_bell(m + 1)), row.at(1));
        if (m >= 1 && m < max_m) r.add("coeff.second_column_shift", p, BigInt(-kmn_coefficient_row(m + 1).at(1)), row.at(2));
    }
    // Diagonal k (k = 3, 4, 5) is a_{m, m+2-k}, defined from m = k-1, polynomial of degree 2(k-1).
    for (unsigned k = 3; k <= 5; ++k) {
        std::vector<BigInt> diag;
        for (unsigned m = k - 1; m <= max_m; ++m) diag.push_back(kmn_coefficient_row(m).at(m + 2 - k));
        const unsigned degree = 2 * (k - 1);
        const std::string p = "diagonal=" + std::to_string(k) + ",degree=" + std::to_string(degree);
        const auto top = detail::differences(diag, degree);
        const auto vanish = detail::differences(diag, degree + 1);
        if (vanish.empty()) {
            r.skip("coeff.diagonal_polynomial", p);
            continue;
        }
        bool all_zero = std::all_of(vanish.begin(), vanish.end(), [](const BigInt& x) { return x == 0; });
        r.add_property("coeff.diagonal_vanishing_difference", p, all_zero);
        r.add_property("coeff.diagonal_exact_degree", p, !top.empty() && top.front() != 0);
    }
    return r;
}

/**
 * Identities checked for every index up to `limit`:
 * wheel formula = recurrence = L_{2n-2} - (n-1); C(L_n) = 2 q_{n-1} for the sqrt(10) convergents;
 * ladder split sum and difference; sum_{d|n} d L(d) - n = 2^n - n; Lyndon enumeration = L(n).
 */
inline VerificationReport verify_sequence_identities(unsigned limit = 20) {
    if (limit < 4) throw std::invalid_argument("verify_sequence_identities: limit must be at least 4");
    VerificationReport r;
    for (unsigned n = 2; n <= limit; ++n) {
        const std::string p = "n=" + std::to_string(n);
        const BigNat wheel = wheel_count_formula(n);
        r.add("identity.wheel_recurrence", p, wheel, wheel_count_recurrence(n));
        r.add("identity.wheel_lucas", p, wheel, lucas_number(2 * n - 2) - (n - 1));
    }
    for (unsigned n = 1; n <= limit; ++n) {
        const std::string p = "n=" + std::to_string(n);
        const BigNat ladder = ladder_count(n);
        r.add("identity.ladder_sqrt10", p, ladder, 2 * sqrt10_convergent_denominator(n - 1));
        const auto split = ladder_split(n);
        r.add("identity.ladder_split_sum", p, ladder, split.total());
        if (n >= 2) r.add("identity.ladder_split_difference", p, ladder_count(n - 1), split.a - split.b);
    }
    for (unsigned n = 3; n <= limit; ++n)
        r.add("identity.cycle_via_lyndon", "n=" + std::to_string(n), pow2(n) - n, cycle_count_via_lyndon(n));
    for (unsigned n = 1; n <= reference::lyndon_counts.size(); ++n)
        r.add("identity.lyndon_published", "n=" + std::to_string(n), BigNat(reference::lyndon_counts[n - 1]),
              lyndon_count(n));
    for (unsigned n = 2; n <= limit; ++n)
        r.add("identity.lyndon_enumeration", "n=" + std::to_string(n), lyndon_count(n),
              BigNat(lyndon_compositions(n).size()));
    return r;
}

inline constexpr std::array<std::string_view, 5> kSuiteNames = {"all", "families", "kmn", "identities", "glue"};

/// Runs one named suite at its default ranges.
inline VerificationReport run_suite(std::string_view suite) {
    VerificationReport r;
    const bool all = suite == "all";
    if (all || suite == "families") {
        r.append(verify_family_range(FamilyKind::Path, 0, 12));
        r.append(verify_family_range(FamilyKind::Complete, 1, 12));
        r.append(verify_family_range(FamilyKind::Complete, 1, 9, OracleKind::Naive));
        r.append(verify_family_range(FamilyKind::Cycle, 3, 12));
        r.append(verify_family_range(FamilyKind::Star, 1, 12));
        r.append(verify_family_range(FamilyKind::Tree, 1, 12));
        r.append(verify_family_range(FamilyKind::CompleteMinusEdge, 2, 9));
        r.append(verify_family_range(FamilyKind::Wheel, 1, 8));
        r.append(verify_family_range(FamilyKind::Ladder, 1, 8));
        r.append(verify_wheel_sequence());
        r.append(verify_edge_deletion_examples());
        r.append(verify_petersen());
    }
    if (all || suite == "kmn") {
        r.append(verify_kmn());
        r.append(verify_coefficient_properties(15));
    }
    if (all || suite == "identities") r.append(verify_sequence_identities(20));
    if (all || suite == "glue") r.append(verify_glue_theorems(default_glue_pairs()));
    if (!all && suite != "families" && suite != "kmn" && suite != "identities" && suite != "glue")
        throw std::invalid_argument("unknown suite: " + std::string(suite));
    return r;
}

}  // namespace gcomp
