#include "partlat/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "partlat/counting.hpp"
#include "partlat/errata.hpp"
#include "partlat/lattice.hpp"
#include "partlat/matrices.hpp"
#include "partlat/oracle.hpp"
#include "partlat/scheme.hpp"
#include "partlat/series.hpp"
#include "partlat/table.hpp"
#include "partlat/verify.hpp"

namespace partlat {

namespace {

// Raised for a size cap; reported with the bound that was hit.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void guard(const char* what, int value, int lo, int hi)
{
    if (value < lo || value > hi)
        throw GuardError(std::string(what) + " must be in " + std::to_string(lo) + ".." + std::to_string(hi) + ", got "
                         + std::to_string(value));
}

struct TableSpec {
    const char* caption;
    int min_size;
    int max_size;
    std::function<IntTable(int, int)> build; // (size, dims)
};

const std::map<std::string, TableSpec>& table_specs()
{
    static const std::map<std::string, TableSpec> specs{
        {"exact", {"Partitions into exactly n parts", 0, 100, [](int m, int) { return exact_parts_table(m); }}},
        {"atmost", {"Partitions into at most n parts", 0, 100, [](int m, int) { return at_most_table(m); }}},
        {"odd-even-mixed",
         {"Odd, even and mixed partitions into exactly n parts", 1, 100, [](int m, int) { return odd_even_mixed_table(m); }}},
        {"distinct", {"Partitions with unequal parts", 1, 100, [](int m, int) { return distinct_parts_table(m); }}},
        {"unit-diff", {"Partitions according to unit parts", 0, 100, [](int m, int) { return unit_diff_table(m); }}},
        {"euler", {"Euler inversion e(i-j)", 1, 100, [](int m, int) { return euler_table(m); }}},
        {"euler-inverse", {"Partition table p(i-j), inverse of the Euler inversion", 1, 100,
                           [](int m, int) { return euler_inverse_table(m); }}},
        {"inverse-exact", {"Inverse matrix to partitions into n parts", 1, 60, [](int m, int) { return inverse_exact_table(m); }}},
        {"inverse-unit-diff",
         {"Inverse matrix of unit differences", 1, 100, [](int m, int) { return inverse_unit_diff_table(m); }}},
        {"box", {"Orbits in n-dimensional cubes, by total and edge (--dims, default 3)", 0, 12,
                 [](int m, int d) { return cube_orbit_table(m, d); }}},
        {"scheme", {"Partition scheme (M,M): exact frames by largest part and parts", 1, 60,
                    [](int m, int) { return build_scheme(m); }}},
        {"neighbors", {"Right-hand one-unit neighbors between scheme columns", 2, 30,
                       [](int m, int) { return right_hand_neighbor_table(m); }}},
        {"layers", {"Partitions by hook layer (diagonal sums)", 1, 60, [](int m, int) { return layer_table(m); }}},
        {"binomial", {"Layer counts along rows of the isosceles scheme", 1, 40, [](int m, int) { return binomial_table(m); }}},
    };
    return specs;
}

std::string table_help()
{
    std::ostringstream os;
    os << "Table to print:";
    for (const auto& [name, spec] : table_specs())
        os << "\n  " << name << ": " << spec.caption;
    return os.str();
}

Integer count_by_formula(const oracle::ConstraintRecord& c, bool& mapped)
{
    using oracle::Parity;
    mapped = true;
    const int t = c.total;
    const bool no_extra = !c.min_part && !c.unit_count && !c.layer && !c.hook_frame;
    const bool plain = no_extra && c.parity == Parity::none;

    if (plain && !c.exact_max_part && !c.exact_parts) {
        if (!c.max_part && !c.max_parts)
            return p(t);
        if (c.max_part && c.max_parts)
            return p_box(*c.max_part, *c.max_parts, t);
        if (c.max_parts)
            return p_atmost(t, *c.max_parts);
        // Conjugation turns a bound on parts into a bound on the largest part.
        return p_atmost(t, *c.max_part);
    }
    if (plain && !c.max_part && !c.max_parts) {
        if (c.exact_max_part && c.exact_parts)
            return exact_frame(*c.exact_max_part, *c.exact_parts, t);
        if (c.exact_parts)
            return p_exact(t, *c.exact_parts);
        return p_fixed_largest(*c.exact_max_part, t);
    }
    const bool only_parts = !c.max_part && !c.max_parts && !c.exact_max_part;
    if (only_parts && c.parity == Parity::none && c.min_part && c.exact_parts && !c.unit_count && !c.layer
        && !c.hook_frame)
        return p_min_part(t, *c.exact_parts, *c.min_part);
    if (only_parts && no_extra && c.parity != Parity::none && t >= 1) {
        if (c.exact_parts) {
            if (c.parity == Parity::all_odd)
                return odd_with_parts(t, *c.exact_parts);
            if (c.parity == Parity::distinct)
                return distinct_with_parts(t, *c.exact_parts);
        } else {
            const ParitySplit s = odd_even_mixed(t);
            switch (c.parity) {
            case Parity::all_odd: return s.odd;
            case Parity::all_even: return s.even;
            case Parity::mixed: return s.mixed;
            case Parity::distinct: return distinct_table(t).total;
            case Parity::none: break;
            }
        }
    }
    const bool bare = !c.max_part && !c.max_parts && !c.exact_max_part && !c.exact_parts && !c.min_part
                      && c.parity == Parity::none && !c.hook_frame;
    if (bare && c.layer && !c.unit_count)
        return layer_count(t, *c.layer);
    if (bare && c.unit_count && !c.layer) {
        const int rest = t - *c.unit_count;
        if (rest < 0)
            return 0;
        return rest == 0 ? 1 : p(rest) - p(rest - 1);
    }
    mapped = false;
    return 0;
}

std::string format_series(const std::string& kind, const TruncatedSeries<>& s)
{
    std::ostringstream os;
    os << "# " << kind << " order " << s.order() << '\n';
    for (int i = 0; i <= s.order(); ++i)
        os << (i ? " " : "") << s[i];
    os << '\n';
    return os.str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Integer partitions: counting tables, schemes, orbit lattices and generating series", "partlat"};
    app.require_subcommand(1);

    // table
    std::string table_name;
    int table_max = 6;
    int table_dims = 3;
    std::string table_format = "tsv";
    auto* table = app.add_subcommand("table", "Print a counting table");
    std::vector<std::string> names;
    for (const auto& [name, spec] : table_specs())
        names.push_back(name);
    table->add_option("name", table_name, table_help())->required()->check(CLI::IsMember(names));
    table->add_option("--max", table_max, "Table size (largest row label)")->capture_default_str();
    table->add_option("--dims", table_dims, "Cube dimension for the box table")->capture_default_str();
    table->add_option("--format", table_format, "tsv, csv, json or md")->capture_default_str();

    // count
    oracle::ConstraintRecord rec;
    std::string parity = "none";
    std::string method = "auto";
    bool list = false;
    auto* count = app.add_subcommand("count", "Count partitions of a total under constraints");
    count->add_option("--total", rec.total, "Partitioned number M")->required();
    auto* exact_parts_opt = count->add_option("--exact-parts", rec.exact_parts, "Exactly this many parts");
    auto* max_parts_opt = count->add_option("--max-parts", rec.max_parts, "At most this many parts");
    auto* max_part_opt = count->add_option("--max-part", rec.max_part, "Largest part at most this");
    auto* exact_max_opt = count->add_option("--exact-max-part", rec.exact_max_part, "Largest part exactly this");
    exact_parts_opt->excludes(max_parts_opt);
    max_part_opt->excludes(exact_max_opt);
    count->add_option("--min-part", rec.min_part, "Every part at least this");
    count->add_option("--parity", parity, "none, odd, even, mixed or distinct")
        ->check(CLI::IsMember({"none", "odd", "even", "mixed", "distinct"}))
        ->capture_default_str();
    count->add_option("--units", rec.unit_count, "Exactly this many parts equal to 1");
    count->add_option("--layer", rec.layer, "Hook layer (1 + interior size)");
    count->add_option("--hook", rec.hook_frame, "Hook size (largest part + parts - 1)");
    count->add_option("--method", method, "auto, formula or oracle")
        ->check(CLI::IsMember({"auto", "formula", "oracle"}))
        ->capture_default_str();
    count->add_flag("--list", list, "Also list the partitions (oracle)");

    // scheme
    int scheme_total = 7;
    bool scheme_inv = false;
    std::string scheme_format = "tsv";
    auto* scheme = app.add_subcommand("scheme", "Print a partition scheme or its inverse");
    scheme->add_option("--total", scheme_total, "M")->required();
    scheme->add_flag("--inverse", scheme_inv, "Print the exact inverse instead");
    scheme->add_option("--format", scheme_format, "tsv, csv, json or md")->capture_default_str();

    // lattice
    std::string variant_str;
    LatticeParams params;
    std::optional<int> parts_opt;
    std::optional<int> dim;
    std::string lattice_format = "edges";
    std::vector<std::string> endpoints;
    auto* lattice = app.add_subcommand("lattice", "Build an orbit lattice and export it");
    lattice->add_option("--variant", variant_str,
                        "unit_exchange, split_merge, subset_swap, subset_double_swap or hypercube")
        ->required();
    lattice->add_option("--total", params.total, "Partition variants: M");
    lattice->add_option("--parts", parts_opt, "Partition variants: dimension n (default M)");
    lattice->add_option("--bits", params.bits, "Subset variants: string length");
    lattice->add_option("--ones", params.ones, "Subset variants: number of ones");
    lattice->add_option("--dim", dim, "Hypercube dimension (--bits also accepted)");
    lattice->add_option("--format", lattice_format, "dot, edges or json")
        ->check(CLI::IsMember({"dot", "edges", "json"}))
        ->capture_default_str();
    lattice->add_option("--distance", endpoints, "Print the distance between two node labels instead")
        ->expected(2);

    // series
    std::string kind;
    int order = 10;
    int box_part = 0;
    int box_parts = 0;
    auto* series = app.add_subcommand("series", "Print generating-function coefficients");
    series->add_option("--kind", kind, "euler, partition, distinct, distinct-signed or box")
        ->required()
        ->check(CLI::IsMember({"euler", "partition", "distinct", "distinct-signed", "box"}));
    series->add_option("--order", order, "Truncation order T")->capture_default_str();
    series->add_option("--max-part", box_part, "box: largest part bound");
    series->add_option("--max-parts", box_parts, "box: number-of-parts bound");

    // verify
    int verify_max = 12;
    auto* verify = app.add_subcommand("verify", "Run the identity suites and errata checks");
    verify->add_option("--max", verify_max, "Largest total checked (1..25)")->capture_default_str();

    // errata
    std::string errata_format = "text";
    auto* errata = app.add_subcommand("errata", "Print the errata ledger");
    errata->add_option("--format", errata_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (table->parsed()) {
            const TableSpec& spec = table_specs().at(table_name);
            guard("--max", table_max, spec.min_size, spec.max_size);
            if (table_name == "box")
                guard("--dims", table_dims, 1, 12);
            const TableFormat fmt = parse_table_format(table_format);
            out << format_table(spec.build(table_max, table_dims), fmt);
        } else if (count->parsed()) {
            if (parity == "odd") rec.parity = oracle::Parity::all_odd;
            else if (parity == "even") rec.parity = oracle::Parity::all_even;
            else if (parity == "mixed") rec.parity = oracle::Parity::mixed;
            else if (parity == "distinct") rec.parity = oracle::Parity::distinct;
            guard("--total", rec.total, 0, method == "oracle" ? oracle::kMaxTotal : 400);
            bool mapped = false;
            Integer value = 0;
            if (method != "oracle") {
                value = count_by_formula(rec, mapped);
                if (!mapped && method == "formula")
                    throw std::invalid_argument("no recurrence covers this combination of constraints; use --method oracle");
            }
            if (!mapped || list) {
                guard("--total", rec.total, 0, oracle::kMaxTotal);
                rec.validate();
            }
            if (!mapped)
                value = oracle::count(rec);
            out << value << '\n';
            if (list)
                for (const auto& q : oracle::enumerate(rec))
                    out << q.label() << '\n';
        } else if (scheme->parsed()) {
            guard("--total", scheme_total, 1, 60);
            const TableFormat fmt = parse_table_format(scheme_format);
            out << format_table(scheme_inv ? scheme_inverse_table(scheme_total) : build_scheme(scheme_total), fmt);
        } else if (lattice->parsed()) {
            const LatticeVariant v = parse_lattice_variant(variant_str);
            if (v == LatticeVariant::hypercube && dim)
                params.bits = *dim;
            if (v == LatticeVariant::unit_exchange || v == LatticeVariant::split_merge)
                params.parts = parts_opt.value_or(params.total);
            const OrbitLattice l = build_lattice(v, params);
            if (!endpoints.empty()) {
                const int d = distance(l, endpoints[0], endpoints[1]);
                if (d == kUnreachable)
                    out << "unreachable\n";
                else
                    out << d << '\n';
            } else if (lattice_format == "dot") {
                out << export_dot(l);
            } else if (lattice_format == "json") {
                out << export_json(l);
            } else {
                out << export_edges(l);
            }
        } else if (series->parsed()) {
            guard("--order", order, 0, 400);
            TruncatedSeries<> s;
            if (kind == "euler") s = euler_product(order);
            else if (kind == "partition") s = partition_series(order);
            else if (kind == "distinct") s = distinct_series(order, false);
            else if (kind == "distinct-signed") s = distinct_series(order, true);
            else s = box_series(box_part, box_parts, order);
            out << format_series(kind, s);
        } else if (verify->parsed()) {
            guard("--max", verify_max, 1, kMaxVerifyTotal);
            const VerifyReport report = verify_suite(verify_max);
            out << report.format();
            return report.ok() ? kExitOk : kExitVerifyFailed;
        } else if (errata->parsed()) {
            out << format_errata(parse_errata_format(errata_format));
        }
    } catch (const GuardError& e) {
        err << "partlat: size guard: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        err << "partlat: size guard: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        err << "partlat: size guard: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "partlat: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace partlat
