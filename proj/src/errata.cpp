#include "partlat/errata.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "partlat/counting.hpp"
#include "partlat/int_matrix.hpp"
#include "partlat/lattice.hpp"
#include "partlat/oracle.hpp"
#include "partlat/partition.hpp"
#include "partlat/scheme.hpp"
#include "partlat/series.hpp"

namespace partlat {

namespace {

using oracle::ConstraintRecord;

std::string str(Integer v) { return std::to_string(v); }

Integer oracle_box(int m, int n, int total)
{
    if (total < 0)
        return 0;
    return oracle::count({.total = total, .max_part = m, .max_parts = n});
}

Integer oracle_exact(int total, int parts)
{
    return oracle::count({.total = total, .exact_parts = parts});
}

// Table of p(M, N) for M, N <= 6 generated by the recurrence
// p(M, N) = p(M-1, N-1) + p(M-N-shift, N).
std::array<std::array<Integer, 7>, 7> exact_by_recurrence(int shift)
{
    std::array<std::array<Integer, 7>, 7> t{};
    t[0][0] = 1;
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= m; ++n) {
            const int back = m - n - shift;
            t[m][n] = t[m - 1][n - 1] + (back >= 0 ? t[back][n] : 0);
        }
    return t;
}

ErratumCheck check_box_recurrence()
{
    ErratumCheck r;
    const Integer printed = oracle_box(2, 3, 4) + oracle_box(3, 2, 4);
    const Integer truth = oracle_box(3, 3, 4);
    const Integer corrected = oracle_box(3, 2, 4) + oracle_box(2, 3, 4 - 3);
    r.printed_fails = printed != truth;
    r.corrected_holds = corrected == truth;
    // The corrected form must hold everywhere small, not just at the witness.
    for (int m = 1; m <= 6 && r.corrected_holds; ++m)
        for (int n = 1; n <= 6; ++n)
            for (int total = 0; total <= m * n; ++total)
                if (oracle_box(m, n, total) != oracle_box(m, n - 1, total) + oracle_box(m - 1, n, total - n))
                    r.corrected_holds = false;
    r.detail = "at (3,3,4): printed " + str(printed) + ", true " + str(truth) + ", corrected " + str(corrected);
    return r;
}

ErratumCheck check_exact_recurrence()
{
    ErratumCheck r;
    const auto printed = exact_by_recurrence(1);
    const auto corrected = exact_by_recurrence(0);
    bool corrected_ok = true;
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n)
            if (corrected[m][n] != oracle_exact(m, n))
                corrected_ok = false;
    const Integer at_witness = oracle_exact(5, 1) + oracle_exact(3, 2);
    r.printed_fails = at_witness != oracle_exact(6, 2) && printed[6][2] != oracle_exact(6, 2);
    r.corrected_holds = corrected_ok;
    r.detail = "p(6,2): p(5,1) + p(3,2) = " + str(at_witness) + ", true " + str(oracle_exact(6, 2))
               + " (iterating the printed form gives " + str(printed[6][2]) + "); corrected form reproduces rows 0..6";
    return r;
}

ErratumCheck check_partition_matrix_index()
{
    ErratumCheck r;
    // Left block of the partition / Euler inversion table, column 0.
    const std::array<Integer, 6> printed_column{1, 1, 2, 3, 5, 7};
    bool shifted_matches = true;
    bool plain_matches = true;
    for (int i = 0; i < 6; ++i) {
        if (oracle::count({.total = i + 1}) != printed_column[i])
            shifted_matches = false;
        if (oracle::count({.total = i}) != printed_column[i])
            plain_matches = false;
    }
    r.printed_fails = !shifted_matches;
    r.corrected_holds = plain_matches;
    r.detail = "cell (1,0) is printed 1; p(i-j+1) = p(2) = " + str(oracle::count({.total = 2})) + ", p(i-j) = p(1) = "
               + str(oracle::count({.total = 1}));
    return r;
}

ErratumCheck check_layer_list()
{
    ErratumCheck r;
    const std::vector<Partition> printed{
        Partition::of({5, 5, 3}),    Partition::of({5, 4, 4}),    Partition::of({4, 4, 4, 1}),
        Partition::of({4, 4, 3, 2}), Partition::of({4, 3, 3, 3}), Partition::of({3, 3, 3, 3, 1}),
        Partition::of({3, 3, 3, 2, 1}),
    };
    const auto bad = std::find_if(printed.begin(), printed.end(), [](const Partition& p) { return p.sum() != 13; });
    r.printed_fails = bad != printed.end();

    std::vector<Partition> corrected = printed;
    corrected.back() = Partition::of({3, 3, 3, 2, 2});
    std::sort(corrected.begin(), corrected.end());
    std::vector<Partition> truth = oracle::enumerate({.total = 13, .layer = 7});
    std::sort(truth.begin(), truth.end());
    r.corrected_holds = corrected == truth;
    r.detail = "listed " + (bad == printed.end() ? std::string("nothing") : bad->label()) + " sums to "
               + (bad == printed.end() ? std::string("13") : str(bad->sum())) + "; layer 7 of 13 has "
               + std::to_string(truth.size()) + " members";
    return r;
}

ErratumCheck check_square_inequality()
{
    ErratumCheck r;
    r.printed_fails = true;
    r.corrected_holds = true;
    for (Integer x = 1; x <= 50; ++x) {
        const Integer lhs = (x + 1) * (x + 1) + (x - 1) * (x - 1);
        if (lhs > 4 * x * x)
            r.printed_fails = false;
        if (lhs != 2 * x * x + 2 || !(lhs > x * x + x * x))
            r.corrected_holds = false;
    }
    r.detail = "x = 2: (x+1)^2 + (x-1)^2 = 10, (2x)^2 = 16";
    return r;
}

ErratumCheck check_summation_condition()
{
    ErratumCheck r;
    const IntMatrix table1 = [] {
        IntMatrix m(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                m(i, j) = oracle_exact(i + 1, j + 1);
        return m;
    }();
    IntMatrix table2(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            table2(i, j) = oracle::count({.total = i + 1, .max_parts = j + 1});
    const IntMatrix upper = multiply(table1, summation_matrix(6, Triangle::upper));
    const IntMatrix lower = multiply(table1, summation_matrix(6, Triangle::lower));
    r.printed_fails = lower != table2;
    r.corrected_holds = upper == table2;
    std::ostringstream os;
    os << "row 6 times the j <= i reading gives (" << lower(5, 0) << "," << lower(5, 1) << ",...); the j >= i reading gives ("
       << upper(5, 0) << "," << upper(5, 1) << ",...," << upper(5, 5) << ")";
    r.detail = os.str();
    return r;
}

ErratumCheck check_min_part_operator()
{
    ErratumCheck r;
    // Row 6 of the exact-parts table, columns n = 0..6, after one more
    // multiplication by the inverse upper summation matrix.
    IntMatrix row(1, 7);
    for (int n = 0; n <= 6; ++n)
        row(0, n) = oracle_exact(6, n);
    const IntMatrix once = multiply(row, summation_inverse(7, Triangle::upper));
    r.printed_fails = (once.array() < 0).any();
    bool shift_ok = true;
    for (int n = 0; n <= 6; ++n)
        if (p_min_part(6, n, 2) != oracle::count({.total = 6, .exact_parts = n, .min_part = 2}))
            shift_ok = false;
    r.corrected_holds = shift_ok;
    std::ostringstream os;
    os << "row 6 gives (";
    for (int n = 0; n <= 6; ++n)
        os << (n ? "," : "") << once(0, n);
    os << ")";
    r.detail = os.str();
    return r;
}

ErratumCheck check_signed_distinct()
{
    ErratumCheck r;
    const auto signed_series = distinct_series(12, true);
    const auto unsigned_series = distinct_series(12, false);
    r.printed_fails = false;
    r.corrected_holds = true;
    for (int m = 0; m <= 12; ++m) {
        const Integer truth = oracle::count({.total = m, .parity = oracle::Parity::distinct});
        if (signed_series[m] != truth)
            r.printed_fails = true;
        if (unsigned_series[m] != truth)
            r.corrected_holds = false;
    }
    r.detail = "t^3: prod(1 - t^k) gives " + str(signed_series[3]) + ", distinct-part partitions of 3: "
               + str(oracle::count({.total = 3, .parity = oracle::Parity::distinct}));
    return r;
}

ErratumCheck check_box_midpoint()
{
    ErratumCheck r;
    // Counts of the 2x2 box are 1,1,2,1,1, so the descent cannot start at M = mn/2.
    r.printed_fails = oracle_box(2, 2, 2) > oracle_box(2, 2, 1);
    r.corrected_holds = true;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            for (int total = 1; total <= m * n; ++total) {
                const Integer here = oracle_box(m, n, total);
                const Integer before = oracle_box(m, n, total - 1);
                if (2 * total <= m * n && here < before)
                    r.corrected_holds = false;
                if (2 * total > m * n && here > before)
                    r.corrected_holds = false;
            }
    r.detail = "(m,n,M) = (2,2,2): p = " + str(oracle_box(2, 2, 2)) + " > p(2,2,1) = " + str(oracle_box(2, 2, 1));
    return r;
}

ErratumCheck check_scheme7_total()
{
    ErratumCheck r;
    const IntTable s = build_scheme(7);
    const std::vector<Integer> printed_sums{1, 3, 4, 3, 2, 1, 1};
    const Integer printed_total = 11;
    r.printed_fails = printed_total != s.total();
    r.corrected_holds = s.col_sums() == printed_sums && s.total() == oracle::count({.total = 7});
    r.detail = "printed total 11; sum row adds to "
               + str(std::accumulate(printed_sums.begin(), printed_sums.end(), Integer{0})) + " = p(7)";
    return r;
}

ErratumCheck check_scheme14_cells()
{
    ErratumCheck r;
    const Integer a = oracle::count({.total = 14, .exact_parts = 4, .exact_max_part = 4});
    const Integer b = oracle::count({.total = 14, .exact_parts = 5, .exact_max_part = 3});
    const Integer mirror = oracle::count({.total = 14, .exact_parts = 3, .exact_max_part = 5});
    r.printed_fails = a != 3 && b != 2;
    r.corrected_holds = exact_frame(4, 4, 14) == a && exact_frame(3, 5, 14) == b && b == mirror;
    r.detail = "(m=4,n=4): printed 3, true " + str(a) + "; (m=3,n=5): printed 2, true " + str(b)
               + ", its mirror (m=5,n=3) is " + str(mirror);
    return r;
}

ErratumCheck check_vectors_row()
{
    ErratumCheck r;
    // Multiplicity rows of the partitions-as-vectors table, one count per
    // consecutive part value starting at the base.
    const std::vector<std::vector<long long>> rows{
        {4, 0, 0, 0, 0, 1}, {3, 1, 0, 0, 1}, {3, 0, 1, 1}, {2, 2, 0, 1}, {2, 1, 2}, {1, 3, 1}, {1, 2, 2}, {0, 5},
    };
    std::vector<Partition> decoded;
    Integer odd_sum = 0;
    for (const auto& counts : rows) {
        const MultiplicityVector mv(1, counts);
        if (counts == std::vector<long long>{1, 2, 2})
            odd_sum = shift_base(mv, -3).weighted_sum();
        else
            decoded.push_back(Partition::canonicalize(from_multiplicity(mv)));
    }
    std::sort(decoded.begin(), decoded.end());
    auto truth = oracle::enumerate({.total = 10, .exact_parts = 5});
    std::sort(truth.begin(), truth.end());
    r.printed_fails = odd_sum != -5;
    r.corrected_holds = decoded == truth;
    r.detail = "row (1,2,2) at base -2 weighs " + str(odd_sum) + "; the other seven rows are the partitions of 10 into 5 parts";
    return r;
}

ErratumCheck check_cube_orbit_label()
{
    ErratumCheck r;
    const Partition printed = Partition::of({2, 1, 0});
    const Partition corrected = Partition::of({2, 0, 0});
    auto truth = oracle::enumerate({.total = 2, .max_part = 3, .max_parts = 3});
    r.printed_fails = printed.sum() != 2;
    r.corrected_holds = std::find(truth.begin(), truth.end(), corrected) != truth.end() && truth.size() == 2;
    r.detail = "orbit 210 sums to " + str(printed.sum()) + "; sum-2 orbits of the 3-cube are 200 and 110";
    return r;
}

ErratumCheck check_lattice_labels()
{
    ErratumCheck r;
    const OrbitLattice l = build_lattice(LatticeVariant::unit_exchange, {.total = 7, .parts = 7});
    const auto& labels = l.labels();
    auto has = [&](const char* s) { return std::find(labels.begin(), labels.end(), s) != labels.end(); };
    r.printed_fails = !has("6000000") && !has("5100000");
    r.corrected_holds = has("6100000") && has("5200000") && l.node_count() == 15;
    r.detail = "6000000 and 5100000 sum to 6; the (7,7) nodes are 6100000 and 5200000";
    return r;
}

ErratumCheck check_scheme7_inverse()
{
    ErratumCheck r;
    // Printed inversion block, rows m = 7..1, columns n = 1..7.
    IntMatrix printed(7, 7);
    printed << 1, 0, 0, 0, 0, 0, 0,
               0, 1, 0, 0, 0, 0, 0,
               0, 0, 1, 0, 0, 0, 0,
               0, 0, -1, 1, 0, 0, 0,
               0, 2, -1, -1, 1, 0, 0,
               0, -2, 2, 0, -1, 1, 0,
               0, 0, 0, 0, 0, 0, 1;
    const IntMatrix s = scheme_matrix(7);
    IntMatrix corrected = printed;
    corrected(2, 1) = -1;
    r.printed_fails = !is_identity(multiply(s, printed));
    r.corrected_holds = is_identity(multiply(s, corrected)) && corrected == scheme_inverse(7);
    r.detail = "cell (m=5,n=2): printed 0, exact " + str(scheme_inverse(7)(2, 1));
    return r;
}

const std::vector<Erratum> kLedger{
    {"box-recurrence", "box-partition recurrence in the m-dimensional cube discussion",
     "p(m,n,M) = p(m-1,n,M) + p(m,n-1,M)", "(m,n,M) = (3,3,4): printed 4, true 3 (310, 220, 211)",
     "p(m,n,M) = p(m,n-1,M) + p(m-1,n,M-n)", check_box_recurrence},
    {"exact-parts-recurrence", "recurrence for partitions into exactly N parts",
     "p(M,N) = p(M-1,N-1) + p(M-N-1,N)", "exact-parts table row 6, n = 2: printed form gives 2, true 3",
     "p(M,N) = p(M-1,N-1) + p(M-N,N)", check_exact_recurrence},
    {"partition-matrix-index", "definition of the partition Toeplitz matrix", "p_ij = p(i-j+1)",
     "table cell (i=1,j=0) is 1 while p(2) = 2", "p_ij = p(i-j)", check_partition_matrix_index},
    {"layer-list", "list of layer-7 partitions of 13", "member 3,3,3,2,1", "3+3+3+2+1 = 12",
     "member 3,3,3,2,2", check_layer_list},
    {"square-inequality", "vector-length comparison between scheme rows", "(x+1)^2 + (x-1)^2 > (2x)^2",
     "x = 2: 10 > 16 is false; fails for every x >= 1", "(x+1)^2 + (x-1)^2 = 2x^2 + 2 > x^2 + x^2",
     check_square_inequality},
    {"summation-condition", "summation matrix definition", "h_ij = 1 if j >= i; h_ij = 0 if j > i",
     "the two clauses overlap for j > i", "h_ij = 1 if j >= i, otherwise 0", check_summation_condition},
    {"min-part-operator", "claim that a second inverse summation yields smallest part 2",
     "second multiplication by the inverse summation matrix gives partitions with smallest part 2",
     "exact-parts row 6 gives (0,1,2,0,-1,-1,0), with negative cells",
     "p_min(M,N,r) = p(M - N(r-1), N) by shifting every part", check_min_part_operator},
    {"signed-distinct", "generating function of partitions into unequal parts", "u(t) = prod (1 - t^k)",
     "t^3: coefficient 0, but 3 and 21 give 2 partitions",
     "prod (1 + t^k); prod (1 - t^k) counts even minus odd numbers of parts", check_signed_distinct},
    {"box-descent-midpoint", "unimodality of box-partition counts",
     "M >= mn/2 implies p(m,n,M) <= p(m,n,M-1)", "(2,2,2): p = 2 but p(2,2,1) = 1",
     "M > mn/2 implies p(m,n,M) <= p(m,n,M-1); the rise for M <= mn/2 is as printed", check_box_midpoint},
    {"scheme7-total", "partition scheme (7,7)", "grand total 11", "the sum row 1,3,4,3,2,1,1 adds to 15",
     "grand total 15 = p(7)", check_scheme7_total},
    {"scheme14-cells", "partition scheme for M = 14", "cells (m=4,n=4) = 3 and (m=3,n=5) = 2",
     "4442, 4433 and 33332 are the only such partitions", "cells 2 and 1", check_scheme14_cells},
    {"vectors-row", "partitions-as-vectors table", "row of counts (1,2,2)",
     "weighs -4 at base -2 where every other row weighs -5", "row removed; seven rows remain",
     check_vectors_row},
    {"cube-orbit-label", "orbit lists of the 3-cube, edge 3, total 2", "orbits 210; 110", "210 sums to 3",
     "orbits 200; 110", check_cube_orbit_label},
    {"lattice-figure-labels", "drawing of the (7,7) unit-exchange lattice", "node labels 6000000 and 5100000",
     "both sum to 6", "6100000 and 5200000", check_lattice_labels},
    {"scheme7-inverse-cell", "inversion block of the partition scheme (7,7)", "cell (m=5,n=2) = 0",
     "scheme times the printed block is not the identity", "cell (m=5,n=2) = -1", check_scheme7_inverse},
};

} // namespace

const std::vector<Erratum>& errata_ledger()
{
    return kLedger;
}

const Erratum& find_erratum(std::string_view id)
{
    for (const auto& e : kLedger)
        if (e.id == id)
            return e;
    throw std::out_of_range("no erratum '" + std::string(id) + "'");
}

ErrataFormat parse_errata_format(std::string_view name)
{
    if (name == "text")
        return ErrataFormat::text;
    if (name == "json")
        return ErrataFormat::json;
    throw std::invalid_argument("errata format must be text or json");
}

std::string format_errata(ErrataFormat format)
{
    if (format == ErrataFormat::json) {
        nlohmann::ordered_json j;
        j["version"] = kErrataVersion;
        auto entries = nlohmann::ordered_json::array();
        for (const auto& e : kLedger)
            entries.push_back({{"id", e.id},
                               {"location", e.location},
                               {"printed", e.printed_claim},
                               {"witness", e.witness},
                               {"corrected", e.corrected_form}});
        j["errata"] = std::move(entries);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "# errata v" << kErrataVersion << "\n";
    for (const auto& e : kLedger) {
        os << "\n[" << e.id << "]\n"
           << "location:  " << e.location << '\n'
           << "printed:   " << e.printed_claim << '\n'
           << "witness:   " << e.witness << '\n'
           << "corrected: " << e.corrected_form << '\n';
    }
    return os.str();
}

} // namespace partlat
