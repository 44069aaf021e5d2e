#include "partlat/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "partlat/counting.hpp"
#include "partlat/errata.hpp"
#include "partlat/int_matrix.hpp"
#include "partlat/matrices.hpp"
#include "partlat/oracle.hpp"
#include "partlat/partition.hpp"
#include "partlat/scheme.hpp"
#include "partlat/series.hpp"

namespace partlat {

namespace {

using Counterexample = std::optional<std::string>;

template <typename... Args>
std::string describe(const Args&... args)
{
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

// Every partition of 0..max_total, enumerated once by the oracle.
struct Census {
    std::vector<std::vector<Partition>> by_total;

    explicit Census(int max_total)
    {
        for (int m = 0; m <= max_total; ++m)
            by_total.push_back(oracle::enumerate({.total = m}));
    }

    template <typename Pred>
    Integer tally(int total, Pred pred) const
    {
        return std::count_if(by_total[total].begin(), by_total[total].end(), pred);
    }
};

bool all_odd(const Partition& p)
{
    for (int x : p.nonzero_parts())
        if (x % 2 == 0)
            return false;
    return true;
}

bool all_even(const Partition& p)
{
    for (int x : p.nonzero_parts())
        if (x % 2 != 0)
            return false;
    return true;
}

bool all_distinct(const Partition& p)
{
    const auto parts = p.nonzero_parts();
    return std::adjacent_find(parts.begin(), parts.end()) == parts.end();
}

Integer binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    Integer c = 1;
    for (int i = 1; i <= k; ++i)
        c = c * (n - k + i) / i;
    return c;
}

class Runner {
public:
    void check(std::string name, const std::function<Counterexample()>& body)
    {
        CheckResult r{std::move(name), CheckStatus::pass, {}};
        try {
            if (auto bad = body()) {
                r.status = CheckStatus::fail;
                r.detail = *bad;
            }
        } catch (const std::exception& e) {
            r.status = CheckStatus::fail;
            r.detail = describe("exception: ", e.what());
        }
        results.push_back(std::move(r));
    }

    std::vector<CheckResult> results;
};

} // namespace

std::string_view status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::documented_erratum: return "erratum";
    }
    return "?";
}

bool VerifyReport::ok() const
{
    return std::none_of(results.begin(), results.end(),
                        [](const CheckResult& r) { return r.status == CheckStatus::fail; });
}

std::string VerifyReport::format() const
{
    std::ostringstream os;
    os << "# verify --max " << max_total << '\n';
    for (const auto& r : results) {
        os << status_name(r.status) << '\t' << r.name;
        if (!r.detail.empty())
            os << '\t' << r.detail;
        os << '\n';
    }
    const auto failed = std::count_if(results.begin(), results.end(),
                                      [](const CheckResult& r) { return r.status == CheckStatus::fail; });
    os << "# " << results.size() << " checks, " << failed << " failed\n";
    return os.str();
}

bool unit_exchange_adjacent(const std::vector<int>& a, const std::vector<int>& b)
{
    if (a.size() != b.size())
        return false;
    int plus = 0;
    int minus = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int d = b[i] - a[i];
        if (d == 1)
            ++plus;
        else if (d == -1)
            ++minus;
        else if (d != 0)
            return false;
    }
    return plus == 1 && minus == 1;
}

std::vector<OrbitLattice::Edge> unit_exchange_edges_by_scan(const OrbitLattice& l)
{
    std::vector<OrbitLattice::Edge> edges;
    for (std::size_t i = 0; i < l.node_count(); ++i)
        for (std::size_t j = i + 1; j < l.node_count(); ++j)
            if (unit_exchange_adjacent(l.nodes()[i], l.nodes()[j]))
                edges.emplace_back(i, j);
    return edges;
}

int power_of_two_diagonals(int d_max)
{
    for (int d = 1; d <= d_max; ++d)
        if (diagonal_sum(d) != (Integer{1} << (d - 1)))
            return d;
    return 0;
}

VerifyReport verify_suite(int max_total)
{
    if (max_total < 1 || max_total > kMaxVerifyTotal)
        throw std::out_of_range("verify: max total must be in 1.." + std::to_string(kMaxVerifyTotal));

    const int n = max_total;
    const Census census(n);
    Runner run;

    run.check("p: pentagonal = row sum = oracle", [&]() -> Counterexample {
        for (int m = 0; m <= n; ++m) {
            const Integer truth = static_cast<Integer>(census.by_total[m].size());
            const Integer a = p(m, PartitionMethod::pentagonal);
            const Integer b = p(m, PartitionMethod::row_sum);
            if (a != truth || b != truth)
                return describe("M=", m, ": pentagonal ", a, ", row sum ", b, ", oracle ", truth);
        }
        return std::nullopt;
    });

    run.check("p_exact and p_atmost = oracle", [&]() -> Counterexample {
        for (int m = 0; m <= n; ++m)
            for (int k = 0; k <= m + 1; ++k) {
                const Integer exact = census.tally(m, [k](const Partition& q) { return q.nonzero_count() == std::size_t(k); });
                const Integer atmost = census.tally(m, [k](const Partition& q) { return q.nonzero_count() <= std::size_t(k); });
                if (p_exact(m, k) != exact)
                    return describe("p_exact(", m, ",", k, ") = ", p_exact(m, k), ", oracle ", exact);
                if (p_atmost(m, k) != atmost)
                    return describe("p_atmost(", m, ",", k, ") = ", p_atmost(m, k), ", oracle ", atmost);
            }
        return std::nullopt;
    });

    run.check("p_box and exact_frame = oracle", [&]() -> Counterexample {
        for (int m = 0; m <= n; ++m)
            for (int a = 0; a <= m; ++a)
                for (int b = 0; b <= m; ++b) {
                    const Integer box = census.tally(m, [a, b](const Partition& q) {
                        return q.largest() <= a && q.nonzero_count() <= std::size_t(b);
                    });
                    const Integer frame = census.tally(m, [a, b](const Partition& q) {
                        return q.largest() == a && q.nonzero_count() == std::size_t(b);
                    });
                    if (p_box(a, b, m) != box)
                        return describe("p_box(", a, ",", b, ",", m, ") = ", p_box(a, b, m), ", oracle ", box);
                    if (exact_frame(a, b, m) != frame)
                        return describe("exact_frame(", a, ",", b, ",", m, ") = ", exact_frame(a, b, m), ", oracle ", frame);
                }
        return std::nullopt;
    });

    run.check("p_min_part = oracle", [&]() -> Counterexample {
        for (int m = 0; m <= n; ++m)
            for (int k = 0; k <= m; ++k)
                for (int r = 1; r <= 3; ++r) {
                    const Integer truth = census.tally(m, [k, r](const Partition& q) {
                        const auto parts = q.nonzero_parts();
                        return parts.size() == std::size_t(k) && (parts.empty() || parts.back() >= r);
                    });
                    if (p_min_part(m, k, r) != truth)
                        return describe("p_min_part(", m, ",", k, ",", r, ") = ", p_min_part(m, k, r), ", oracle ", truth);
                }
        return std::nullopt;
    });

    run.check("odd / even / mixed = oracle", [&]() -> Counterexample {
        for (int m = 1; m <= n; ++m) {
            const ParitySplit s = odd_even_mixed(m);
            const Integer odd = census.tally(m, all_odd);
            const Integer even = census.tally(m, all_even);
            const Integer total = static_cast<Integer>(census.by_total[m].size());
            if (s.odd != odd || s.even != even || s.mixed != total - odd - even || s.total != total)
                return describe("M=", m, ": (", s.odd, ",", s.even, ",", s.mixed, ") vs oracle (", odd, ",", even, ",",
                                total - odd - even, ")");
        }
        return std::nullopt;
    });

    run.check("distinct parts = oracle, difference = -e(M)", [&]() -> Counterexample {
        for (int m = 1; m <= n; ++m) {
            const DistinctRow row = distinct_table(m);
            Integer signed_count = 0;
            for (int k = 1; k <= m; ++k) {
                const Integer truth = census.tally(m, [k](const Partition& q) {
                    return all_distinct(q) && q.nonzero_count() == std::size_t(k);
                });
                if (distinct_with_parts(m, k) != truth)
                    return describe("q(", m, ",", k, ") = ", distinct_with_parts(m, k), ", oracle ", truth);
                signed_count += k % 2 ? truth : -truth;
            }
            if (row.difference != signed_count || row.difference != -euler_coefficient(m))
                return describe("M=", m, ": difference ", row.difference, ", oracle ", signed_count, ", -e(M) ",
                                -euler_coefficient(m));
        }
        return std::nullopt;
    });

    run.check("unit differences = oracle", [&]() -> Counterexample {
        const IntTable t = unit_diff_table(n);
        for (int m = 0; m <= n; ++m)
            for (int j = 0; j <= n; ++j) {
                const Integer truth = census.tally(m, [j](const Partition& q) { return q.multiplicity(1) == std::size_t(j); });
                if (t.at(m, j) != truth)
                    return describe("cell(", m, ",", j, ") = ", t.at(m, j), ", oracle ", truth);
            }
        return std::nullopt;
    });

    run.check("layer counts = oracle", [&]() -> Counterexample {
        for (int m = 0; m <= n; ++m)
            for (int k = 0; k <= m; ++k) {
                const Integer truth = census.tally(m, [k](const Partition& q) { return layer(q) == k; });
                if (layer_count(m, k) != truth)
                    return describe("layer_count(", m, ",", k, ") = ", layer_count(m, k), ", oracle ", truth);
            }
        return std::nullopt;
    });

    run.check("series: partition coefficients = p, Euler product = closed form", [&]() -> Counterexample {
        const auto ps = partition_series(n);
        const auto e = euler_product(n);
        for (int m = 0; m <= n; ++m) {
            if (ps[m] != static_cast<Integer>(census.by_total[m].size()))
                return describe("t^", m, ": ", ps[m]);
            if (e[m] != euler_coefficient(m))
                return describe("e(", m, "): product ", e[m], ", closed form ", euler_coefficient(m));
        }
        if (!(multiply(e, ps) == TruncatedSeries<>::one(n)))
            return std::string("euler * partition series != 1");
        return std::nullopt;
    });

    run.check("box series = p_box", [&]() -> Counterexample {
        for (int a = 0; a <= 5; ++a)
            for (int b = 0; b <= 5; ++b) {
                const auto s = box_series(a, b, a * b);
                for (int m = 0; m <= a * b; ++m)
                    if (s[m] != p_box(a, b, m))
                        return describe("(", a, ",", b, ") t^", m, ": ", s[m], " vs ", p_box(a, b, m));
            }
        return std::nullopt;
    });

    run.check("P * E = I, Toeplitz columns", [&]() -> Counterexample {
        const int size = n + 1;
        const IntMatrix pm = partition_matrix(size);
        const IntMatrix em = euler_matrix(size);
        if (!is_identity(multiply(pm, em)))
            return std::string("P * E is not the identity");
        for (int j = 1; j < size; ++j)
            for (int i = j; i < size; ++i)
                if (pm(i, j) != pm(i - j, 0) || em(i, j) != em(i - j, 0))
                    return describe("column ", j, " is not a shifted copy at row ", i);
        return std::nullopt;
    });

    run.check("at-most = exact-parts * summation, inverses", [&]() -> Counterexample {
        const IntMatrix t1 = exact_parts_matrix(n);
        IntMatrix t2(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                t2(i, j) = p_atmost(i + 1, j + 1);
        if (multiply(t1, summation_matrix(n)) != t2)
            return std::string("exact * T != at-most");
        if (multiply(t2, summation_inverse(n)) != t1)
            return std::string("at-most * T^-1 != exact");
        for (const auto& [name, m] : table_inverses(n))
            if (name != "summation-times-euler" && !is_identity(multiply(m, invert_unitriangular(m))))
                return describe(name, " times its inverse is not the identity");
        const IntMatrix te = multiply(summation_matrix(n, Triangle::lower), euler_matrix(n));
        if (invert_unitriangular(unit_diff_matrix(n)) != te)
            return std::string("unit-diff inverse != T * E");
        return std::nullopt;
    });

    run.check("p_box symmetry, complement, unimodality", [&]() -> Counterexample {
        for (int a = 0; a <= 5; ++a)
            for (int b = 0; b <= 5; ++b)
                for (int m = 0; m <= a * b; ++m) {
                    if (p_box(a, b, m) != p_box(b, a, m))
                        return describe("symmetry at (", a, ",", b, ",", m, ")");
                    if (p_box(a, b, m) != p_box(a, b, a * b - m))
                        return describe("complement at (", a, ",", b, ",", m, ")");
                    if (m >= 1 && 2 * m <= a * b && p_box(a, b, m) < p_box(a, b, m - 1))
                        return describe("not increasing at (", a, ",", b, ",", m, ")");
                    if (m >= 1 && 2 * m > a * b && p_box(a, b, m) > p_box(a, b, m - 1))
                        return describe("not decreasing at (", a, ",", b, ",", m, ")");
                }
        return std::nullopt;
    });

    run.check("conjugate involution, Ferrers transpose", [&]() -> Counterexample {
        for (int m = 0; m <= std::min(n, 12); ++m)
            for (const auto& q : census.by_total[m]) {
                const Partition c = conjugate(q);
                if (conjugate(c) != q)
                    return describe(q.label(), ": double conjugate ", conjugate(c).label());
                const int rows = std::max<int>(1, static_cast<int>(q.nonzero_count()));
                const int cols = std::max(1, q.largest());
                if (from_ferrers(transpose(to_ferrers(q, rows, cols))) != c)
                    return describe(q.label(), ": transposed Ferrers matrix is not the conjugate");
                if (1 + interior(q).sum() != layer(q) && !q.empty())
                    return describe(q.label(), ": layer != 1 + interior");
            }
        return std::nullopt;
    });

    run.check("schemes: symmetric, unitriangular, sums", [&]() -> Counterexample {
        for (int m = 1; m <= std::min(n, 14); ++m) {
            const IntTable s = build_scheme(m);
            const IntMatrix& c = s.cells();
            for (int a = 1; a <= m; ++a)
                for (int b = 1; b <= m; ++b)
                    if (s.at(a, b) != s.at(b, a))
                        return describe("M=", m, ": cell(", a, ",", b, ") != cell(", b, ",", a, ")");
            if (shape_of(c) != ShapeTag::lower_unitriangular)
                return describe("M=", m, ": not lower unitriangular");
            if (s.total() != static_cast<Integer>(census.by_total[m].size()))
                return describe("M=", m, ": total ", s.total());
            const auto cols = s.col_sums();
            for (int k = 1; k <= m; ++k)
                if (cols[k - 1] != p_exact(m, k) || cols[k - 1] != p_fixed_parts(k, m))
                    return describe("M=", m, ": column ", k, " sums to ", cols[k - 1]);
            if (!is_identity(multiply(c, scheme_inverse(m))))
                return describe("M=", m, ": scheme * inverse != I");
        }
        return std::nullopt;
    });

    run.check("unit-exchange edges = pair scan", [&]() -> Counterexample {
        for (int m = 1; m <= std::min(n, 12); ++m) {
            const OrbitLattice l = build_lattice(LatticeVariant::unit_exchange, {.total = m, .parts = m});
            if (l.node_count() != census.by_total[m].size())
                return describe("M=", m, ": ", l.node_count(), " nodes");
            if (l.edges() != unit_exchange_edges_by_scan(l))
                return describe("M=", m, ": edge set differs from the pair scan");
        }
        return std::nullopt;
    });

    run.check("split-merge graded by part count", [&]() -> Counterexample {
        for (int m = 1; m <= std::min(n, 12); ++m) {
            const OrbitLattice l = build_lattice(LatticeVariant::split_merge, {.total = m, .parts = m});
            for (const auto& [a, b] : l.edges()) {
                auto nz = [&](std::size_t i) {
                    return std::count_if(l.nodes()[i].begin(), l.nodes()[i].end(), [](int x) { return x != 0; });
                };
                if (std::abs(nz(a) - nz(b)) != 1)
                    return describe("M=", m, ": edge ", l.labels()[a], " -- ", l.labels()[b]);
            }
        }
        return std::nullopt;
    });

    run.check("right-hand neighbors: row sum = p(0) + ... + p(M-2)", [&]() -> Counterexample {
        for (int m = 2; m <= std::min(n, 12); ++m) {
            const auto row = column_edge_counts(m);
            Integer s = 0;
            for (Integer x : row)
                s += x;
            if (s != right_hand_neighbor_total(m))
                return describe("M=", m, ": row sum ", s, " vs ", right_hand_neighbor_total(m));
        }
        if (n >= 7 && column_edge_counts(7) != std::vector<Integer>{1, 5, 6, 4, 2, 1})
            return std::string("M=7 row is not (1,5,6,4,2,1)");
        return std::nullopt;
    });

    run.check("diagonal sums = 2^(d-1)", [&]() -> Counterexample {
        if (const int d = power_of_two_diagonals(std::min(n, 14)))
            return describe("d=", d, ": ", diagonal_sum(d));
        return std::nullopt;
    });

    run.check("layer rows are binomial", [&]() -> Counterexample {
        for (int r = 1; r <= std::min(n, 12); ++r) {
            const auto row = binomial_row(r);
            for (int k = 1; k <= r; ++k)
                if (row[k - 1] != binomial(r - 1, k - 1))
                    return describe("r=", r, ", k=", k, ": ", row[k - 1]);
        }
        return std::nullopt;
    });

    for (const auto& e : errata_ledger()) {
        CheckResult r{"erratum " + e.id, CheckStatus::documented_erratum, {}};
        try {
            const ErratumCheck c = e.check();
            r.detail = c.detail;
            if (!c.confirmed()) {
                r.status = CheckStatus::fail;
                r.detail = describe(c.printed_fails ? "" : "printed claim not refuted; ",
                                    c.corrected_holds ? "" : "corrected form does not hold; ", c.detail);
            }
        } catch (const std::exception& ex) {
            r.status = CheckStatus::fail;
            r.detail = describe("exception: ", ex.what());
        }
        run.results.push_back(std::move(r));
    }

    return VerifyReport{max_total, std::move(run.results)};
}

} // namespace partlat
