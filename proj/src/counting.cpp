#include "partlat/counting.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "partlat/lattice.hpp"
#include "partlat/oracle.hpp"

namespace partlat {

namespace {

// Cache shared by concurrent callers. Entries are computed outside the lock;
// a racing writer stores the same value, so readers always see one result.
template <typename Key>
class Memo {
public:
    template <typename Compute>
    Integer get(const Key& key, Compute&& compute)
    {
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end())
                return it->second;
        }
        Integer value = compute();
        std::lock_guard lock(mutex_);
        return cache_.emplace(key, value).first->second;
    }

private:
    std::mutex mutex_;
    std::map<Key, Integer> cache_;
};

Integer pentagonal_p(int n)
{
    if (n < 0)
        return 0;
    if (n == 0)
        return 1;
    static Memo<int> memo;
    return memo.get(n, [n] {
        Integer s = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > n)
                break;
            const int g2 = k * (3 * k + 1) / 2;
            Integer term = checked_add(pentagonal_p(n - g1), pentagonal_p(n - g2));
            s = (k % 2 == 1) ? checked_add(s, term) : checked_sub(s, term);
        }
        return s;
    });
}

} // namespace

Integer p(int total, PartitionMethod method)
{
    if (total < 0)
        return 0;
    switch (method) {
    case PartitionMethod::pentagonal: return pentagonal_p(total);
    case PartitionMethod::row_sum: {
        Integer s = 0;
        for (int n = 0; n <= total; ++n)
            s = checked_add(s, p_exact(total, n));
        return s;
    }
    case PartitionMethod::oracle: return oracle::count({.total = total});
    }
    throw std::invalid_argument("p: unknown method");
}

Integer p_exact(int total, int parts)
{
    if (total < 0 || parts < 0)
        return 0;
    if (total == 0 || parts == 0)
        return total == 0 && parts == 0 ? 1 : 0;
    if (parts > total)
        return 0;
    static Memo<std::pair<int, int>> memo;
    return memo.get({total, parts},
                    [=] { return checked_add(p_exact(total - 1, parts - 1), p_exact(total - parts, parts)); });
}

Integer p_atmost(int total, int parts)
{
    if (total < 0 || parts < 0)
        return 0;
    if (total == 0)
        return 1;
    if (parts == 0)
        return 0;
    if (parts > total)
        parts = total;
    static Memo<std::pair<int, int>> memo;
    return memo.get({total, parts},
                    [=] { return checked_add(p_atmost(total, parts - 1), p_atmost(total - parts, parts)); });
}

Integer p_box(int max_part, int max_parts, int total)
{
    if (total < 0 || max_part < 0 || max_parts < 0)
        return 0;
    if (total == 0)
        return 1;
    if (max_part == 0 || max_parts == 0)
        return 0;
    if (static_cast<long long>(max_part) * max_parts < total)
        return 0;
    static Memo<std::tuple<int, int, int>> memo;
    return memo.get({max_part, max_parts, total}, [=] {
        return checked_add(p_box(max_part, max_parts - 1, total), p_box(max_part - 1, max_parts, total - max_parts));
    });
}

Integer exact_frame(int largest, int parts, int total)
{
    if (largest < 0 || parts < 0 || total < 0)
        return 0;
    if (largest == 0 || parts == 0)
        return largest == 0 && parts == 0 && total == 0 ? 1 : 0;
    return p_box(largest - 1, parts - 1, total - largest - parts + 1);
}

Integer p_fixed_largest(int largest, int total)
{
    Integer s = 0;
    for (int j = 0; j <= total; ++j)
        s = checked_add(s, exact_frame(largest, j, total));
    return s;
}

Integer p_fixed_parts(int parts, int total)
{
    Integer s = 0;
    for (int i = 0; i <= total; ++i)
        s = checked_add(s, exact_frame(i, parts, total));
    return s;
}

Integer p_min_part(int total, int parts, int lowest)
{
    if (parts < 0)
        return 0;
    const long long shifted = static_cast<long long>(total) - static_cast<long long>(parts) * (lowest - 1LL);
    if (shifted < 0)
        return 0;
    if (shifted > 100000)
        throw std::out_of_range("p_min_part: shifted total " + std::to_string(shifted) + " is out of range");
    return p_exact(static_cast<int>(shifted), parts);
}

Integer odd_with_parts(int total, int parts)
{
    if (total < 0 || parts < 0 || (total + parts) % 2 != 0)
        return 0;
    return p_exact((total + parts) / 2, parts);
}

ParitySplit odd_even_mixed(int total)
{
    if (total < 1)
        throw std::invalid_argument("odd_even_mixed: total must be >= 1");
    ParitySplit s;
    for (int j = 1; j <= total; ++j)
        s.odd = checked_add(s.odd, odd_with_parts(total, j));
    s.even = total % 2 == 0 ? p(total / 2) : 0;
    s.total = p(total);
    s.mixed = s.total - s.odd - s.even;
    return s;
}

Integer distinct_with_parts(int total, int parts)
{
    if (total < 0 || parts < 0)
        return 0;
    if (total == 0 || parts == 0)
        return total == 0 && parts == 0 ? 1 : 0;
    static Memo<std::pair<int, int>> memo;
    return memo.get({total, parts}, [=] {
        return checked_add(distinct_with_parts(total - parts, parts), distinct_with_parts(total - parts, parts - 1));
    });
}

DistinctRow distinct_table(int total)
{
    if (total < 1)
        throw std::invalid_argument("distinct_table: total must be >= 1");
    DistinctRow row;
    for (int k = 1; k * (k + 1) / 2 <= total; ++k) {
        const Integer c = distinct_with_parts(total, k);
        row.by_parts.push_back(c);
        row.total = checked_add(row.total, c);
        row.difference += (k % 2 == 1) ? c : -c;
    }
    return row;
}

std::pair<Partition, Partition> franklin_trapezoids(int k)
{
    if (k < 1)
        throw std::invalid_argument("franklin_trapezoids: k must be >= 1");
    std::vector<int> small, large;
    for (int i = 0; i < k; ++i) {
        small.push_back(2 * k - 1 - i);
        large.push_back(2 * k - i);
    }
    return {Partition::canonicalize(small), Partition::canonicalize(large)};
}

namespace {

void require_size(int n, int lowest, const char* what)
{
    if (n < lowest)
        throw std::invalid_argument(std::string(what) + ": size must be >= " + std::to_string(lowest));
}

} // namespace

IntTable exact_parts_table(int max_m)
{
    require_size(max_m, 0, "exact_parts_table");
    IntMatrix cells(max_m + 1, max_m + 1);
    for (int m = 0; m <= max_m; ++m)
        for (int n = 0; n <= max_m; ++n)
            cells(m, n) = p_exact(m, n);
    return IntTable("exact", "m", "n", label_range(0, max_m + 1), label_range(0, max_m + 1), cells);
}

IntTable at_most_table(int max_m)
{
    require_size(max_m, 0, "at_most_table");
    IntMatrix cells(max_m + 1, max_m + 1);
    for (int m = 0; m <= max_m; ++m)
        for (int n = 0; n <= max_m; ++n)
            cells(m, n) = p_atmost(m, n);
    return IntTable("atmost", "m", "n", label_range(0, max_m + 1), label_range(0, max_m + 1), cells);
}

IntTable odd_even_mixed_table(int max_m)
{
    require_size(max_m, 1, "odd_even_mixed_table");
    IntMatrix cells(max_m, max_m);
    std::vector<Integer> odd, even, mixed, total;
    for (int m = 1; m <= max_m; ++m) {
        for (int j = 1; j <= max_m; ++j)
            cells(m - 1, j - 1) = odd_with_parts(m, j);
        const ParitySplit s = odd_even_mixed(m);
        odd.push_back(s.odd);
        even.push_back(s.even);
        mixed.push_back(s.mixed);
        total.push_back(s.total);
    }
    IntTable t("odd-even-mixed", "m", "n", label_range(1, max_m), label_range(1, max_m), cells);
    t.annotate("odd", odd);
    t.annotate("even", even);
    t.annotate("mixed", mixed);
    t.annotate("p", total);
    return t;
}

IntTable distinct_parts_table(int max_m)
{
    require_size(max_m, 1, "distinct_parts_table");
    int width = 0;
    while ((width + 1) * (width + 2) / 2 <= max_m)
        ++width;
    IntMatrix cells = IntMatrix::Zero(max_m, width);
    std::vector<Integer> difference;
    for (int m = 1; m <= max_m; ++m) {
        const DistinctRow row = distinct_table(m);
        for (std::size_t k = 0; k < row.by_parts.size(); ++k)
            cells(m - 1, static_cast<Eigen::Index>(k)) = row.by_parts[k];
        difference.push_back(row.difference);
    }
    IntTable t("distinct", "m", "n", label_range(1, max_m), label_range(1, width), cells);
    t.annotate("difference", difference);
    return t;
}

IntTable unit_diff_table(int max_m)
{
    require_size(max_m, 0, "unit_diff_table");
    IntMatrix cells = IntMatrix::Zero(max_m + 1, max_m + 1);
    for (int i = 0; i <= max_m; ++i)
        for (int j = 0; j <= i; ++j)
            cells(i, j) = p(i - j) - p(i - j - 1);
    return IntTable("unit-diff", "m", "units", label_range(0, max_m + 1), label_range(0, max_m + 1), cells);
}

IntTable cube_orbit_table(int max_edge, int n_dims)
{
    require_size(max_edge, 0, "cube_orbit_table");
    require_size(n_dims, 1, "cube_orbit_table");
    const int max_total = max_edge * n_dims;
    IntMatrix cells(max_total + 1, max_edge + 1);
    for (int total = 0; total <= max_total; ++total)
        for (int edge = 0; edge <= max_edge; ++edge)
            cells(total, edge) = p_box(edge, n_dims, total);
    return IntTable("box", "m", "edge", label_range(0, max_total + 1), label_range(0, max_edge + 1), cells);
}

IntTable right_hand_neighbor_table(int max_m)
{
    require_size(max_m, 2, "right_hand_neighbor_table");
    IntMatrix cells = IntMatrix::Zero(max_m - 1, max_m - 1);
    for (int m = 2; m <= max_m; ++m) {
        const auto row = column_edge_counts(m);
        for (std::size_t n = 0; n < row.size(); ++n)
            cells(m - 2, static_cast<Eigen::Index>(n)) = row[n];
    }
    return IntTable("neighbors", "m", "n", label_range(2, max_m - 1), label_range(1, max_m - 1), cells);
}

Integer right_hand_neighbor_total(int m)
{
    Integer s = 0;
    for (int k = 0; k <= m - 2; ++k)
        s = checked_add(s, p(k));
    return s;
}

Integer layer_count(int total, int layer)
{
    if (total < 0 || layer < 0)
        return 0;
    if (total == 0 || layer == 0)
        return total == 0 && layer == 0 ? 1 : 0;
    const int hook = total - layer + 1;
    Integer s = 0;
    for (int largest = 1; largest <= hook; ++largest)
        s = checked_add(s, p_box(largest - 1, hook - largest, layer - 1));
    return s;
}

IntTable layer_table(int max_n)
{
    require_size(max_n, 1, "layer_table");
    int width = 1;
    for (int n = 1; n <= max_n; ++n)
        for (int k = width + 1; k <= n; ++k)
            if (layer_count(n, k) > 0)
                width = k;
    IntMatrix cells(max_n, width);
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= width; ++k)
            cells(n - 1, k - 1) = layer_count(n, k);
    return IntTable("layers", "n", "k", label_range(1, max_n), label_range(1, width), cells);
}

Integer diagonal_sum(int d)
{
    require_size(d, 1, "diagonal_sum");
    // The largest interior inside a hook of d cells is the box floor((d-1)/2) x ceil((d-1)/2).
    const int max_layer = 1 + ((d - 1) / 2) * (d / 2);
    Integer s = 0;
    for (int k = 1; k <= max_layer; ++k)
        s = checked_add(s, layer_count(d + k - 1, k));
    return s;
}

std::vector<Integer> binomial_row(int r)
{
    require_size(r, 1, "binomial_row");
    std::vector<Integer> row;
    for (int k = 1; k <= r; ++k) {
        Integer s = 0;
        for (int inner = 0; inner <= (k - 1) * (r - k); ++inner)
            s = checked_add(s, p_box(k - 1, r - k, inner));
        row.push_back(s);
    }
    return row;
}

IntTable binomial_table(int max_r)
{
    require_size(max_r, 1, "binomial_table");
    IntMatrix cells = IntMatrix::Zero(max_r, max_r);
    for (int r = 1; r <= max_r; ++r) {
        const auto row = binomial_row(r);
        for (int k = 1; k <= r; ++k)
            cells(r - 1, k - 1) = row[static_cast<std::size_t>(k - 1)];
    }
    return IntTable("binomial", "r", "k", label_range(1, max_r), label_range(1, max_r), cells);
}

} // namespace partlat
