#include "partlat/matrices.hpp"

#include <stdexcept>

#include "partlat/counting.hpp"
#include "partlat/series.hpp"

namespace partlat {

namespace {

void require_size(int n, const char* what)
{
    if (n < 1)
        throw std::invalid_argument(std::string(what) + ": size must be >= 1");
}

} // namespace

IntMatrix partition_matrix(int n)
{
    require_size(n, "partition_matrix");
    IntMatrix m = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            m(i, j) = p(i - j);
    return m;
}

IntMatrix euler_matrix(int n)
{
    require_size(n, "euler_matrix");
    const auto e = euler_product(n - 1);
    IntMatrix m = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            m(i, j) = e[i - j];
    return m;
}

IntMatrix exact_parts_matrix(int n)
{
    require_size(n, "exact_parts_matrix");
    IntMatrix m = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = p_exact(i + 1, j + 1);
    return m;
}

IntMatrix unit_diff_matrix(int n)
{
    require_size(n, "unit_diff_matrix");
    IntMatrix m = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            // Strip the j ones; the rest is a partition of i - j without ones.
            const int rest = i - j;
            m(i, j) = rest == 0 ? 1 : p(rest) - p(rest - 1);
        }
    return m;
}

std::vector<NamedMatrix> table_inverses(int n)
{
    return {
        {"inverse-exact", invert_unitriangular(exact_parts_matrix(n))},
        {"inverse-unit-diff", invert_unitriangular(unit_diff_matrix(n))},
        {"summation-times-euler", multiply(summation_matrix(n, Triangle::lower), euler_matrix(n))},
    };
}

IntTable euler_table(int n)
{
    return IntTable("euler", "i", "j", label_range(0, n), label_range(0, n), euler_matrix(n));
}

IntTable euler_inverse_table(int n)
{
    return IntTable("euler-inverse", "i", "j", label_range(0, n), label_range(0, n),
                    invert_unitriangular(euler_matrix(n)));
}

IntTable inverse_exact_table(int n)
{
    return IntTable("inverse-exact", "m", "n", label_range(1, n), label_range(1, n),
                    invert_unitriangular(exact_parts_matrix(n)));
}

IntTable inverse_unit_diff_table(int n)
{
    return IntTable("inverse-unit-diff", "m", "n", label_range(1, n), label_range(1, n),
                    invert_unitriangular(unit_diff_matrix(n)));
}

} // namespace partlat
