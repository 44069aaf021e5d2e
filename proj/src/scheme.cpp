#include "partlat/scheme.hpp"

#include <stdexcept>

#include "partlat/counting.hpp"

namespace partlat {

namespace {

std::vector<int> descending_labels(int total)
{
    std::vector<int> rows;
    for (int m = total; m >= 1; --m)
        rows.push_back(m);
    return rows;
}

} // namespace

IntMatrix scheme_matrix(int total)
{
    if (total < 1)
        throw std::invalid_argument("scheme: total must be >= 1");
    IntMatrix cells = IntMatrix::Zero(total, total);
    for (int r = 0; r < total; ++r)
        for (int c = 0; c < total; ++c)
            cells(r, c) = exact_frame(total - r, c + 1, total);
    return cells;
}

IntTable build_scheme(int total)
{
    return IntTable("scheme", "largest", "parts", descending_labels(total), label_range(1, total),
                    scheme_matrix(total));
}

IntMatrix scheme_inverse(int total)
{
    return invert_unitriangular(scheme_matrix(total));
}

IntTable scheme_inverse_table(int total)
{
    return IntTable("scheme-inverse", "largest", "parts", descending_labels(total), label_range(1, total),
                    scheme_inverse(total));
}

} // namespace partlat
