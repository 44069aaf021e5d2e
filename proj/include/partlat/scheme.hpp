#ifndef PARTLAT_SCHEME_HPP
#define PARTLAT_SCHEME_HPP

#include "partlat/int_matrix.hpp"
#include "partlat/table.hpp"

namespace partlat {

/// Exact-frame counts exact_frame(m, n, M) with rows m = M down to 1 and
/// columns n = 1..M. Named "scheme".
IntTable build_scheme(int total);

/// Cells of build_scheme as a matrix; lower unitriangular in this row order.
IntMatrix scheme_matrix(int total);

/// Exact inverse of scheme_matrix, same row and column labels.
IntMatrix scheme_inverse(int total);
IntTable scheme_inverse_table(int total);

} // namespace partlat

#endif // PARTLAT_SCHEME_HPP
