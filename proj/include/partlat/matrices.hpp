#ifndef PARTLAT_MATRICES_HPP
#define PARTLAT_MATRICES_HPP

#include <string>
#include <vector>

#include "partlat/int_matrix.hpp"
#include "partlat/table.hpp"

// Toeplitz partition matrices and the inverses of the counting tables.
// Indices are 0-based; the tables carry the display labels.

namespace partlat {

/// P(i, j) = p(i - j) for i >= j, else 0.
IntMatrix partition_matrix(int n);
/// E(i, j) = e(i - j), Euler-product coefficients from the series module.
IntMatrix euler_matrix(int n);

/// Rows m = 1..n, columns parts 1..n: p_exact(m, parts).
IntMatrix exact_parts_matrix(int n);
/// Rows i = 0..n-1, columns j = 0..n-1: partitions of i with j unit parts.
IntMatrix unit_diff_matrix(int n);

struct NamedMatrix {
    std::string name;
    IntMatrix matrix;
};

/// "inverse-exact", "inverse-unit-diff" and "summation-times-euler", the last
/// being summation_matrix(lower) * euler_matrix.
std::vector<NamedMatrix> table_inverses(int n);

/// i x j tables with labels 0..n-1.
IntTable euler_table(int n);
IntTable euler_inverse_table(int n);
/// Labels m = 1..n by parts 1..n.
IntTable inverse_exact_table(int n);
/// Labels m = 1..n by n = 1..n, as the unit-difference inverse is printed.
IntTable inverse_unit_diff_table(int n);

} // namespace partlat

#endif // PARTLAT_MATRICES_HPP
