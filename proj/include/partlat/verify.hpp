#ifndef PARTLAT_VERIFY_HPP
#define PARTLAT_VERIFY_HPP

#include <string>
#include <vector>

#include "partlat/lattice.hpp"

namespace partlat {

enum class CheckStatus { pass, fail, documented_erratum };

std::string_view status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    /// First counterexample on failure, the witness for an erratum.
    std::string detail;
};

struct VerifyReport {
    int max_total = 0;
    std::vector<CheckResult> results;

    /// False iff some non-erratum check failed.
    bool ok() const;
    std::string format() const;
};

inline constexpr int kMaxVerifyTotal = 25;

/// Runs every identity suite and errata check with totals up to max_total.
/// Throws std::out_of_range unless 1 <= max_total <= 25.
VerifyReport verify_suite(int max_total);

/// First d in 1..d_max whose diagonal sum is not 2^(d-1), or 0 if none.
int power_of_two_diagonals(int d_max);

/// Brute-force pair scan: true iff the sorted, padded partitions a and b
/// differ by +1 in one coordinate and -1 in another.
bool unit_exchange_adjacent(const std::vector<int>& a, const std::vector<int>& b);

/// Pair-scan edge set of a unit-exchange lattice, independent of build_lattice.
std::vector<OrbitLattice::Edge> unit_exchange_edges_by_scan(const OrbitLattice& l);

} // namespace partlat

#endif // PARTLAT_VERIFY_HPP
