#ifndef PARTLAT_ORACLE_HPP
#define PARTLAT_ORACLE_HPP

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "partlat/integer.hpp"
#include "partlat/partition.hpp"

// Brute-force enumeration under a constraint record. This is the ground
// truth every recurrence is checked against, so it prunes only on arithmetic
// bounds and shares no code with counting.cpp.

namespace partlat::oracle {

inline constexpr int kMaxTotal = 80;

enum class Parity { none, all_odd, all_even, mixed, distinct };

struct ConstraintRecord {
    int total = 0;
    std::optional<int> max_part{};
    std::optional<int> max_parts{};
    std::optional<int> exact_parts{};
    std::optional<int> exact_max_part{};
    std::optional<int> min_part{};
    Parity parity = Parity::none;
    std::optional<int> unit_count{};
    std::optional<int> layer{};
    std::optional<int> hook_frame{};

    /// Throws std::invalid_argument on conflicting or negative bounds and
    /// std::out_of_range when total exceeds kMaxTotal.
    void validate() const;
};

/// Every partition of c.total meeting all constraints, once each, in
/// reverse-lexicographic order of the part sequence. Partitions carry no
/// zero padding.
std::vector<Partition> enumerate(const ConstraintRecord& c);

Integer count(const ConstraintRecord& c);

enum class Classifier { exact_parts, largest_part, unit_count, layer, hook_frame, parity_class };

/// Parse "exact_parts", "largest_part", ...; throws std::invalid_argument.
Classifier parse_classifier(std::string_view name);

/// parity_class bucket codes.
inline constexpr int kParityOdd = 0;
inline constexpr int kParityEven = 1;
inline constexpr int kParityMixed = 2;

/// Bucket counts keyed by the classifier value. Integer keys between the
/// smallest and largest observed key are present even when zero.
std::map<int, Integer> classify(const ConstraintRecord& c, Classifier key);

bool satisfies(const Partition& p, const ConstraintRecord& c);

} // namespace partlat::oracle

#endif // PARTLAT_ORACLE_HPP
