#ifndef PARTLAT_PARTITION_HPP
#define PARTLAT_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace partlat {

/// A weakly decreasing sequence of nonnegative parts, zero-padded to a fixed
/// vector dimension.
///
/// The padding is real state: lattices and schemes work in a fixed dimension
/// n, so (3,3) and (3,3,0) are the same orbit but different vectors. Equality
/// and ordering compare the nonzero parts only; use `same_vector` to also
/// compare the padding.
class Partition {
public:
    Partition() = default;

    /// Sorts `values` into decreasing order and pads with zeros.
    /// Throws std::invalid_argument on a negative value or when
    /// `padded_length` is smaller than the number of nonzero values.
    static Partition canonicalize(std::span<const int> values, std::size_t padded_length);
    static Partition canonicalize(std::span<const int> values);
    static Partition of(std::initializer_list<int> values);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::vector<int> nonzero_parts() const;
    std::size_t padded_length() const noexcept { return parts_.size(); }
    std::size_t nonzero_count() const noexcept { return nonzero_; }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int sum() const noexcept { return sum_; }
    bool empty() const noexcept { return nonzero_ == 0; }

    /// Number of parts equal to `value` (zero parts included when value is 0).
    std::size_t multiplicity(int value) const;

    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Same parts, new vector dimension.
    Partition padded_to(std::size_t padded_length) const;

    /// Digits concatenated when every part is at most 9 ("3310000"),
    /// comma-separated otherwise.
    std::string label() const;

    friend bool operator==(const Partition& a, const Partition& b) noexcept;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

private:
    std::vector<int> parts_;
    std::size_t nonzero_ = 0;
    int sum_ = 0;
};

bool same_vector(const Partition& a, const Partition& b) noexcept;
std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Column-count partition (transpose of the Ferrers graph), padded to
/// max(largest part, 1).
Partition conjugate(const Partition& p);

/// Sum of squared parts.
long long norm_squared(const Partition& p);

/// Largest part + number of nonzero parts - 1. Throws on the empty partition.
int hook_frame_size(const Partition& p);

/// What is left after deleting the first row and column of the Ferrers graph.
Partition interior(const Partition& p);

/// 1 + |interior|; 0 for the empty partition.
int layer(const Partition& p);

/// 0/1 matrix, possibly not of Ferrers shape (complements before transversal
/// are allowed).
class FerrersMatrix {
public:
    using Cells = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

    FerrersMatrix() = default;
    /// Throws std::invalid_argument if any cell is not 0 or 1.
    explicit FerrersMatrix(Cells cells);

    Eigen::Index rows() const noexcept { return cells_.rows(); }
    Eigen::Index cols() const noexcept { return cells_.cols(); }
    const Cells& cells() const noexcept { return cells_; }
    int operator()(Eigen::Index i, Eigen::Index j) const { return cells_(i, j); }
    long long ones() const { return cells_.sum(); }

    /// Rows are left-justified prefixes of ones with weakly decreasing length.
    bool is_ferrers_shape() const;

    friend bool operator==(const FerrersMatrix& a, const FerrersMatrix& b);

private:
    Cells cells_;
};

/// cells(i,j) = 1 iff j < parts[i]. Throws std::invalid_argument naming the
/// violated bound when the frame is too small.
FerrersMatrix to_ferrers(const Partition& p, int rows, int cols);

/// Row lengths, padded to the row count. Throws if not of Ferrers shape.
Partition from_ferrers(const FerrersMatrix& f);

FerrersMatrix transpose(const FerrersMatrix& f);

/// Both row and column order reversed.
FerrersMatrix transverse(const FerrersMatrix& f);

/// All-ones frame minus the Ferrers matrix, transversed.
FerrersMatrix complement_matrix(const FerrersMatrix& f);

/// Partition read from transverse(J J^T - F) in a rows x cols frame.
Partition box_complement(const Partition& p, int rows, int cols);

/// Counts n_k of parts with value k = base, base+1, ...; base may be negative.
class MultiplicityVector {
public:
    MultiplicityVector() = default;
    /// Throws std::invalid_argument on a negative count.
    MultiplicityVector(int base, std::vector<long long> counts);

    int base() const noexcept { return base_; }
    const std::vector<long long>& counts() const noexcept { return counts_; }
    /// Count for value k (0 outside the stored range).
    long long count_of(int value) const;
    /// Number of parts, sum of counts.
    long long dimension() const noexcept { return dimension_; }
    /// Sum of value * count.
    long long weighted_sum() const;

    friend bool operator==(const MultiplicityVector& a, const MultiplicityVector& b) = default;

private:
    int base_ = 0;
    std::vector<long long> counts_;
    long long dimension_ = 0;
};

/// Tally over values base..largest. Throws if a part (padding zeros included)
/// lies below `base`.
MultiplicityVector to_multiplicity(const Partition& p, int base);

/// Parts in decreasing order; values may be negative.
std::vector<int> from_multiplicity(const MultiplicityVector& v);

/// Same counts on a number scale shifted by s.
MultiplicityVector shift_base(const MultiplicityVector& v, int s);

} // namespace partlat

#endif // PARTLAT_PARTITION_HPP
