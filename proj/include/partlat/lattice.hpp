#ifndef PARTLAT_LATTICE_HPP
#define PARTLAT_LATTICE_HPP

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partlat/integer.hpp"
#include "partlat/partition.hpp"

namespace partlat {

enum class LatticeVariant {
    unit_exchange,      ///< move one unit between two coordinates, then re-sort
    split_merge,        ///< merge two nonzero parts into one (or the reverse)
    subset_swap,        ///< fixed-weight bit strings at Hamming distance 2
    subset_double_swap, ///< fixed-weight bit strings at Hamming distance 4
    hypercube           ///< all d-bit strings at Hamming distance 1
};

/// "unit_exchange", "split_merge", "subset_swap", "subset_double_swap",
/// "hypercube" (dashes accepted too). Throws std::invalid_argument.
LatticeVariant parse_lattice_variant(std::string_view name);
std::string_view variant_name(LatticeVariant v);

struct LatticeParams {
    int total = 0; ///< partition variants: the partitioned number M
    int parts = 0; ///< partition variants: vector dimension n
    int bits = 0;  ///< bit-string variants: string length (hypercube: d)
    int ones = 0;  ///< subset variants: number of ones
};

inline constexpr std::size_t kMaxLatticeNodes = 1'000'000;
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Undirected simple graph on canonical orbit labels. Node coordinates are
/// zero-padded partitions for the partition variants and 0/1 vectors for the
/// bit-string variants. Immutable once built.
class OrbitLattice {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    LatticeVariant variant() const noexcept { return variant_; }
    const LatticeParams& params() const noexcept { return params_; }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<std::vector<int>>& nodes() const noexcept { return nodes_; }
    /// Sorted (i < j) pairs of node indices, in increasing order.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<std::size_t>& neighbors(std::size_t node) const { return adjacency_.at(node); }
    std::size_t degree(std::size_t node) const { return adjacency_.at(node).size(); }

    /// Index of the node with this label; throws std::out_of_range.
    std::size_t index_of(std::string_view label) const;
    /// Index of a partition node (padding adjusted to the lattice dimension).
    std::size_t index_of(const Partition& p) const;

    bool adjacent(std::size_t a, std::size_t b) const;

    friend OrbitLattice build_lattice(LatticeVariant variant, const LatticeParams& params);

private:
    LatticeVariant variant_ = LatticeVariant::hypercube;
    LatticeParams params_;
    std::vector<std::vector<int>> nodes_;
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// Throws std::invalid_argument on bad parameters and std::length_error when
/// the node count would exceed kMaxLatticeNodes.
OrbitLattice build_lattice(LatticeVariant variant, const LatticeParams& params);

/// Unweighted shortest path length, kUnreachable if disconnected.
int distance(const OrbitLattice& l, std::size_t a, std::size_t b);
int distance(const OrbitLattice& l, std::string_view a, std::string_view b);
int distance(const OrbitLattice& l, const Partition& a, const Partition& b);

/// Unit-exchange edges of the (M, M) lattice joining an orbit with n nonzero
/// parts to one with n+1, for n = 1..M-1.
std::vector<Integer> column_edge_counts(int total);

/// Row of the previous function minus the row for total-1 (zero-extended).
std::vector<Integer> neighbor_difference_row(int total);

/// One "a -- b" line per edge.
std::string export_edges(const OrbitLattice& l);
/// Graphviz undirected graph.
std::string export_dot(const OrbitLattice& l);
/// {"variant", "nodes": [labels], "edges": [[a, b], ...]} with labels.
std::string export_json(const OrbitLattice& l);

} // namespace partlat

#endif // PARTLAT_LATTICE_HPP
