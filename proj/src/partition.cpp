#include "partlat/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace partlat {

Partition Partition::canonicalize(std::span<const int> values, std::size_t padded_length)
{
    Partition p;
    p.parts_.reserve(std::max(values.size(), padded_length));
    for (int v : values) {
        if (v < 0)
            throw std::invalid_argument(
                "canonicalize: negative part " + std::to_string(v)
                + " (shifted-base values belong in a MultiplicityVector)");
        if (v > 0) {
            p.parts_.push_back(v);
            p.sum_ += v;
        }
    }
    p.nonzero_ = p.parts_.size();
    if (padded_length < p.nonzero_)
        throw std::invalid_argument("canonicalize: padded_length " + std::to_string(padded_length)
                                    + " is smaller than the " + std::to_string(p.nonzero_)
                                    + " nonzero parts");
    std::sort(p.parts_.begin(), p.parts_.end(), std::greater<>());
    p.parts_.resize(padded_length, 0);
    return p;
}

Partition Partition::canonicalize(std::span<const int> values)
{
    auto nonzero = static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](int v) { return v != 0; }));
    return canonicalize(values, nonzero);
}

Partition Partition::of(std::initializer_list<int> values)
{
    return canonicalize(std::span<const int>(values.begin(), values.size()), values.size());
}

std::vector<int> Partition::nonzero_parts() const
{
    return {parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(nonzero_)};
}

std::size_t Partition::multiplicity(int value) const
{
    return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::padded_to(std::size_t padded_length) const
{
    return canonicalize(parts_, padded_length);
}

std::string Partition::label() const
{
    std::ostringstream os;
    bool compact = largest() <= 9;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (!compact && i > 0)
            os << ',';
        os << parts_[i];
    }
    return os.str();
}

bool operator==(const Partition& a, const Partition& b) noexcept
{
    return a.nonzero_ == b.nonzero_
        && std::equal(a.parts_.begin(), a.parts_.begin() + static_cast<std::ptrdiff_t>(a.nonzero_), b.parts_.begin());
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept
{
    auto ae = a.parts_.begin() + static_cast<std::ptrdiff_t>(a.nonzero_);
    auto be = b.parts_.begin() + static_cast<std::ptrdiff_t>(b.nonzero_);
    return std::lexicographical_compare_three_way(a.parts_.begin(), ae, b.parts_.begin(), be);
}

bool same_vector(const Partition& a, const Partition& b) noexcept
{
    return a.parts() == b.parts();
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    os << '(';
    for (std::size_t i = 0; i < p.padded_length(); ++i)
        os << (i ? "," : "") << p[i];
    return os << ')';
}

Partition conjugate(const Partition& p)
{
    std::vector<int> cols(static_cast<std::size_t>(p.largest()), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j)
            ++cols[static_cast<std::size_t>(j)];
    return Partition::canonicalize(cols, std::max<std::size_t>(cols.size(), 1));
}

long long norm_squared(const Partition& p)
{
    long long s = 0;
    for (int x : p.parts())
        s += static_cast<long long>(x) * x;
    return s;
}

int hook_frame_size(const Partition& p)
{
    if (p.empty())
        throw std::invalid_argument("hook_frame_size: empty partition has no hook");
    return p.largest() + static_cast<int>(p.nonzero_count()) - 1;
}

Partition interior(const Partition& p)
{
    if (p.empty())
        return {};
    std::vector<int> inner;
    for (std::size_t i = 1; i < p.nonzero_count(); ++i)
        inner.push_back(p[i] - 1);
    return Partition::canonicalize(inner);
}

int layer(const Partition& p)
{
    return p.empty() ? 0 : 1 + interior(p).sum();
}

FerrersMatrix::FerrersMatrix(Cells cells) : cells_(std::move(cells))
{
    if ((cells_.array() != 0 && cells_.array() != 1).any())
        throw std::invalid_argument("FerrersMatrix: cells must be 0 or 1");
}

bool FerrersMatrix::is_ferrers_shape() const
{
    Eigen::Index previous = cells_.cols();
    for (Eigen::Index i = 0; i < cells_.rows(); ++i) {
        Eigen::Index len = 0;
        while (len < cells_.cols() && cells_(i, len) == 1)
            ++len;
        for (Eigen::Index j = len; j < cells_.cols(); ++j)
            if (cells_(i, j) != 0)
                return false;
        if (len > previous)
            return false;
        previous = len;
    }
    return true;
}

bool operator==(const FerrersMatrix& a, const FerrersMatrix& b)
{
    return a.rows() == b.rows() && a.cols() == b.cols() && a.cells_ == b.cells_;
}

FerrersMatrix to_ferrers(const Partition& p, int rows, int cols)
{
    if (rows < 0 || static_cast<std::size_t>(rows) < p.nonzero_count())
        throw std::invalid_argument("to_ferrers: rows " + std::to_string(rows) + " < number of parts "
                                    + std::to_string(p.nonzero_count()));
    if (cols < p.largest())
        throw std::invalid_argument("to_ferrers: cols " + std::to_string(cols) + " < largest part "
                                    + std::to_string(p.largest()));
    FerrersMatrix::Cells cells = FerrersMatrix::Cells::Zero(rows, cols);
    for (int i = 0; i < rows; ++i)
        cells.row(i).head(p[static_cast<std::size_t>(i)]).setOnes();
    return FerrersMatrix(std::move(cells));
}

Partition from_ferrers(const FerrersMatrix& f)
{
    if (!f.is_ferrers_shape())
        throw std::invalid_argument("from_ferrers: matrix is not of Ferrers shape");
    Eigen::VectorXi lengths = f.cells().rowwise().sum();
    return Partition::canonicalize(std::span<const int>(lengths.data(), static_cast<std::size_t>(lengths.size())),
                                   static_cast<std::size_t>(f.rows()));
}

FerrersMatrix transpose(const FerrersMatrix& f)
{
    return FerrersMatrix(f.cells().transpose());
}

FerrersMatrix transverse(const FerrersMatrix& f)
{
    return FerrersMatrix(f.cells().reverse());
}

FerrersMatrix complement_matrix(const FerrersMatrix& f)
{
    FerrersMatrix::Cells ones = FerrersMatrix::Cells::Ones(f.rows(), f.cols());
    return transverse(FerrersMatrix(ones - f.cells()));
}

Partition box_complement(const Partition& p, int rows, int cols)
{
    return from_ferrers(complement_matrix(to_ferrers(p, rows, cols)));
}

MultiplicityVector::MultiplicityVector(int base, std::vector<long long> counts)
    : base_(base), counts_(std::move(counts))
{
    for (long long c : counts_) {
        if (c < 0)
            throw std::invalid_argument("MultiplicityVector: negative count");
        dimension_ += c;
    }
}

long long MultiplicityVector::count_of(int value) const
{
    long long idx = static_cast<long long>(value) - base_;
    if (idx < 0 || idx >= static_cast<long long>(counts_.size()))
        return 0;
    return counts_[static_cast<std::size_t>(idx)];
}

long long MultiplicityVector::weighted_sum() const
{
    long long s = 0;
    for (std::size_t k = 0; k < counts_.size(); ++k)
        s += (static_cast<long long>(base_) + static_cast<long long>(k)) * counts_[k];
    return s;
}

MultiplicityVector to_multiplicity(const Partition& p, int base)
{
    std::vector<long long> counts;
    for (int part : p.parts()) {
        if (part < base)
            throw std::invalid_argument("to_multiplicity: part " + std::to_string(part) + " lies below base "
                                        + std::to_string(base));
        auto idx = static_cast<std::size_t>(part - base);
        if (counts.size() <= idx)
            counts.resize(idx + 1, 0);
        ++counts[idx];
    }
    return MultiplicityVector(base, std::move(counts));
}

std::vector<int> from_multiplicity(const MultiplicityVector& v)
{
    std::vector<int> parts;
    const auto& counts = v.counts();
    for (std::size_t k = counts.size(); k-- > 0;)
        parts.insert(parts.end(), static_cast<std::size_t>(counts[k]), v.base() + static_cast<int>(k));
    return parts;
}

MultiplicityVector shift_base(const MultiplicityVector& v, int s)
{
    return MultiplicityVector(v.base() + s, v.counts());
}

} // namespace partlat
