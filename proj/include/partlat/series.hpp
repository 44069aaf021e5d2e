#ifndef PARTLAT_SERIES_HPP
#define PARTLAT_SERIES_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "partlat/integer.hpp"

// Truncated formal power series c_0 + c_1 t + ... + c_T t^T over an exact
// scalar. Operands of different order combine at the smaller order.

namespace partlat {

template <typename Scalar = Integer>
class TruncatedSeries {
public:
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    /// The zero series of order T.
    explicit TruncatedSeries(int order = 0)
    {
        if (order < 0)
            throw std::invalid_argument("TruncatedSeries: order must be >= 0");
        c_ = Vector::Zero(order + 1);
    }

    explicit TruncatedSeries(Vector coefficients) : c_(std::move(coefficients))
    {
        if (c_.size() == 0)
            throw std::invalid_argument("TruncatedSeries: needs at least c_0");
    }

    static TruncatedSeries from(const std::vector<Scalar>& coefficients)
    {
        Vector v(static_cast<Eigen::Index>(coefficients.size()));
        for (std::size_t i = 0; i < coefficients.size(); ++i)
            v(static_cast<Eigen::Index>(i)) = coefficients[i];
        return TruncatedSeries(std::move(v));
    }

    static TruncatedSeries one(int order)
    {
        TruncatedSeries s(order);
        s.c_(0) = Scalar(1);
        return s;
    }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const Vector& coefficients() const noexcept { return c_; }

    /// Coefficient of t^n; throws std::out_of_range beyond the order.
    Scalar operator[](int n) const
    {
        if (n < 0 || n > order())
            throw std::out_of_range("series coefficient " + std::to_string(n) + " beyond order "
                                    + std::to_string(order()));
        return c_(n);
    }

    Scalar& coefficient(int n)
    {
        if (n < 0 || n > order())
            throw std::out_of_range("series coefficient " + std::to_string(n) + " beyond order "
                                    + std::to_string(order()));
        return c_(n);
    }

    std::vector<Scalar> to_vector() const { return {c_.data(), c_.data() + c_.size()}; }

    TruncatedSeries truncated(int order) const
    {
        if (order < 0 || order > this->order())
            throw std::out_of_range("truncated: order out of range");
        return TruncatedSeries(Vector(c_.head(order + 1)));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.c_.size() == b.c_.size() && a.c_ == b.c_;
    }

private:
    Vector c_;
};

namespace detail {

template <typename Scalar>
Scalar mul_add(Scalar acc, Scalar a, Scalar b)
{
    if constexpr (std::is_same_v<Scalar, Integer>)
        return checked_add(acc, checked_mul(a, b));
    else
        return acc + a * b;
}

} // namespace detail

/// Cauchy product truncated at min(a.order(), b.order()).
template <typename Scalar>
TruncatedSeries<Scalar> multiply(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b)
{
    const int t = std::min(a.order(), b.order());
    TruncatedSeries<Scalar> c(t);
    for (int i = 0; i <= t; ++i) {
        if (a[i] == Scalar(0))
            continue;
        for (int j = 0; i + j <= t; ++j)
            c.coefficient(i + j) = detail::mul_add(c[i + j], a[i], b[j]);
    }
    return c;
}

/// Multiplicative inverse; requires c_0 = 1 or -1.
template <typename Scalar>
TruncatedSeries<Scalar> invert(const TruncatedSeries<Scalar>& a)
{
    const Scalar c0 = a[0];
    if (c0 != Scalar(1) && c0 != Scalar(-1))
        throw std::invalid_argument("invert: constant term must be 1 or -1");
    const int t = a.order();
    TruncatedSeries<Scalar> x(t);
    // c0 is its own inverse.
    x.coefficient(0) = c0;
    for (int n = 1; n <= t; ++n) {
        Scalar s(0);
        for (int k = 1; k <= n; ++k)
            s = detail::mul_add(s, a[k], x[n - k]);
        x.coefficient(n) = -(s * c0);
    }
    return x;
}

/// e(n): (-1)^k when n = k(3k-1)/2 or k(3k+1)/2, otherwise 0.
inline Integer euler_coefficient(int n)
{
    if (n < 0)
        throw std::invalid_argument("euler_coefficient: n must be >= 0");
    for (long long k = 0; k * (3 * k - 1) / 2 <= n; ++k)
        if (k * (3 * k - 1) / 2 == n || k * (3 * k + 1) / 2 == n)
            return k % 2 == 0 ? 1 : -1;
    return 0;
}

/// Coefficients of (1 - t)(1 - t^2)...(1 - t^T), expanded factor by factor.
template <typename Scalar = Integer>
TruncatedSeries<Scalar> euler_product(int order)
{
    TruncatedSeries<Scalar> s = TruncatedSeries<Scalar>::one(order);
    for (int i = 1; i <= order; ++i)
        for (int j = order; j >= i; --j)
            s.coefficient(j) = s[j] - s[j - i];
    return s;
}

/// Generating function of p(M): the inverse Euler product.
template <typename Scalar = Integer>
TruncatedSeries<Scalar> partition_series(int order)
{
    return invert(euler_product<Scalar>(order));
}

/// Unsigned: prod (1 + t^k), coefficient = distinct-part partitions of M.
/// Signed: prod (1 - t^k), coefficient = even minus odd number of parts.
template <typename Scalar = Integer>
TruncatedSeries<Scalar> distinct_series(int order, bool is_signed)
{
    if (is_signed)
        return euler_product<Scalar>(order);
    TruncatedSeries<Scalar> s = TruncatedSeries<Scalar>::one(order);
    for (int k = 1; k <= order; ++k)
        for (int j = order; j >= k; --j)
            s.coefficient(j) = s[j] + s[j - k];
    return s;
}

/// A part value together with how often it may repeat; kUncapped lets it
/// repeat as often as the truncation allows.
struct PartCap {
    static constexpr int kUncapped = -1;
    int part = 1;
    int max_repetitions = kUncapped;
};

/// prod_k (1 + t^k + t^{2k} + ... + t^{c_k k}) truncated at T.
template <typename Scalar = Integer>
TruncatedSeries<Scalar> capped_product(const std::vector<PartCap>& caps, int order)
{
    std::vector<int> seen;
    TruncatedSeries<Scalar> s = TruncatedSeries<Scalar>::one(order);
    for (const PartCap& cap : caps) {
        if (cap.part < 1)
            throw std::invalid_argument("capped_product: part values must be >= 1");
        if (std::find(seen.begin(), seen.end(), cap.part) != seen.end())
            throw std::invalid_argument("capped_product: part value " + std::to_string(cap.part) + " repeated");
        if (cap.max_repetitions < 0 && cap.max_repetitions != PartCap::kUncapped)
            throw std::invalid_argument("capped_product: negative repetition cap");
        seen.push_back(cap.part);

        const int reps = cap.max_repetitions == PartCap::kUncapped ? order / cap.part
                                                                   : std::min(cap.max_repetitions, order / cap.part);
        TruncatedSeries<Scalar> factor(order);
        for (int r = 0; r <= reps; ++r)
            factor.coefficient(r * cap.part) = Scalar(1);
        s = multiply(s, factor);
    }
    return s;
}

/// Partitions with largest part <= m and at most n parts, as the Gaussian
/// binomial prod_{i=1..n} (1 - t^{m+i}) / (1 - t^i).
template <typename Scalar = Integer>
TruncatedSeries<Scalar> box_series(int max_part, int max_parts, int order)
{
    if (max_part < 0 || max_parts < 0)
        throw std::invalid_argument("box_series: bounds must be >= 0");
    TruncatedSeries<Scalar> num = TruncatedSeries<Scalar>::one(order);
    TruncatedSeries<Scalar> den = TruncatedSeries<Scalar>::one(order);
    for (int i = 1; i <= max_parts; ++i) {
        TruncatedSeries<Scalar> a = TruncatedSeries<Scalar>::one(order);
        TruncatedSeries<Scalar> b = TruncatedSeries<Scalar>::one(order);
        if (max_part + i <= order)
            a.coefficient(max_part + i) = Scalar(-1);
        if (i <= order)
            b.coefficient(i) = Scalar(-1);
        num = multiply(num, a);
        den = multiply(den, b);
    }
    return multiply(num, invert(den));
}

} // namespace partlat

#endif // PARTLAT_SERIES_HPP
