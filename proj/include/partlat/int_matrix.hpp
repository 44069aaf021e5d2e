#ifndef PARTLAT_INT_MATRIX_HPP
#define PARTLAT_INT_MATRIX_HPP

#include <stdexcept>
#include <string>
#include <type_traits>

#include <Eigen/Core>

#include "partlat/integer.hpp"

// Exact triangular algebra on dense Eigen matrices with an integer scalar.
//
// Only unitriangular matrices are inverted, by forward substitution, so no
// division ever happens and every result is exact.

namespace partlat {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Matrix<Integer>;

enum class ShapeTag { general, lower_unitriangular, upper_unitriangular };

enum class Triangle { lower, upper };

template <typename Derived>
ShapeTag shape_of(const Eigen::MatrixBase<Derived>& a)
{
    using Scalar = typename Derived::Scalar;
    if (a.rows() != a.cols() || a.rows() == 0)
        return ShapeTag::general;
    if ((a.diagonal().array() != Scalar(1)).any())
        return ShapeTag::general;
    const Eigen::Index n = a.rows();
    bool lower = true;
    bool upper = true;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j > i && a(i, j) != Scalar(0))
                lower = false;
            if (j < i && a(i, j) != Scalar(0))
                upper = false;
        }
    // The identity is both; report it as lower.
    if (lower)
        return ShapeTag::lower_unitriangular;
    if (upper)
        return ShapeTag::upper_unitriangular;
    return ShapeTag::general;
}

/// All-ones triangle: upper has h(i,j) = 1 iff j >= i, lower is its transpose.
template <typename Scalar = Integer>
Matrix<Scalar> summation_matrix(Eigen::Index n, Triangle t = Triangle::upper)
{
    if (n < 1)
        throw std::invalid_argument("summation_matrix: n must be >= 1");
    Matrix<Scalar> h = Matrix<Scalar>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (t == Triangle::upper ? j >= i : j <= i)
                h(i, j) = Scalar(1);
    return h;
}

/// Bidiagonal inverse of summation_matrix: 1 on the diagonal, -1 next to it.
template <typename Scalar = Integer>
Matrix<Scalar> summation_inverse(Eigen::Index n, Triangle t = Triangle::upper)
{
    if (n < 1)
        throw std::invalid_argument("summation_inverse: n must be >= 1");
    Matrix<Scalar> h = Matrix<Scalar>::Identity(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        if (t == Triangle::upper)
            h(i, i + 1) = Scalar(-1);
        else
            h(i + 1, i) = Scalar(-1);
    }
    return h;
}

/// Exact product; throws std::invalid_argument on mismatched dimensions.
template <typename DerivedA, typename DerivedB>
Matrix<typename DerivedA::Scalar> multiply(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
    using Scalar = typename DerivedA::Scalar;
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols())
                                    + " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix<Scalar> c = Matrix<Scalar>::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            const Scalar aik = a(i, k);
            if (aik == Scalar(0))
                continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j) {
                if constexpr (std::is_same_v<Scalar, Integer>)
                    c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
                else
                    c(i, j) += aik * b(k, j);
            }
        }
    return c;
}

/// Inverse of a lower or upper unitriangular matrix by forward substitution.
/// Throws std::invalid_argument for any other shape.
template <typename Derived>
Matrix<typename Derived::Scalar> invert_unitriangular(const Eigen::MatrixBase<Derived>& a)
{
    using Scalar = typename Derived::Scalar;
    const ShapeTag tag = shape_of(a);
    if (tag == ShapeTag::general)
        throw std::invalid_argument("invert_unitriangular: matrix is not unitriangular");
    if (tag == ShapeTag::upper_unitriangular)
        return invert_unitriangular(a.transpose().eval()).transpose();

    const Eigen::Index n = a.rows();
    Matrix<Scalar> x = Matrix<Scalar>::Identity(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = j + 1; i < n; ++i) {
            Scalar s(0);
            for (Eigen::Index k = j; k < i; ++k) {
                if constexpr (std::is_same_v<Scalar, Integer>)
                    s = checked_add(s, checked_mul(a(i, k), x(k, j)));
                else
                    s += a(i, k) * x(k, j);
            }
            x(i, j) = -s;
        }
    return x;
}

/// True when a is exactly the identity.
template <typename Derived>
bool is_identity(const Eigen::MatrixBase<Derived>& a)
{
    return a.rows() == a.cols() && a == Matrix<typename Derived::Scalar>::Identity(a.rows(), a.cols());
}

} // namespace partlat

#endif // PARTLAT_INT_MATRIX_HPP
