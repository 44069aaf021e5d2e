#ifndef PARTLAT_INTEGER_HPP
#define PARTLAT_INTEGER_HPP

#include <cstdint>
#include <stdexcept>

namespace partlat {

/// Exact integer used for every count, table cell and series coefficient.
/// Overflow is an error, never a silent wrap.
using Integer = std::int64_t;

inline Integer checked_add(Integer a, Integer b)
{
    Integer r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("partlat: integer overflow in addition");
    return r;
}

inline Integer checked_sub(Integer a, Integer b)
{
    Integer r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("partlat: integer overflow in subtraction");
    return r;
}

inline Integer checked_mul(Integer a, Integer b)
{
    Integer r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("partlat: integer overflow in multiplication");
    return r;
}

} // namespace partlat

#endif // PARTLAT_INTEGER_HPP
