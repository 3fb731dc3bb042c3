// Exact integer and rational arithmetic shared by all modules.
//
// Class data (ranks, Chern vectors, Euler characteristics) live in checked
// 64-bit integers: every arithmetic step that could overflow goes through the
// helpers below and throws std::overflow_error instead of wrapping.  Plane
// geometry uses arbitrary-precision rationals.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpz {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Vec = std::vector<Int>;
using Matrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rational>>;

inline Int checked_add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
    return out;
}

inline Int checked_sub(Int a, Int b) {
    Int out;
    if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in subtraction");
    return out;
}

inline Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
    return out;
}

// Narrow an exact rational to Int; throws if it is not an integer or does not fit.
Int to_int(const Rational& q);
// Narrow a big integer to Int; throws if it does not fit.
Int to_int(const BigInt& z);

Int gcd(Int a, Int b);
// Integer square root of n >= 0, or -1 when n is not a perfect square.
Int exact_sqrt(Int n);

std::string to_string(const Rational& q);

// Rank of a rational matrix (Gaussian elimination).
int rank_of(RatMatrix m);
// Inverse of a square rational matrix; throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& m);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatMatrix to_rational(const Matrix& m);
RatMatrix transpose(const RatMatrix& m);
RatMatrix identity(std::size_t n);

}  // namespace dpz
