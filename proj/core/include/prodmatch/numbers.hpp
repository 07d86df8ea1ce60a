#ifndef PRODMATCH_NUMBERS_HPP
#define PRODMATCH_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace prodmatch {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the clamped convention: C(n,k) = 0 whenever
/// k < 0, n < 0 or k > n. Exact at any size.
BigInt binom(long long n, long long k);

/// Largest integer <= q.
BigInt floor_rat(const BigRat& q);

/// Smallest integer >= q.
BigInt ceil_rat(const BigRat& q);

std::string to_decimal(const BigInt& v);

} // namespace prodmatch

#endif
