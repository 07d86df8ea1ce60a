#include "prodmatch/numbers.hpp"

namespace prodmatch {

BigInt binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is C(n-k+i, i) after each step
    }
    return r;
}

BigInt floor_rat(const BigRat& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt d = num / den;
    if (num < 0 && d * den != num) --d;
    return d;
}

BigInt ceil_rat(const BigRat& q) {
    return -floor_rat(-q);
}

std::string to_decimal(const BigInt& v) {
    return v.str();
}

} // namespace prodmatch
