#include "cocrit/bounds.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cocrit {

Rational::Rational(long long n, long long d)
    : num(n)
    , den(d)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

long long Rational::floor() const
{
    long long q = num / den;
    if (num % den != 0 && num < 0)
        --q;
    return q;
}

long long Rational::ceil() const
{
    long long q = num / den;
    if (num % den != 0 && num > 0)
        ++q;
    return q;
}

long long isqrt_floor(long long x)
{
    if (x < 0)
        throw std::invalid_argument("isqrt of negative value");
    long long r = 0;
    while ((r + 1) * (r + 1) <= x)
        ++r;
    return r;
}

Rational lower_bound_general(int k, long long n)
{
    if (k < 2)
        throw std::domain_error("bound requires k >= 2");
    if (n < ramsey_upper(k))
        throw std::domain_error("bound requires n >= k + floor(sqrt(k-1)) + 2 = "
            + std::to_string(ramsey_upper(k)));
    const long long term = (k - 1) * (k + isqrt_floor(k - 2));
    return Rational((k + 2) * n - 6 - term, 2);
}

long long lower_bound_k2(long long n)
{
    if (n < 5)
        throw std::domain_error("k = 2 bound requires n >= 5");
    return 2 * n - 3;
}

int ramsey_upper(int k)
{
    if (k < 2)
        throw std::domain_error("Ramsey bound requires k >= 2");
    return k + static_cast<int>(isqrt_floor(k - 1)) + 2;
}

long long c4_saturation_lower_bound(long long n)
{
    if (n < 5)
        throw std::domain_error("saturation bound requires n >= 5");
    return (3 * n - 5) / 2;
}

} // namespace cocrit
