#ifndef COCRIT_BOUNDS_HPP
#define COCRIT_BOUNDS_HPP

#include <compare>
#include <cstdint>

namespace cocrit {

// Exact rational with reduced representation, den > 0. Edge-count bounds
// with odd numerators stay exact; callers take ceil() for integer
// comparisons.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    long long ceil() const;
    long long floor() const;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
};

long long isqrt_floor(long long x);

// Minimum edge count of a (C4, K_{1,k})-co-critical graph on n vertices:
// (k+2)n/2 - 3 - (k-1)(k + floor(sqrt(k-2)))/2. Valid for k >= 2 and
// n >= k + floor(sqrt(k-1)) + 2.
Rational lower_bound_general(int k, long long n);

// Sharp k = 2 bound: 2n - 3 for n >= 5.
long long lower_bound_k2(long long n);

// Parsons: r(C4, K_{1,k}) <= k + floor(sqrt(k-1)) + 2 for k >= 2.
int ramsey_upper(int k);

// Ollmann: minimum edge count of a C4-saturated graph on n >= 5 vertices.
long long c4_saturation_lower_bound(long long n);

} // namespace cocrit

#endif
