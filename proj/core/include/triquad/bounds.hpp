#pragma once

#include <cstdint>

namespace triquad {

/// Exact rational, reduced, den > 0. Only what the bounds need.
struct Rational {
    long long num = 0;
    long long den = 1;
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// n^2/4 exactly: a triangle-free graph on n vertices has at most this
/// many edges.
Rational mantel_bound(long long n);

/// floor(n^2/4), the integer edge-count ceiling of mantel_bound.
long long mantel_edge_cap(long long n);

/// n(1 + sqrt(4n-3))/4: a 4-cycle-free graph on n vertices has at most
/// this many edges. Display/comparison value only; threshold decisions
/// go through counting_inequality's exact integer form. Requires n >= 1.
double reiman_bound(long long n);

struct BoundsReport {
    long long n = 0;
    long long total_pairs = 0;       // C(n,2)
    Rational red_bound;              // n^2/4
    double blue_bound_approx = 0.0;  // n(1+sqrt(4n-3))/4
    bool inequality_holds = false;   // C(n,2) <= red + blue, decided exactly
};

/// Decides C(n,2) <= n^2/4 + n(1+sqrt(4n-3))/4 in integer arithmetic:
/// the inequality reduces to n <= 3 or (n-3)^2 <= 4n-3.
BoundsReport counting_inequality(long long n);

/// Largest n for which counting_inequality holds, found by ascending
/// scan until the first failure. Equals 8.
long long max_feasible_n();

}  // namespace triquad
