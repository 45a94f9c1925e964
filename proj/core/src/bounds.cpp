#include "triquad/bounds.hpp"

#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace triquad {

namespace {

Rational reduced(long long num, long long den) {
    assert(den > 0);
    const long long g = std::gcd(num, den);
    return {num / g, den / g};
}

}  // namespace

Rational mantel_bound(long long n) {
    if (n < 0) throw std::invalid_argument("mantel_bound requires n >= 0");
    return reduced(n * n, 4);
}

long long mantel_edge_cap(long long n) {
    if (n < 0) throw std::invalid_argument("mantel_edge_cap requires n >= 0");
    return n * n / 4;
}

double reiman_bound(long long n) {
    if (n < 1) throw std::invalid_argument("reiman_bound requires n >= 1");
    return static_cast<double>(n) *
           (1.0 + std::sqrt(static_cast<double>(4 * n - 3))) / 4.0;
}

BoundsReport counting_inequality(long long n) {
    if (n < 0) throw std::invalid_argument("counting_inequality requires n >= 0");
    BoundsReport report;
    report.n = n;
    report.total_pairs = n * (n - 1) / 2;
    report.red_bound = mantel_bound(n);
    report.blue_bound_approx = n >= 1 ? reiman_bound(n) : 0.0;
    // C(n,2) <= n^2/4 + n(1+sqrt(4n-3))/4
    //   <=>  n - 3 <= sqrt(4n-3)      (divide by n/4, n > 0)
    //   <=>  n <= 3  or  (n-3)^2 <= 4n-3
    report.inequality_holds = n <= 3 || (n - 3) * (n - 3) <= 4 * n - 3;
    return report;
}

long long max_feasible_n() {
    long long n = 0;
    while (counting_inequality(n + 1).inequality_holds) ++n;
    return n;
}

}  // namespace triquad
