#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace diskspec {

/// J_0(x) .. J_{order_max}(x) for x >= 0 by Miller's downward recurrence,
/// normalised with J_0 + 2 sum J_{2k} = 1.
std::vector<double> bessel_j_all(int order_max, double x);

double bessel_j(int m, double x);

/// J_m'(x) = J_{m-1}(x) - (m/x) J_m(x); J_0' = -J_1.
double bessel_j_prime(int m, double x);

/// First `count` positive zeros of J_m, bisected down to adjacent doubles.
std::vector<double> bessel_zeros(int m, std::size_t count);

/// Roots of f on (a, b): scan with step h, then bisect each sign change to tol * max(1, |x|).
std::vector<double> scan_roots(const std::function<double(double)>& f, double a, double b, double h,
                               std::size_t max_count, double tol = 1e-13);

}  // namespace diskspec
