#include "diskspec/bessel_ref.hpp"

#include "diskspec/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace diskspec {

std::vector<double> bessel_j_all(int order_max, double x) {
    if (order_max < 0 || x < 0.0) {
        throw DomainError("bessel_j_all needs order >= 0 and x >= 0");
    }
    std::vector<double> out(static_cast<std::size_t>(order_max) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    const int start = 2 * ((std::max(order_max, static_cast<int>(x + 12.0 * std::cbrt(x) + 40.0)) + 1) / 2);
    double above = 0.0;
    double cur = 1e-300;
    double norm = 0.0;
    for (int n = start; n > 0; --n) {
        const double below = 2.0 * n / x * cur - above;
        above = cur;
        cur = below;
        if (n - 1 <= order_max) {
            out[static_cast<std::size_t>(n - 1)] = cur;
        }
        if ((n - 1) % 2 == 0) {
            norm += (n - 1 == 0) ? cur : 2.0 * cur;
        }
        if (std::abs(cur) > 1e250) {
            cur *= 1e-250;
            above *= 1e-250;
            norm *= 1e-250;
            for (double& v : out) {
                v *= 1e-250;
            }
        }
    }
    for (double& v : out) {
        v /= norm;
    }
    return out;
}

double bessel_j(int m, double x) {
    if (m < 0) {
        return (m % 2 == 0 ? 1.0 : -1.0) * bessel_j(-m, x);
    }
    return bessel_j_all(m, x)[static_cast<std::size_t>(m)];
}

double bessel_j_prime(int m, double x) {
    if (m == 0) {
        return -bessel_j(1, x);
    }
    const auto j = bessel_j_all(m + 1, x);
    return 0.5 * (j[static_cast<std::size_t>(m - 1)] - j[static_cast<std::size_t>(m + 1)]);
}

std::vector<double> scan_roots(const std::function<double(double)>& f, double a, double b, double h,
                               std::size_t max_count, double tol) {
    std::vector<double> roots;
    double x0 = a;
    double f0 = f(x0);
    while (x0 < b && roots.size() < max_count) {
        const double x1 = std::min(x0 + h, b);
        const double f1 = f(x1);
        if (f0 == 0.0) {
            roots.push_back(x0);
        } else if (f0 * f1 < 0.0) {
            double lo = x0;
            double hi = x1;
            double flo = f0;
            while (hi - lo > tol * std::max(1.0, std::abs(lo))) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) {
                    break;
                }
                const double fm = f(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    return roots;
}

std::vector<double> bessel_zeros(int m, std::size_t count) {
    if (m < 0) {
        throw DomainError("bessel_zeros needs m >= 0");
    }
    // Zeros are at least pi apart beyond j_{m,1} > m, so a step of 0.1 cannot skip a pair.
    // j_{m,n} stays below (n + m/2 + 1) pi.
    const double upper = 10.0 + std::numbers::pi * (count + 0.5 * m + 2.0);
    const double start = m == 0 ? 0.5 : static_cast<double>(m);
    return scan_roots([m](double x) { return bessel_j(m, x); }, start, upper, 0.1, count, 0.0);
}

}  // namespace diskspec
