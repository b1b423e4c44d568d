#include "diskspec/jacobi.hpp"

#include "diskspec/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace diskspec {

namespace {

bool is_integer(double x) { return x == std::floor(x) && std::abs(x) < 1e6; }

// Gamma(n+a+1) / (Gamma(n+a+b+1) n!) * Gamma(n+b+1), integer a >= 0:
// the a-fold product of (n+j)/(n+b+j).
double integer_gamma_ratio(int n, int a, double b) {
    double ratio = 1.0;
    for (int j = 1; j <= a; ++j) {
        ratio *= (n + j) / (n + b + j);
    }
    return ratio;
}

}  // namespace

void validate(const JacobiParams& p) {
    if (!(p.a > -1.0) || !(p.b > -1.0)) {
        throw ParameterError("Jacobi exponents must exceed -1 (a=" + std::to_string(p.a) +
                             ", b=" + std::to_string(p.b) + ")");
    }
}

double jacobi_eval(int n, const JacobiParams& p, double z) {
    validate(p);
    if (n < 0) {
        throw ParameterError("Jacobi degree must be non-negative");
    }
    const double a = p.a;
    const double b = p.b;
    double prev = 1.0;
    if (n == 0) {
        return prev;
    }
    double cur = (a + 1.0) + 0.5 * (a + b + 2.0) * (z - 1.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        const double c1 = 2.0 * (k + 1) * (k + a + b + 1.0) * s;
        const double c2 = (s + 1.0) * ((s + 2.0) * s * z + a * a - b * b);
        const double c3 = 2.0 * (k + a) * (k + b) * (s + 2.0);
        const double next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    return cur;
}

double jacobi_norm(int n, const JacobiParams& p) {
    validate(p);
    if (n < 0) {
        throw ParameterError("Jacobi degree must be non-negative");
    }
    const double a = p.a;
    const double b = p.b;
    const double pow2 = std::exp2(a + b + 1.0);
    if (is_integer(a) || is_integer(b)) {
        // W is symmetric in (a, b); put the integer exponent first.
        const bool a_int = is_integer(a);
        const int ia = static_cast<int>(a_int ? a : b);
        const double other = a_int ? b : a;
        return pow2 / (2.0 * n + a + b + 1.0) * integer_gamma_ratio(n, ia, other);
    }
    if (n == 0) {
        // (a+b+1) Gamma(a+b+1) = Gamma(a+b+2) removes the 0/0 at a+b = -1.
        return std::exp((a + b + 1.0) * std::numbers::ln2 + std::lgamma(a + 1.0) +
                        std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
    }
    const double log_w = (a + b + 1.0) * std::numbers::ln2 - std::log(2.0 * n + a + b + 1.0) +
                         std::lgamma(n + a + 1.0) + std::lgamma(n + b + 1.0) -
                         std::lgamma(n + a + b + 1.0) - std::lgamma(n + 1.0);
    return std::exp(log_w);
}

double jacobi_reflect(int n, const JacobiParams& p, double z) {
    const double value = jacobi_eval(n, JacobiParams{p.b, p.a}, z);
    return (n % 2 == 0) ? value : -value;
}

QuadGrid gauss_legendre(std::size_t n) {
    if (n == 0) {
        throw ParameterError("gauss_legendre needs at least one node");
    }
    QuadGrid grid;
    grid.z.assign(n, 0.0);
    grid.w.assign(n, 0.0);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // i-th largest root; mirrored below.
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p1 = x;
                p0 = 1.0;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) {
                break;
            }
        }
        // Recompute the derivative at the converged node for the weight.
        double p0 = 1.0;
        double p1 = x;
        for (std::size_t k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = (n == 1) ? 1.0 : static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
        const double weight = 2.0 / ((1.0 - x * x) * dp * dp);
        grid.z[n - 1 - i] = x;
        grid.z[i] = -x;
        grid.w[n - 1 - i] = weight;
        grid.w[i] = weight;
    }
    if (n % 2 == 1) {
        grid.z[n / 2] = 0.0;
    }
    grid.r.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid.r[i] = std::sqrt(0.5 * (1.0 + grid.z[i]));
    }
    return grid;
}

}  // namespace diskspec
