#include "diskspec/disk_basis.hpp"

#include "diskspec/error.hpp"
#include "diskspec/jacobi.hpp"

#include <cmath>

namespace diskspec {

namespace {

// Above this the r^m prefactor is handled in log space.
constexpr int kLogSpaceM = 30;

double binomial(int n, int k) {
    double value = 1.0;
    for (int j = 1; j <= k; ++j) {
        value *= static_cast<double>(n - k + j) / j;
    }
    return value;
}

}  // namespace

void validate(const BasisId& basis) {
    if (basis.k < 0 || basis.m < 0) {
        throw DomainError("basis indices must be non-negative, got " + to_string(basis));
    }
}

double recursion_a(const BasisId& basis, int n) {
    const double k = basis.k;
    const double m = basis.m;
    const double num = m * m - k * k;
    if (num == 0.0) {
        return 0.0;
    }
    const double s = 2.0 * n + k + m;
    return num / (s * (s + 2.0));
}

double recursion_b(const BasisId& basis, int n) {
    if (n <= 0) {
        return 0.0;
    }
    const double k = basis.k;
    const double m = basis.m;
    const double s = 2.0 * n + k + m;
    return 2.0 / s * std::sqrt(n * (n + k) * (n + m) * (n + k + m) / (s * s - 1.0));
}

double q_norm(const BasisId& basis, int n) {
    validate(basis);
    return jacobi_norm(n, JacobiParams{static_cast<double>(basis.k), static_cast<double>(basis.m)}) /
           std::exp2(2.0 + basis.k + basis.m);
}

std::vector<double> q_eval_all(const BasisId& basis, std::size_t count, double r) {
    validate(basis);
    if (!(r >= 0.0 && r <= 1.0)) {
        throw DomainError("radial basis evaluated outside [0,1] at r=" + std::to_string(r));
    }
    std::vector<double> out(count, 0.0);
    if (count == 0) {
        return out;
    }
    const int m = basis.m;
    const int k = basis.k;
    if (r == 0.0 && m > 0) {
        return out;
    }
    // 1/N_0 = 2 (m+1)...(m+k+1) / k!, accumulated as a log.
    double log_inv_n0 = std::log(2.0) + std::log(m + k + 1.0);
    for (int j = 1; j <= k; ++j) {
        log_inv_n0 += std::log((m + j) / static_cast<double>(j));
    }
    double log_scale = 0.5 * log_inv_n0;
    double start = 1.0;
    if (m > 0) {
        start = std::pow(r, m);
        if (m > kLogSpaceM || start < 1e-280) {
            log_scale += m * std::log(r);
            start = 1.0;
        }
    }
    const double z = 2.0 * r * r - 1.0;
    // Scaled recursion; every value is later multiplied by exp(log_scale).
    std::vector<double> scaled(count);
    std::vector<double> shift(count, 0.0);
    double prev = 0.0;
    double cur = start;
    double running_shift = 0.0;
    scaled[0] = cur;
    for (std::size_t n = 0; n + 1 < count; ++n) {
        const int in = static_cast<int>(n);
        const double next =
            ((z - recursion_a(basis, in)) * cur - recursion_b(basis, in) * prev) /
            recursion_b(basis, in + 1);
        prev = cur;
        cur = next;
        if (std::abs(cur) > 1e200) {
            prev *= 1e-200;
            cur *= 1e-200;
            running_shift += 200.0 * std::log(10.0);
        }
        scaled[n + 1] = cur;
        shift[n + 1] = running_shift;
    }
    for (std::size_t n = 0; n < count; ++n) {
        out[n] = (scaled[n] == 0.0) ? 0.0 : scaled[n] * std::exp(log_scale + shift[n]);
    }
    return out;
}

double q_eval(const BasisId& basis, int n, double r) {
    if (n < 0) {
        throw ParameterError("radial degree must be non-negative");
    }
    return q_eval_all(basis, static_cast<std::size_t>(n) + 1, r).back();
}

double lambda_entry(const BasisId& basis, int n) {
    const double k = basis.k;
    const double m = basis.m;
    return (2.0 * n * (n + k + 1.0) + m * (2.0 * n + k + 1.0)) / (k + 1.0);
}

RestrictionRow restriction_row(const BasisId& basis, int order, std::size_t n) {
    validate(basis);
    if (order != 0 && order != 1) {
        throw ParameterError("restriction order must be 0 or 1");
    }
    RestrictionRow row{basis, order, std::vector<double>(n)};
    const int k = basis.k;
    const int m = basis.m;
    for (std::size_t i = 0; i < n; ++i) {
        const int in = static_cast<int>(i);
        double value = std::sqrt(2.0 * (2 * in + m + k + 1) * binomial(in + k, k) *
                                 binomial(in + m + k, k));
        if (order == 1) {
            value *= lambda_entry(basis, in);
        }
        row.entries[i] = value;
    }
    return row;
}

BandedMatrix lambda_diagonal(const BasisId& basis, std::size_t n) {
    validate(basis);
    BandedMatrix out(n, n, basis, basis);
    for (std::size_t i = 0; i < n; ++i) {
        out.set(i, i, lambda_entry(basis, static_cast<int>(i)));
    }
    return out;
}

}  // namespace diskspec
