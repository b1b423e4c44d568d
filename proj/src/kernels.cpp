#include "diskspec/kernels.hpp"

#include "diskspec/error.hpp"

#include <omp.h>

namespace diskspec {

namespace {

void check_shape(std::size_t a, std::size_t rows, std::size_t cols, std::size_t x, std::size_t y) {
    if (a != rows * cols || x != cols || y != rows) {
        throw ParameterError("dense_matvec: inconsistent shapes");
    }
}

template <typename T>
void matvec_impl(Exec exec, std::span<const double> a, std::size_t rows, std::size_t cols,
                 std::span<const T> x, std::span<T> y) {
    check_shape(a.size(), rows, cols, x.size(), y.size());
    const long n = static_cast<long>(rows);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < n; ++i) {
            const double* row = a.data() + static_cast<std::size_t>(i) * cols;
            T sum{};
            for (std::size_t j = 0; j < cols; ++j) {
                sum += row[j] * x[j];
            }
            y[static_cast<std::size_t>(i)] = sum;
        }
        return;
    }
    for (long i = 0; i < n; ++i) {
        const double* row = a.data() + static_cast<std::size_t>(i) * cols;
        T sum{};
        for (std::size_t j = 0; j < cols; ++j) {
            sum += row[j] * x[j];
        }
        y[static_cast<std::size_t>(i)] = sum;
    }
}

}  // namespace

void dense_matvec(Exec exec, std::span<const double> a, std::size_t rows, std::size_t cols,
                  std::span<const double> x, std::span<double> y) {
    matvec_impl<double>(exec, a, rows, cols, x, y);
}

void dense_matvec(Exec exec, std::span<const double> a, std::size_t rows, std::size_t cols,
                  std::span<const std::complex<double>> x, std::span<std::complex<double>> y) {
    matvec_impl<std::complex<double>>(exec, a, rows, cols, x, y);
}

void dense_matvec_transposed(Exec exec, std::span<const double> a, std::size_t rows,
                             std::size_t cols, std::span<const std::complex<double>> x,
                             std::span<std::complex<double>> y) {
    check_shape(a.size(), rows, cols, y.size(), x.size());
    const long n = static_cast<long>(cols);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long j = 0; j < n; ++j) {
            std::complex<double> sum{};
            for (std::size_t i = 0; i < rows; ++i) {
                sum += a[i * cols + static_cast<std::size_t>(j)] * x[i];
            }
            y[static_cast<std::size_t>(j)] = sum;
        }
        return;
    }
    for (std::size_t j = 0; j < cols; ++j) {
        y[j] = {};
    }
    for (std::size_t i = 0; i < rows; ++i) {
        const double* row = a.data() + i * cols;
        for (std::size_t j = 0; j < cols; ++j) {
            y[j] += row[j] * x[i];
        }
    }
}

std::vector<double> banded_apply(Exec exec, const BandedMatrix& a, std::span<const double> x) {
    if (exec == Exec::Serial) {
        return a.apply(x);
    }
    if (x.size() != a.cols()) {
        throw ParameterError("banded_apply: vector length does not match columns");
    }
    // Flatten the band map so the row loop touches plain arrays.
    std::vector<int> offsets;
    std::vector<const double*> data;
    std::vector<std::size_t> starts;
    for (const auto& [offset, values] : a.bands()) {
        offsets.push_back(offset);
        data.push_back(values.data());
        starts.push_back(a.band_start(offset));
    }
    std::vector<double> y(a.rows(), 0.0);
    const long rows = static_cast<long>(a.rows());
    const long cols = static_cast<long>(a.cols());
    const std::size_t nb = offsets.size();
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i) {
        double sum = 0.0;
        for (std::size_t b = 0; b < nb; ++b) {
            const long j = i + offsets[b];
            if (j < 0 || j >= cols || static_cast<std::size_t>(i) < starts[b]) {
                continue;
            }
            sum += data[b][static_cast<std::size_t>(i) - starts[b]] * x[static_cast<std::size_t>(j)];
        }
        y[static_cast<std::size_t>(i)] = sum;
    }
    return y;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace diskspec
