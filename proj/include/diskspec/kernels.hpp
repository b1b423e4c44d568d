#pragma once

#include "diskspec/banded_matrix.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace diskspec {

/// Serial kernels are the reference; Parallel runs the same loops under OpenMP.
enum class Exec { Serial, Parallel };

/// y = A x for a row-major rows x cols matrix.
void dense_matvec(Exec exec, std::span<const double> a, std::size_t rows, std::size_t cols,
                  std::span<const double> x, std::span<double> y);
void dense_matvec(Exec exec, std::span<const double> a, std::size_t rows, std::size_t cols,
                  std::span<const std::complex<double>> x, std::span<std::complex<double>> y);

/// y = A^T x for a row-major rows x cols matrix (y has cols entries).
void dense_matvec_transposed(Exec exec, std::span<const double> a, std::size_t rows,
                             std::size_t cols, std::span<const std::complex<double>> x,
                             std::span<std::complex<double>> y);

/// Banded product, row-parallel in the Parallel variant.
std::vector<double> banded_apply(Exec exec, const BandedMatrix& a, std::span<const double> x);

int max_threads();

}  // namespace diskspec
