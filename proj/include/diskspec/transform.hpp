#pragma once

#include "diskspec/basis_id.hpp"
#include "diskspec/jacobi.hpp"
#include "diskspec/kernels.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <vector>

namespace diskspec {

/// Highest degree resolved exactly on N_r Gauss points: N_r - 1 - floor((k+m)/2).
std::size_t n_max(const BasisId& basis, std::size_t nr);

/// (1 - r_i^2)^k w_i.
std::vector<double> quadrature_weight_factor(int k, const QuadGrid& grid);

/// Sum of n_max + 1 over |m| <= N_theta / 2 at k = 0.
std::size_t total_modes(std::size_t nr, std::size_t ntheta);

/// Radial synthesis matrix Q_n(r_i), row-major N_r x (n_max + 1), shared per (basis, N_r).
class RadialTransform {
public:
    RadialTransform(BasisId basis, const QuadGrid& grid);

    BasisId basis() const noexcept { return basis_; }
    std::size_t grid_size() const noexcept { return nr_; }
    std::size_t size() const noexcept { return count_; }
    std::span<const double> synthesis() const noexcept { return synth_; }

    std::vector<std::complex<double>> forward(std::span<const std::complex<double>> values,
                                              Exec exec = Exec::Serial) const;
    std::vector<double> forward(std::span<const double> values, Exec exec = Exec::Serial) const;

    /// Accepts up to size() coefficients; missing ones are zero.
    std::vector<std::complex<double>> backward(std::span<const std::complex<double>> coeffs,
                                               Exec exec = Exec::Serial) const;
    std::vector<double> backward(std::span<const double> coeffs, Exec exec = Exec::Serial) const;

private:
    BasisId basis_;
    std::size_t nr_ = 0;
    std::size_t count_ = 0;
    std::vector<double> synth_;     ///< N_r x count
    std::vector<double> analysis_;  ///< count x N_r, weights folded in
};

/// Memo of radial transforms keyed by (basis, N_r).
std::shared_ptr<const RadialTransform> radial_transform(BasisId basis, std::size_t nr);

/// Coefficients f_n for one basis.
struct RadialCoeffs {
    BasisId basis;
    std::vector<std::complex<double>> values;
};

RadialCoeffs forward(const BasisId& basis, std::span<const double> grid_values, const QuadGrid& grid);
std::vector<std::complex<double>> backward(const RadialCoeffs& coeffs, const QuadGrid& grid);

/// Scalar field on the disk as Fourier modes m = -m_max..m_max, each in (k, |m|).
class DiskField {
public:
    DiskField(int m_max, int k, std::size_t nr);

    int m_max() const noexcept { return m_max_; }
    int k() const noexcept { return k_; }
    std::size_t nr() const noexcept { return nr_; }

    RadialCoeffs& mode(int m);
    const RadialCoeffs& mode(int m) const;

    /// Samples f(r, theta) on the Gauss radii and 2 m_max + 1 (or more) equispaced angles.
    static DiskField from_grid(const std::function<double(double, double)>& f, int m_max, int k,
                               std::size_t nr, std::size_t ntheta, Exec exec = Exec::Serial);

    /// Values on r_i x theta_j, row-major (radius, angle), via a slow DFT in theta.
    std::vector<std::complex<double>> to_grid(const QuadGrid& grid, std::size_t ntheta,
                                              Exec exec = Exec::Serial) const;

    void write_coeffs_csv(std::ostream& os) const;

private:
    int m_max_;
    int k_;
    std::size_t nr_;
    std::vector<RadialCoeffs> modes_;
};

/// Header `r,theta,value` with the real part of a grid from DiskField::to_grid.
void write_grid_csv(std::ostream& os, const QuadGrid& grid, std::size_t ntheta,
                    std::span<const std::complex<double>> values);

}  // namespace diskspec
