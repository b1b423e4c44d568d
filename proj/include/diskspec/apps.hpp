#pragma once

#include "diskspec/band_linalg.hpp"
#include "diskspec/kernels.hpp"
#include "diskspec/tensor.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace diskspec {

// Bessel eigenproblem: 2 D- D+ f = -kappa^2 C C f, f(1) = 0.
struct BesselReport {
    int m = 0;
    std::size_t n = 0;
    std::vector<double> kappa;      ///< ascending
    std::vector<double> kappa_sq_imag;  ///< imaginary parts of the computed kappa^2
    std::vector<double> oracle;     ///< Bessel zeros j_{m,i}
    std::vector<double> rel_error;
    EigenResult eig;                ///< eigenvalues mu = -kappa^2
};

BesselReport run_bessel(int m, std::size_t n, bool want_vectors = false);

// Inertial waves in a rotating cylinder, frequency omega.
struct InertialReport {
    int m = 0;
    double alpha = 1.0;
    std::size_t n = 0;
    std::vector<std::complex<double>> omega;  ///< ascending real part
    /// Analytic frequencies from kappa omega J_m'(kappa) + m J_m(kappa) = 0 with kappa below the cutoff.
    std::vector<double> analytic;
    std::vector<double> match_error;  ///< distance from each analytic root to the nearest computed omega
    double kappa_cutoff = 0.0;
};

InertialReport run_inertial(int m, double alpha, std::size_t n, double kappa_cutoff = -1.0);

/// Analytic inertial-wave frequencies whose radial wavenumber is below kappa_max.
std::vector<double> inertial_dispersion_roots(int m, double alpha, double kappa_max);

// Linear perturbations of Hagen-Poiseuille flow, growth rate lambda.
struct PipeReport {
    int m = 0;
    double alpha = 1.0;
    double re = 1.0;
    std::size_t n = 0;
    std::vector<std::complex<double>> lambda;  ///< descending real part
    std::vector<std::string> kind;             ///< "centre" or "wall"
    EigenResult eig;
    BlockSystem system;
};

PipeReport run_pipe(int m, double alpha, double re, std::size_t n, bool want_vectors = false);

/// Index of the eigenvalue nearest to `target`.
std::size_t nearest(const std::vector<std::complex<double>>& values, std::complex<double> target);

/// Grid fields of one pipe eigenmode: p, v_r, v_theta, w, omega_3, psi on r_i x theta_j.
struct PipeFields {
    std::vector<double> r;
    std::vector<double> theta;
    std::map<std::string, std::vector<std::complex<double>>> values;  ///< row-major (r, theta)
};

PipeFields pipe_mode_fields(const PipeReport& report, std::size_t mode, std::size_t nr_grid,
                            std::size_t ntheta);

// Forced Helmholtz problem (lap + kappa^2) f = s, f = g on r = 1.
struct HelmholtzMode {
    int m = 0;
    std::size_t n_used = 0;
    double residual = 0.0;
    double rcond = 0.0;
    std::vector<std::complex<double>> coeffs;  ///< f_m in (0, m)
};

struct HelmholtzOptions {
    double kappa = 60.0;
    bool screened = false;  ///< solve (lap - kappa^2) f = s instead
    double tol = 1e-12;
    std::size_t n_start = 16;
    std::size_t n_limit = 8192;
    Exec exec = Exec::Parallel;
};

struct HelmholtzReport {
    double kappa = 0.0;
    bool screened = false;
    std::size_t total_coeffs = 0;
    double wall_time_s = 0.0;
    double max_residual = 0.0;
    int m_max = 0;
    std::vector<HelmholtzMode> modes;  ///< m = 0 .. m_max; f_{-m} = conj(f_m)
};

/// Forcing s(x, y) and boundary data g(x, y) in Cartesian form.
struct HelmholtzData {
    std::function<double(double, double)> source;  ///< s(x, y)
    std::function<double(double, double)> boundary;  ///< g(x, y) on the unit circle
};

HelmholtzData reference_forcing();

HelmholtzReport run_helmholtz(const HelmholtzOptions& opts, const HelmholtzData& data = reference_forcing());

/// Single-m Dirichlet solve by Galerkin recombination; returns f in (0, m).
std::vector<std::complex<double>> helmholtz_solve_m(int m, double kappa_sq,
                                                    std::span<const std::complex<double>> source,
                                                    std::complex<double> boundary, std::size_t n,
                                                    double* residual = nullptr,
                                                    double* rcond = nullptr);

/// Same problem by replacing the last row with the boundary functional (dense solve).
std::vector<std::complex<double>> helmholtz_solve_m_tau(int m, double kappa_sq,
                                                        std::span<const std::complex<double>> source,
                                                        std::complex<double> boundary, std::size_t n);

/// f evaluated at (r, theta) from a Helmholtz report.
double helmholtz_value(const HelmholtzReport& report, double r, double theta);

void write_eigen_csv(std::ostream& os, const std::vector<std::complex<double>>& values,
                     const std::vector<double>& residuals);
void write_helmholtz_json(std::ostream& os, const HelmholtzReport& report);

}  // namespace diskspec
