#pragma once

#include "diskspec/banded_matrix.hpp"
#include "diskspec/basis_id.hpp"
#include "diskspec/sparse_ops.hpp"

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace diskspec {

using cvec = std::vector<std::complex<double>>;

/// Radial space of a component whose total azimuthal order is ell = m + mu_bar.
inline BasisId signed_basis(int k, int ell) { return {k, ell < 0 ? -ell : ell}; }

/// Covariant derivative nabla_sigma on a component of signed order ell at level k.
/// For ell < 0 the roles of D+ and D- swap on |ell|; at ell = 0 both are D+.
OperatorTag spin_derivative(int sigma, int k, int ell);

/// Multiplication by r taking signed order ell to ell + sigma.
OperatorTag spin_multiply_r(int sigma, int k, int ell);

/// Vector v = v+ e+ + v- e- at Fourier order m. v+ lives in (k, |m+1|), v- in (k, |m-1|).
struct SpinVector {
    int m = 0;
    int k = 0;
    cvec plus;
    cvec minus;
};

/// Rank-s field at Fourier order m. Keys are spin multi-indices mu in {-1,+1}^s.
struct SpinTensor {
    int m = 0;
    int k = 0;
    int rank = 0;
    std::map<std::vector<int>, cvec> components;

    static int weight(const std::vector<int>& mu);
};

/// Plus component D^+ f and minus component D^- f of a scalar at signed order m, level k.
SpinVector gradient_scalar(int m, int k, std::span<const std::complex<double>> f);

/// Gradient of a rank-s tensor; the new index is prepended. Output level k+1.
SpinTensor gradient(const SpinTensor& t);

/// 2 D^- D^+ from (0,|m|) to (2,|m|), n x n.
BandedMatrix laplacian_scalar(int m, std::size_t n);

/// D^- v+ + D^+ v- at level k+1.
cvec divergence(const SpinVector& v);

/// i C D^- v+ - i C D^+ v- at level k+2.
cvec curl_z(const SpinVector& v);

/// Pointwise (v_r, v_theta) from grid values of v+ and v-.
std::pair<cvec, cvec> spin_to_polar(std::span<const std::complex<double>> plus,
                                    std::span<const std::complex<double>> minus);
std::pair<cvec, cvec> polar_to_spin(std::span<const std::complex<double>> vr,
                                    std::span<const std::complex<double>> vtheta);

/// Applies a banded operator to complex coefficients, zero-padding or truncating x to cols.
cvec apply_to(const BandedMatrix& a, std::span<const std::complex<double>> x);

}  // namespace diskspec
