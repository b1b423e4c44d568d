#pragma once

#include <cstddef>
#include <vector>

namespace diskspec {

/// Exponents of the Jacobi weight (1-z)^a (1+z)^b on [-1, 1].
struct JacobiParams {
    double a;
    double b;
};

/// Throws ParameterError unless a > -1 and b > -1.
void validate(const JacobiParams& p);

/// P_n^{(a,b)}(z) by the standard three-term recursion.
double jacobi_eval(int n, const JacobiParams& p, double z);

/// Squared norm W_n^{a,b} = \int P_n^2 (1-z)^a (1+z)^b dz.
///
/// When either exponent is an integer the Gamma ratio collapses to a finite
/// product of ratios, which stays finite for any n. Otherwise lgamma is used.
double jacobi_norm(int n, const JacobiParams& p);

/// (-1)^n P_n^{(b,a)}(z), which equals P_n^{(a,b)}(-z).
double jacobi_reflect(int n, const JacobiParams& p, double z);

/// Gauss-Legendre rule in z together with the disk radii r_i = sqrt((1+z_i)/2).
struct QuadGrid {
    std::vector<double> z;  ///< strictly increasing nodes in (-1, 1)
    std::vector<double> r;  ///< matching radii in (0, 1)
    std::vector<double> w;  ///< Legendre weights, summing to 2

    std::size_t size() const noexcept { return z.size(); }
};

/// N-point Gauss-Legendre rule. Nodes come from Newton iteration on P_N
/// started at Chebyshev angles.
QuadGrid gauss_legendre(std::size_t n);

}  // namespace diskspec
