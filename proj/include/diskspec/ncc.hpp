#pragma once

#include "diskspec/banded_matrix.hpp"
#include "diskspec/basis_id.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace diskspec {

enum class ExpansionKind { LegendreK0M0, Chebyshev };

/// Radial coefficient F(z), z = 2r^2-1, as a series in an orthonormal
/// polynomial family p_n(z) with a known symmetric recursion.
///
/// LegendreK0M0 uses p_n = Q_n^{0,0} (so p_0 = sqrt2). Chebyshev uses p_0 = 1,
/// p_n = sqrt2 T_n.
struct CoeffExpansion {
    ExpansionKind kind = ExpansionKind::Chebyshev;
    std::vector<double> coeffs;

    /// Index of the last retained coefficient.
    std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    double evaluate(double z) const;
};

/// Recursion data of the expansion family: z p_n = b_n p_{n-1} + a_n p_n + b_{n+1} p_{n+1}.
double expansion_a(ExpansionKind kind, int n);
double expansion_b(ExpansionKind kind, int n);
double expansion_p0(ExpansionKind kind);

/// Projects F(z) onto the family and drops the trailing coefficients with
/// |F_n| <= tol * max|F_n|.
CoeffExpansion expand_radial(const std::function<double(double)>& f, ExpansionKind kind,
                             double tol = 1e-14, std::size_t quad_points = 128);

/// F(Z) on (src) by Clenshaw's recursion on Jacobi matrices. The returned
/// block is exact: the recursion runs at a padded size and is then cut.
BandedMatrix clenshaw_matrix(const CoeffExpansion& expansion, BasisId src, std::size_t rows,
                             std::size_t cols);
BandedMatrix clenshaw_matrix(const CoeffExpansion& expansion, BasisId src, std::size_t n);

}  // namespace diskspec
