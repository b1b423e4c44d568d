#pragma once

#include "diskspec/banded_matrix.hpp"
#include "diskspec/basis_id.hpp"

#include <cstddef>
#include <vector>

namespace diskspec {

/// Throws DomainError for negative k or m.
void validate(const BasisId& basis);

/// Coefficients of the symmetric three-term recursion
/// z Q_n = B_n Q_{n-1} + A_n Q_n + B_{n+1} Q_{n+1}.
double recursion_a(const BasisId& basis, int n);
double recursion_b(const BasisId& basis, int n);

/// Normalisation N_n^{k,m} = W_n^{k,m} / 2^{2+k+m}.
double q_norm(const BasisId& basis, int n);

/// Q_n^{k,m}(r) = r^m P_n^{(k,m)}(2r^2-1) / sqrt(N_n^{k,m}), for 0 <= r <= 1.
double q_eval(const BasisId& basis, int n, double r);

/// Q_0 .. Q_{count-1} at one radius.
///
/// Runs the orthonormal recursion from a rescaled start and carries the
/// r^m prefactor as a logarithm, so large m neither underflows before the
/// polynomial part is applied nor overflows inside it.
std::vector<double> q_eval_all(const BasisId& basis, std::size_t count, double r);

/// Boundary functional at r = 1 written as a row over coefficients.
struct RestrictionRow {
    BasisId basis;
    int order = 0;  ///< 0: value, 1: first radial derivative
    std::vector<double> entries;
};

/// order 0: Q_n(1) = sqrt(2(2n+m+k+1) C(n+k,k) C(n+m+k,k)); order 1: Lambda_n Q_n(1).
RestrictionRow restriction_row(const BasisId& basis, int order, std::size_t n);

/// Lambda_n = [2n(n+k+1) + m(2n+k+1)] / (k+1), the ratio Q_n'(1) / Q_n(1).
double lambda_entry(const BasisId& basis, int n);

/// Diagonal operator with entries Lambda_n.
BandedMatrix lambda_diagonal(const BasisId& basis, std::size_t n);

}  // namespace diskspec
