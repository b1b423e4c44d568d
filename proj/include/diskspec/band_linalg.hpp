#pragma once

#include "diskspec/banded_matrix.hpp"
#include "diskspec/disk_basis.hpp"
#include "diskspec/sparse_ops.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace diskspec {

/// Solves A x = b with banded LU (partial pivoting). Throws SingularMatrixError
/// with the 0-based pivot index when a pivot vanishes.
std::vector<double> band_solve(const BandedMatrix& a, std::span<const double> b);
std::vector<std::complex<double>> band_solve(const BandedMatrix& a,
                                             std::span<const std::complex<double>> b);

/// Reciprocal 1-norm condition estimate of a square banded matrix.
double band_rcond(const BandedMatrix& a);

/// scale * (chain applied in order), contributing one block of a system.
struct Term {
    std::complex<double> scale{1.0, 0.0};
    std::vector<OperatorTag> chain;
};

struct Block {
    std::size_t eq = 0;
    std::size_t field = 0;
    std::vector<Term> terms;
};

enum class Placement { Last, First };

/// Dense functional over one or more fields that overwrites a row of equation `eq`.
struct BoundaryRow {
    std::size_t eq = 0;
    Placement placement = Placement::Last;
    std::vector<std::pair<std::size_t, std::vector<std::complex<double>>>> parts;  ///< (field, row)
};

struct FieldSpec {
    std::string name;
    BasisId basis;
    std::size_t size = 0;
};

struct EquationSpec {
    std::string name;
    std::size_t size = 0;
};

/// Block operator system L x = mu R x (or L x = b when R is empty).
struct BlockSystem {
    std::vector<FieldSpec> fields;
    std::vector<EquationSpec> equations;
    std::vector<Block> lhs;
    std::vector<Block> rhs;
    std::vector<BoundaryRow> boundary;

    std::size_t field_offset(std::size_t field) const;
    std::size_t equation_offset(std::size_t eq) const;
    std::size_t total_fields() const;
    std::size_t total_equations() const;
};

struct DensePencil {
    Eigen::MatrixXcd L;
    Eigen::MatrixXcd R;
};

/// Assembles both sides densely. Last-placed boundary rows overwrite the final
/// row of their equation in L and zero it in R. First-placed rows sit on top
/// and push the equation rows down by one, dropping the last.
DensePencil insert_boundary_rows(const BlockSystem& sys);

/// Restriction row padded with zeros (or truncated) to `size` entries.
std::vector<std::complex<double>> boundary_entries(const BasisId& basis, int order, std::size_t size);

struct EigenResult {
    std::vector<std::complex<double>> values;
    Eigen::MatrixXcd vectors;       ///< columns match `values`; empty if not requested
    std::vector<double> residuals;  ///< ||L x - mu R x|| / ||L x||; empty if not requested
    std::size_t infinite = 0;       ///< eigenvalues dropped above the threshold
};

/// Finite eigenvalues of L x = mu R x, sorted by `less`. Real pencils go through
/// dggev, complex ones through zggev.
EigenResult generalized_eig(const DensePencil& pencil, bool want_vectors,
                            const std::function<bool(std::complex<double>, std::complex<double>)>& less,
                            double infinite_threshold = 1e10);

enum class Recombination { Dirichlet, Neumann };

/// Rewrites the chosen fields in recombined variables g with f = B g
/// (Dirichlet) or f = Lambda^{-1} B g (Neumann). Their boundary rows become
/// the unit functional e_0, placed first, so the system stays banded.
BlockSystem galerkin_recombine(const BlockSystem& sys, std::span<const std::size_t> fields,
                               Recombination kind);

/// Banded form of a single-field, single-equation system after recombination.
BandedMatrix assemble_banded(const BlockSystem& sys);

}  // namespace diskspec
