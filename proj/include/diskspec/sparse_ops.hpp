#pragma once

#include "diskspec/banded_matrix.hpp"
#include "diskspec/basis_id.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace diskspec {

struct CoeffExpansion;

// Every factory returns the leading rows x cols block of the infinite
// operator, so any rectangle is exact entry by entry. The (src, n) overloads
// give the square n x n block.

/// (1/sqrt2)(d/dr - m/r): (k,m) -> (k+1,m+1). Single superdiagonal.
BandedMatrix d_plus(BasisId src, std::size_t rows, std::size_t cols);
BandedMatrix d_plus(BasisId src, std::size_t n);

/// (1/sqrt2)(d/dr + m/r): (k,m) -> (k+1,m-1). Diagonal.
/// At m = 0 the two ladder operators coincide and this returns d_plus.
BandedMatrix d_minus(BasisId src, std::size_t rows, std::size_t cols);
BandedMatrix d_minus(BasisId src, std::size_t n);

/// Multiplication by r: (k,m) -> (k,m+1). Diagonal and first superdiagonal.
BandedMatrix r_plus(BasisId src, std::size_t rows, std::size_t cols);
BandedMatrix r_plus(BasisId src, std::size_t n);

/// Multiplication by r: (k,m) -> (k,m-1). Diagonal and first subdiagonal.
/// At m = 0 this returns r_plus.
BandedMatrix r_minus(BasisId src, std::size_t rows, std::size_t cols);
BandedMatrix r_minus(BasisId src, std::size_t n);

/// Identity re-expansion: (k,m) -> (k+1,m). Diagonal and first superdiagonal.
BandedMatrix convert(BasisId src, std::size_t rows, std::size_t cols);
BandedMatrix convert(BasisId src, std::size_t n);

/// Multiplication by (1-r^2): (k,m) -> (k-1,m), k >= 1. Diagonal and first subdiagonal.
BandedMatrix convert_down(BasisId src, std::size_t rows, std::size_t cols);
BandedMatrix convert_down(BasisId src, std::size_t n);

/// Multiplication by z = 2r^2-1 on (k,m): symmetric tridiagonal Jacobi matrix.
BandedMatrix z_matrix(BasisId src, std::size_t rows, std::size_t cols);
BandedMatrix z_matrix(BasisId src, std::size_t n);

/// Dirichlet recombination B = C^dag + alpha^{-1}|0><0|: (k,m) -> (k-1,m), k >= 1,
/// with alpha = Q_0^{k-1,m}(1). The represented function has f(1) = g_0.
BandedMatrix dirichlet_B(BasisId src, std::size_t rows, std::size_t cols);
BandedMatrix dirichlet_B(BasisId src, std::size_t n);

/// Square recombination used by the Galerkin solvers: (k,m) -> (k-1,m), k >= 1.
/// Column 0 is Q_0^{k-1,m}/alpha and column j >= 1 is (1-r^2) Q_{j-1}^{k,m}, so
/// f(1) = g_0 and the map is one-to-one on the first N coefficients.
/// Upper bidiagonal.
BandedMatrix recombination(BasisId src, std::size_t rows, std::size_t cols);
BandedMatrix recombination(BasisId src, std::size_t n);

/// Diagonal Lambda^{-1} on (k,m). Throws GaugeError when m = 0 (Lambda_0 = 0).
BandedMatrix lambda_inverse(BasisId src, std::size_t rows, std::size_t cols);

enum class OpKind { Dplus, Dminus, Rplus, Rminus, C, Cdag, Z, B, Recombine, LambdaInv, Ncc, Identity };

std::string to_string(OpKind kind);

/// One factor of an operator chain, labelled by the space it acts on.
struct OperatorTag {
    OpKind kind = OpKind::Identity;
    BasisId source{};
    std::shared_ptr<const CoeffExpansion> ncc{};  ///< only for OpKind::Ncc
};

OperatorTag tag(OpKind kind, BasisId source);
OperatorTag ncc_tag(std::shared_ptr<const CoeffExpansion> expansion, BasisId source);

/// Target space of a tag on the (k,m) lattice.
BasisId codomain(const OperatorTag& t);

/// Number of superdiagonals of the infinite operator.
int upper_bandwidth(const OperatorTag& t);
/// Number of subdiagonals of the infinite operator.
int lower_bandwidth(const OperatorTag& t);

/// Exact rows x cols block of a single tagged operator.
BandedMatrix build(const OperatorTag& t, std::size_t rows, std::size_t cols);

/// Product of a chain given in application order (ops.front() acts first).
///
/// Intermediate factors are built tall enough that the rows x cols result is
/// the exact leading block of the infinite product. Throws CompositionError
/// when one factor's codomain is not the next factor's source.
BandedMatrix compose(std::span<const OperatorTag> ops, std::size_t rows, std::size_t cols);
BandedMatrix compose(std::span<const OperatorTag> ops, std::size_t n);
BandedMatrix compose(std::initializer_list<OperatorTag> ops, std::size_t n);
BandedMatrix compose(std::initializer_list<OperatorTag> ops, std::size_t rows, std::size_t cols);

/// Final codomain of a chain; checks adjacency.
BasisId chain_codomain(std::span<const OperatorTag> ops);

/// Process-wide memo of built operators keyed by (kind, source, rows, cols).
/// Safe for concurrent lookups and insertions. Ncc tags bypass the cache.
class OperatorCache {
public:
    static OperatorCache& global();

    std::shared_ptr<const BandedMatrix> get(const OperatorTag& t, std::size_t rows, std::size_t cols);

    std::size_t size() const;
    void clear();

private:
    using Key = std::tuple<int, int, int, std::size_t, std::size_t>;
    mutable std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const BandedMatrix>> entries_;
};

}  // namespace diskspec
