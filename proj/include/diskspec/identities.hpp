#pragma once

#include "diskspec/basis_id.hpp"
#include "diskspec/sparse_ops.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace diskspec {

struct IdentityResult {
    std::string name;
    BasisId basis;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool pass() const { return deviation <= tolerance; }
};

/// Adds `delta` to entry (row, col) of every operator of the given kind the
/// suite builds. Used to show that a broken entry is caught.
struct Fault {
    OpKind kind = OpKind::Dplus;
    std::size_t row = 0;
    std::size_t col = 0;
    double delta = 1e-6;
};

struct OpsCheckOptions {
    std::uint64_t seed = 2024;
    std::size_t n = 32;
    int k_max = 3;
    int m_min = 1;
    int m_max = 10;
    std::size_t grid_pairs = 20;  ///< random (k,m) pairs for the grid-action checks
    std::optional<Fault> fault;
};

/// Algebraic relations between the operators, compared as exact N x N blocks.
std::vector<IdentityResult> algebra_identities(const OpsCheckOptions& opts);

/// Grid action of every operator against its analytic definition.
std::vector<IdentityResult> grid_identities(const OpsCheckOptions& opts);

struct OpsCheckReport {
    std::vector<IdentityResult> results;
    bool all_pass() const;
    /// Worst entry per identity name.
    std::vector<IdentityResult> summary() const;
};

OpsCheckReport run_opscheck(const OpsCheckOptions& opts);

/// d/dr Q_n^{k,m}(r) from the Jacobi derivative formula, 0 <= r <= 1.
double q_derivative(const BasisId& basis, int n, double r);

}  // namespace diskspec
