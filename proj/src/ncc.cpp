#include "diskspec/ncc.hpp"

#include "diskspec/disk_basis.hpp"
#include "diskspec/error.hpp"
#include "diskspec/jacobi.hpp"
#include "diskspec/sparse_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace diskspec {

double expansion_a(ExpansionKind, int) { return 0.0; }

double expansion_b(ExpansionKind kind, int n) {
    if (n <= 0) {
        return 0.0;
    }
    if (kind == ExpansionKind::LegendreK0M0) {
        return recursion_b({0, 0}, n);
    }
    return n == 1 ? 1.0 / std::numbers::sqrt2 : 0.5;
}

double expansion_p0(ExpansionKind kind) {
    return kind == ExpansionKind::LegendreK0M0 ? std::numbers::sqrt2 : 1.0;
}

namespace {

// p_0(z) .. p_{count-1}(z) by the forward recursion.
std::vector<double> family_values(ExpansionKind kind, std::size_t count, double z) {
    std::vector<double> p(count, 0.0);
    if (count == 0) {
        return p;
    }
    p[0] = expansion_p0(kind);
    for (std::size_t n = 0; n + 1 < count; ++n) {
        const int in = static_cast<int>(n);
        const double prev = n > 0 ? p[n - 1] : 0.0;
        p[n + 1] = ((z - expansion_a(kind, in)) * p[n] - expansion_b(kind, in) * prev) /
                   expansion_b(kind, in + 1);
    }
    return p;
}

}  // namespace

double CoeffExpansion::evaluate(double z) const {
    const auto p = family_values(kind, coeffs.size(), z);
    double sum = 0.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        sum += coeffs[n] * p[n];
    }
    return sum;
}

CoeffExpansion expand_radial(const std::function<double(double)>& f, ExpansionKind kind, double tol,
                             std::size_t quad_points) {
    if (quad_points == 0) {
        throw ParameterError("expand_radial needs at least one quadrature point");
    }
    CoeffExpansion out{kind, std::vector<double>(quad_points, 0.0)};
    if (kind == ExpansionKind::LegendreK0M0) {
        // p_n is orthonormal for dz / 4.
        const QuadGrid grid = gauss_legendre(quad_points);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double fz = f(grid.z[i]);
            const auto p = family_values(kind, quad_points, grid.z[i]);
            for (std::size_t n = 0; n < quad_points; ++n) {
                out.coeffs[n] += 0.25 * grid.w[i] * fz * p[n];
            }
        }
    } else {
        // Chebyshev-Gauss nodes; p_n is orthonormal for the discrete mean.
        for (std::size_t i = 0; i < quad_points; ++i) {
            const double theta = std::numbers::pi * (i + 0.5) / quad_points;
            const double fz = f(std::cos(theta));
            out.coeffs[0] += fz / quad_points;
            // sqrt2 cos(n theta) directly; the recursion drifts by n eps
            for (std::size_t n = 1; n < quad_points; ++n) {
                out.coeffs[n] += fz * std::numbers::sqrt2 * std::cos(n * theta) / quad_points;
            }
        }
    }
    double biggest = 0.0;
    for (double c : out.coeffs) {
        biggest = std::max(biggest, std::abs(c));
    }
    if (biggest < 1e-300) {
        out.coeffs.assign(1, 0.0);
        return out;
    }
    std::size_t last = 0;
    for (std::size_t n = 0; n < out.coeffs.size(); ++n) {
        if (std::abs(out.coeffs[n]) > tol * biggest) {
            last = n;
        } else {
            out.coeffs[n] = 0.0;
        }
    }
    out.coeffs.resize(last + 1);
    return out;
}

BandedMatrix clenshaw_matrix(const CoeffExpansion& expansion, BasisId src, std::size_t rows,
                             std::size_t cols) {
    validate(src);
    const std::size_t deg = expansion.degree();
    const ExpansionKind kind = expansion.kind;
    // Each multiplication by the truncated Z spoils one more trailing row and
    // column, so deg + 1 rows of padding keep the returned block exact.
    const std::size_t size = std::max(rows, cols) + deg + 1;
    const BandedMatrix z = z_matrix(src, size);
    const BandedMatrix id = BandedMatrix::identity(size, src);
    BandedMatrix k1(size, size, src, src);
    BandedMatrix k2(size, size, src, src);
    for (std::size_t idx = deg + 1; idx-- > 0;) {
        const int n = static_cast<int>(idx);
        BandedMatrix next = expansion.coeffs[idx] * id;
        if (idx + 1 <= deg) {
            const BandedMatrix shifted = linear_combination(1.0, z, -expansion_a(kind, n), id);
            next = next + (1.0 / expansion_b(kind, n + 1)) * multiply(shifted, k1);
        }
        if (idx + 2 <= deg) {
            next = next - (expansion_b(kind, n + 1) / expansion_b(kind, n + 2)) * k2;
        }
        k2 = std::move(k1);
        k1 = std::move(next);
    }
    k1 *= expansion_p0(kind);
    k1.prune();
    return k1.leading_block(rows, cols);
}

BandedMatrix clenshaw_matrix(const CoeffExpansion& expansion, BasisId src, std::size_t n) {
    return clenshaw_matrix(expansion, src, n, n);
}

}  // namespace diskspec
