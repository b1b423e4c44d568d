#include "diskspec/identities.hpp"

#include "diskspec/disk_basis.hpp"
#include "diskspec/error.hpp"
#include "diskspec/jacobi.hpp"
#include "diskspec/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

namespace diskspec {

double q_derivative(const BasisId& basis, int n, double r) {
    validate(basis);
    if (!(r >= 0.0 && r <= 1.0)) {
        throw DomainError("q_derivative outside [0,1]");
    }
    const int k = basis.k;
    const int m = basis.m;
    const double z = 2.0 * r * r - 1.0;
    const JacobiParams p{static_cast<double>(k), static_cast<double>(m)};
    const double inv = 1.0 / std::sqrt(q_norm(basis, n));
    double value = 0.0;
    if (m > 0) {
        value += m * std::pow(r, m - 1) * jacobi_eval(n, p, z);
    }
    if (n > 0) {
        const JacobiParams dp{k + 1.0, m + 1.0};
        value += std::pow(r, m + 1) * 2.0 * (n + k + m + 1.0) * jacobi_eval(n - 1, dp, z);
    }
    return value * inv;
}

namespace {

class Builder {
public:
    explicit Builder(const std::optional<Fault>& fault) : fault_(fault) {}

    BandedMatrix make(const OperatorTag& t, std::size_t rows, std::size_t cols) const {
        BandedMatrix a = build(t, rows, cols);
        if (fault_ && fault_->kind == t.kind && fault_->row < rows && fault_->col < cols) {
            a.add_to(fault_->row, fault_->col, fault_->delta);
        }
        return a;
    }

    BandedMatrix chain(std::initializer_list<OperatorTag> ops, std::size_t n) const {
        const std::vector<OperatorTag> v(ops);
        chain_codomain(v);
        std::vector<std::size_t> dims(v.size());
        dims.back() = n;
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            dims[i - 1] = dims[i] + static_cast<std::size_t>(upper_bandwidth(v[i]));
        }
        BandedMatrix product = make(v[0], dims[0], n);
        for (std::size_t i = 1; i < v.size(); ++i) {
            product = multiply(make(v[i], dims[i], dims[i - 1]), product);
        }
        return product;
    }

private:
    std::optional<Fault> fault_;
};

OperatorTag T(OpKind kind, int k, int m) { return tag(kind, BasisId{k, m}); }

}  // namespace

std::vector<IdentityResult> algebra_identities(const OpsCheckOptions& opts) {
    const Builder b(opts.fault);
    const std::size_t n = opts.n;
    const double s2 = std::numbers::sqrt2;
    const double tol = 1e-13;
    std::vector<IdentityResult> out;
    auto record = [&](const std::string& name, BasisId basis, const BandedMatrix& lhs,
                      const BandedMatrix& rhs, double scale_tol = 1.0) {
        out.push_back({name, basis, max_abs_diff(lhs, rhs), tol * scale_tol});
    };
    for (int k = 0; k <= opts.k_max; ++k) {
        for (int m = opts.m_min; m <= opts.m_max; ++m) {
            const BasisId km{k, m};
            using enum OpKind;
            record("d_commute", km, b.chain({T(Dplus, k, m), T(Dminus, k + 1, m + 1)}, n),
                   b.chain({T(Dminus, k, m), T(Dplus, k + 1, m - 1)}, n));
            record("r_commute", km, b.chain({T(Rplus, k, m), T(Rminus, k, m + 1)}, n),
                   b.chain({T(Rminus, k, m), T(Rplus, k, m - 1)}, n));
            const BandedMatrix c = b.make(T(C, k, m), n, n);
            record("heisenberg_plus", km,
                   b.chain({T(Rminus, k, m), T(Dplus, k, m - 1)}, n) -
                       b.chain({T(Dplus, k, m), T(Rminus, k + 1, m + 1)}, n),
                   s2 * c);
            record("heisenberg_minus", km,
                   b.chain({T(Rplus, k, m), T(Dminus, k, m + 1)}, n) -
                       b.chain({T(Dminus, k, m), T(Rplus, k + 1, m - 1)}, n),
                   s2 * c);
            record("angular", km,
                   (1.0 / s2) * (b.chain({T(Dminus, k, m), T(Rplus, k + 1, m - 1)}, n) -
                                 b.chain({T(Dplus, k, m), T(Rminus, k + 1, m + 1)}, n)),
                   static_cast<double>(m) * c);
            if (k >= 1) {
                record("cdag_dplus", km,
                       b.chain({T(Dplus, k, m), T(Cdag, k + 1, m + 1)}, n) -
                           b.chain({T(Cdag, k, m), T(Dplus, k - 1, m)}, n),
                       s2 * b.make(T(Rplus, k, m), n, n));
                record("cdag_dminus", km,
                       b.chain({T(Dminus, k, m), T(Cdag, k + 1, m - 1)}, n) -
                           b.chain({T(Cdag, k, m), T(Dminus, k - 1, m)}, n),
                       s2 * b.make(T(Rminus, k, m), n, n));
            }
            record("adjoint", km, b.make(T(Rplus, k, m), n, n),
                   b.make(T(Rminus, k, m + 1), n, n).transpose(), 0.1);
            record("z_product", km,
                   2.0 * b.chain({T(Rplus, k, m), T(Rminus, k, m + 1)}, n) -
                       BandedMatrix::identity(n, km),
                   b.make(T(Z, k, m), n, n));
        }
    }
    return out;
}

std::vector<IdentityResult> grid_identities(const OpsCheckOptions& opts) {
    const Builder b(opts.fault);
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> kdist(0, opts.k_max);
    std::uniform_int_distribution<int> mdist(0, opts.m_max);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    const std::size_t n = std::min<std::size_t>(opts.n, 24);
    const QuadGrid grid = gauss_legendre(n + 8);
    std::vector<double> radii(grid.r);
    radii.push_back(1.0);
    const double tol = 1e-8;
    std::vector<IdentityResult> out;
    for (std::size_t pair = 0; pair < opts.grid_pairs; ++pair) {
        const BasisId src{kdist(rng), mdist(rng)};
        const int m = src.m;
        std::vector<double> c(n);
        for (double& x : c) {
            x = coeff(rng);
        }
        // Analytic values of f and f' at every radius.
        std::vector<double> f(radii.size());
        std::vector<double> fp(radii.size());
        for (std::size_t i = 0; i < radii.size(); ++i) {
            const auto q = q_eval_all(src, n, radii[i]);
            for (std::size_t j = 0; j < n; ++j) {
                f[i] += c[j] * q[j];
                fp[i] += c[j] * q_derivative(src, static_cast<int>(j), radii[i]);
            }
        }
        auto check = [&](const std::string& name, const BandedMatrix& op, auto exact) {
            const auto y = op.apply(std::span<const double>(c));
            double worst = 0.0;
            double scale = 0.0;
            for (std::size_t i = 0; i < radii.size(); ++i) {
                const auto q = q_eval_all(op.codomain(), y.size(), radii[i]);
                double value = 0.0;
                for (std::size_t j = 0; j < y.size(); ++j) {
                    value += y[j] * q[j];
                }
                const double e = exact(i);
                worst = std::max(worst, std::abs(value - e));
                scale = std::max(scale, std::abs(e));
            }
            out.push_back({name, src, worst / std::max(scale, 1.0), tol});
        };
        const double s2 = std::numbers::sqrt2;
        using enum OpKind;
        const std::size_t rows = n + 1;
        auto inv_r = [&](std::size_t i) { return m == 0 ? 0.0 : m * f[i] / radii[i]; };
        check("grid_dplus", b.make(tag(Dplus, src), rows, n),
              [&](std::size_t i) { return (fp[i] - inv_r(i)) / s2; });
        check("grid_dminus", b.make(tag(Dminus, src), rows, n),
              [&](std::size_t i) { return (fp[i] + inv_r(i)) / s2; });
        check("grid_rplus", b.make(tag(Rplus, src), rows, n),
              [&](std::size_t i) { return radii[i] * f[i]; });
        check("grid_rminus", b.make(tag(Rminus, src), rows, n),
              [&](std::size_t i) { return radii[i] * f[i]; });
        check("grid_convert", b.make(tag(C, src), rows, n), [&](std::size_t i) { return f[i]; });
        check("grid_z", b.make(tag(Z, src), rows, n),
              [&](std::size_t i) { return (2.0 * radii[i] * radii[i] - 1.0) * f[i]; });
        // Spin-aware factors keep m = 0 on the (k+1, 0) lattice node.
        const BandedMatrix radial =
            b.chain({spin_derivative(-1, src.k, m), spin_multiply_r(+1, src.k + 1, m - 1)}, rows) +
            b.chain({spin_derivative(+1, src.k, m), spin_multiply_r(-1, src.k + 1, m + 1)}, rows);
        check("grid_radial", (1.0 / s2) * radial.leading_block(rows, n),
              [&](std::size_t i) { return radii[i] * fp[i]; });
        if (src.k >= 1) {
            check("grid_convert_down", b.make(tag(Cdag, src), rows, n),
                  [&](std::size_t i) { return (1.0 - radii[i] * radii[i]) * f[i]; });
            const double alpha = restriction_row({src.k - 1, m}, 0, 1).entries[0];
            check("grid_dirichlet_b", b.make(tag(B, src), rows, n), [&](std::size_t i) {
                return (1.0 - radii[i] * radii[i]) * f[i] +
                       c[0] * q_eval({src.k - 1, m}, 0, radii[i]) / alpha;
            });
            check("grid_recombination", b.make(tag(Recombine, src), n, n), [&](std::size_t i) {
                const auto q = q_eval_all(src, n, radii[i]);
                double shifted = 0.0;
                for (std::size_t j = 1; j < n; ++j) {
                    shifted += c[j] * q[j - 1];
                }
                return (1.0 - radii[i] * radii[i]) * shifted +
                       c[0] * q_eval({src.k - 1, m}, 0, radii[i]) / alpha;
            });
        }
    }
    return out;
}

bool OpsCheckReport::all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass(); });
}

std::vector<IdentityResult> OpsCheckReport::summary() const {
    std::map<std::string, IdentityResult> worst;
    std::vector<std::string> order;
    for (const auto& r : results) {
        auto it = worst.find(r.name);
        if (it == worst.end()) {
            worst.emplace(r.name, r);
            order.push_back(r.name);
        } else if (r.deviation / r.tolerance > it->second.deviation / it->second.tolerance) {
            it->second = r;
        }
    }
    std::vector<IdentityResult> out;
    for (const auto& name : order) {
        out.push_back(worst.at(name));
    }
    return out;
}

OpsCheckReport run_opscheck(const OpsCheckOptions& opts) {
    OpsCheckReport report;
    report.results = algebra_identities(opts);
    auto grid = grid_identities(opts);
    report.results.insert(report.results.end(), grid.begin(), grid.end());
    return report;
}

}  // namespace diskspec
