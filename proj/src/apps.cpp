#include "diskspec/apps.hpp"

#include "diskspec/bessel_ref.hpp"
#include "diskspec/disk_basis.hpp"
#include "diskspec/error.hpp"
#include "diskspec/jacobi.hpp"
#include "diskspec/ncc.hpp"
#include "diskspec/transform.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>

namespace diskspec {

namespace {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

OperatorTag C_at(int k, int ell) { return tag(OpKind::C, signed_basis(k, ell)); }

Term term(cd scale, std::vector<OperatorTag> chain) { return Term{scale, std::move(chain)}; }

bool ascending_abs(cd a, cd b) { return std::abs(a) < std::abs(b); }

void check_size(std::size_t n, std::size_t minimum, const char* what) {
    if (n < minimum) {
        throw ParameterError(std::string(what) + " needs N_r >= " + std::to_string(minimum));
    }
}

}  // namespace

std::size_t nearest(const std::vector<std::complex<double>>& values, std::complex<double> target) {
    if (values.empty()) {
        throw ParameterError("nearest: empty spectrum");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (std::abs(values[i] - target) < std::abs(values[best] - target)) {
            best = i;
        }
    }
    return best;
}

BesselReport run_bessel(int m, std::size_t n, bool want_vectors) {
    if (m < 0) {
        throw ParameterError("run_bessel needs m >= 0");
    }
    check_size(n, 2, "run_bessel");
    const BasisId f{0, m};
    BlockSystem sys;
    sys.fields = {{"f", f, n}};
    sys.equations = {{"helmholtz", n}};
    sys.lhs = {{0, 0, {term(2.0, {spin_derivative(+1, 0, m), spin_derivative(-1, 1, m + 1)})}}};
    sys.rhs = {{0, 0, {term(1.0, {C_at(0, m), C_at(1, m)})}}};
    sys.boundary = {{0, Placement::Last, {{0, boundary_entries(f, 0, n)}}}};
    BesselReport report;
    report.m = m;
    report.n = n;
    report.eig = generalized_eig(insert_boundary_rows(sys), want_vectors, ascending_abs);
    for (cd mu : report.eig.values) {
        report.kappa.push_back(std::sqrt(std::max(0.0, -mu.real())));
        report.kappa_sq_imag.push_back(-mu.imag());
    }
    report.oracle = bessel_zeros(m, report.kappa.size());
    for (std::size_t i = 0; i < report.oracle.size(); ++i) {
        report.rel_error.push_back(std::abs(report.kappa[i] - report.oracle[i]) / report.oracle[i]);
    }
    return report;
}

std::vector<double> inertial_dispersion_roots(int m, double alpha, double kappa_max) {
    std::vector<double> roots;
    for (int branch : {-1, +1}) {
        auto g = [&](double kappa) {
            const double omega = branch * alpha / std::sqrt(kappa * kappa + alpha * alpha);
            return kappa * omega * bessel_j_prime(m, kappa) + m * bessel_j(m, kappa);
        };
        for (double kappa : scan_roots(g, 1e-6, kappa_max, 0.05, 1u << 20)) {
            roots.push_back(branch * alpha / std::sqrt(kappa * kappa + alpha * alpha));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

InertialReport run_inertial(int m, double alpha, std::size_t n, double kappa_cutoff) {
    if (m < 1) {
        throw ParameterError("run_inertial needs m >= 1");
    }
    if (!(alpha > 0.0)) {
        throw ParameterError("run_inertial needs alpha > 0");
    }
    check_size(n, 4, "run_inertial");
    const BasisId vp = signed_basis(0, m + 1);
    const BasisId vm = signed_basis(0, m - 1);
    const BasisId p{0, m};
    BlockSystem sys;
    sys.fields = {{"iv+", vp, n}, {"iv-", vm, n}, {"p", p, n}};
    sys.equations = {{"momentum+", n}, {"momentum-", n}, {"continuity", n}};
    sys.lhs = {
        {0, 0, {term(1.0, {C_at(0, m + 1)})}},
        {0, 2, {term(1.0, {spin_derivative(+1, 0, m)})}},
        {1, 1, {term(-1.0, {C_at(0, m - 1)})}},
        {1, 2, {term(1.0, {spin_derivative(-1, 0, m)})}},
        {2, 2, {term(alpha * alpha, {C_at(0, m)})}},
    };
    sys.rhs = {
        {0, 0, {term(1.0, {C_at(0, m + 1)})}},
        {1, 1, {term(1.0, {C_at(0, m - 1)})}},
        {2, 0, {term(1.0, {spin_derivative(-1, 0, m + 1)})}},
        {2, 1, {term(1.0, {spin_derivative(+1, 0, m - 1)})}},
    };
    sys.boundary = {{0, Placement::Last, {{0, boundary_entries(vp, 0, n)}, {1, boundary_entries(vm, 0, n)}}}};
    // L x = mu R x with mu = -omega.
    const EigenResult eig = generalized_eig(insert_boundary_rows(sys), false,
                                            [](cd a, cd b) { return a.real() > b.real(); });
    InertialReport report;
    report.m = m;
    report.alpha = alpha;
    report.n = n;
    for (cd mu : eig.values) {
        report.omega.push_back(-mu);
    }
    report.kappa_cutoff = kappa_cutoff > 0.0 ? kappa_cutoff : 0.5 * static_cast<double>(n);
    report.analytic = inertial_dispersion_roots(m, alpha, report.kappa_cutoff);
    for (double w : report.analytic) {
        double best = std::numeric_limits<double>::infinity();
        for (cd o : report.omega) {
            best = std::min(best, std::abs(o - w));
        }
        report.match_error.push_back(best);
    }
    return report;
}

namespace {

BlockSystem pipe_system(int m, double alpha, double re, std::size_t n) {
    const double nu = 1.0 / re;
    // Axial dependence exp(-i alpha z): centre modes come out with Im(lambda) near +alpha.
    const cd ia = -I * alpha;
    const auto w_profile = std::make_shared<const CoeffExpansion>(
        expand_radial([](double z) { return 0.5 * (1.0 - z); }, ExpansionKind::Chebyshev));
    // L on a component of signed order ell, landing in (2, |ell|).
    auto viscous_block = [&](int ell) {
        const BasisId b = signed_basis(0, ell);
        return std::vector<Term>{
            term(ia, {ncc_tag(w_profile, b), C_at(0, ell), C_at(1, ell)}),
            term(-2.0 * nu, {spin_derivative(-1, 0, ell), spin_derivative(+1, 1, ell - 1)}),
            term(nu * alpha * alpha, {C_at(0, ell), C_at(1, ell)}),
        };
    };
    const double s2 = std::numbers::sqrt2;
    BlockSystem sys;
    sys.fields = {{"v+", signed_basis(0, m + 1), n},
                  {"v-", signed_basis(0, m - 1), n},
                  {"w", signed_basis(0, m), n},
                  {"p", signed_basis(0, m), n}};
    sys.equations = {{"momentum+", n}, {"momentum-", n}, {"axial", n}, {"continuity", n}};
    sys.lhs = {
        {0, 0, viscous_block(m + 1)},
        {0, 3, {term(1.0, {spin_derivative(+1, 0, m), C_at(1, m + 1)})}},
        {1, 1, viscous_block(m - 1)},
        {1, 3, {term(1.0, {spin_derivative(-1, 0, m), C_at(1, m - 1)})}},
        {2, 0, {term(-s2, {spin_multiply_r(-1, 0, m + 1), C_at(0, m), C_at(1, m)})}},
        {2, 1, {term(-s2, {spin_multiply_r(+1, 0, m - 1), C_at(0, m), C_at(1, m)})}},
        {2, 2, viscous_block(m)},
        {2, 3, {term(ia, {C_at(0, m), C_at(1, m)})}},
        {3, 0, {term(1.0, {spin_derivative(-1, 0, m + 1)})}},
        {3, 1, {term(1.0, {spin_derivative(+1, 0, m - 1)})}},
        {3, 2, {term(ia, {C_at(0, m)})}},
    };
    sys.rhs = {
        {0, 0, {term(1.0, {C_at(0, m + 1), C_at(1, m + 1)})}},
        {1, 1, {term(1.0, {C_at(0, m - 1), C_at(1, m - 1)})}},
        {2, 2, {term(1.0, {C_at(0, m), C_at(1, m)})}},
    };
    for (std::size_t f = 0; f < 3; ++f) {
        sys.boundary.push_back({f, Placement::Last, {{f, boundary_entries(sys.fields[f].basis, 0, n)}}});
    }
    return sys;
}

}  // namespace

PipeReport run_pipe(int m, double alpha, double re, std::size_t n, bool want_vectors) {
    if (!(re > 0.0)) {
        throw ParameterError("run_pipe needs Re > 0");
    }
    if (m < 0) {
        throw ParameterError("run_pipe needs m >= 0");
    }
    check_size(n, 4, "run_pipe");
    PipeReport report;
    report.m = m;
    report.alpha = alpha;
    report.re = re;
    report.n = n;
    report.system = pipe_system(m, alpha, re, n);
    // L x = -lambda R x: mu = -lambda, so descending Re(lambda) is ascending Re(mu).
    const DensePencil pencil = insert_boundary_rows(report.system);
    // The pressure constraint leaves defective infinite eigenvalues that rounding
    // splits to |mu| ~ 1e9; physical rates stay below ||L|| / ||R||.
    const double cutoff = 1e6 * pencil.L.norm() / pencil.R.norm();
    report.eig = generalized_eig(pencil, want_vectors, [](cd a, cd b) { return a.real() < b.real(); },
                                 cutoff);
    for (cd mu : report.eig.values) {
        const cd lambda = -mu;
        report.lambda.push_back(lambda);
        const double speed = alpha != 0.0 ? std::abs(lambda.imag() / alpha) : 0.0;
        report.kind.push_back(speed > 0.75 ? "centre" : "wall");
    }
    return report;
}

namespace {

// Dirichlet problem (2 D- D+ + kappa_sq C C) f = rhs at level (2, m), f(1) = boundary,
// solved in recombined variables f = B g. Returns f with n + 1 coefficients.
std::vector<cd> solve_dirichlet(int m, double kappa_sq, std::span<const cd> rhs2, cd boundary,
                                std::size_t n, double* residual, double* rcond) {
    check_size(n, 2, "Dirichlet solve");
    const BasisId f{0, m};
    BlockSystem sys;
    sys.fields = {{"f", f, n}};
    sys.equations = {{"helmholtz", n}};
    std::vector<Term> terms{term(2.0, {spin_derivative(+1, 0, m), spin_derivative(-1, 1, m + 1)})};
    if (kappa_sq != 0.0) {
        terms.push_back(term(kappa_sq, {C_at(0, m), C_at(1, m)}));
    }
    sys.lhs = {{0, 0, terms}};
    sys.boundary = {{0, Placement::Last, {{0, boundary_entries(f, 0, n)}}}};
    const std::size_t which[] = {0};
    const BlockSystem g_sys = galerkin_recombine(sys, which, Recombination::Dirichlet);
    const BandedMatrix a = assemble_banded(g_sys);
    std::vector<cd> b(n, cd{});
    b[0] = boundary;
    for (std::size_t i = 0; i + 1 < n && i < rhs2.size(); ++i) {
        b[i + 1] = rhs2[i];
    }
    const auto g = band_solve(a, std::span<const cd>(b));
    if (residual) {
        const auto ag = a.apply(std::span<const cd>(g));
        double num = 0.0;
        double xnorm = 0.0;
        double bnorm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            num = std::max(num, std::abs(ag[i] - b[i]));
            xnorm = std::max(xnorm, std::abs(g[i]));
            bnorm = std::max(bnorm, std::abs(b[i]));
        }
        double anorm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double row = 0.0;
            for (std::size_t j = i > 3 ? i - 3 : 0; j < std::min(n, i + 4); ++j) {
                row += std::abs(a(i, j));
            }
            anorm = std::max(anorm, row);
        }
        const double denom = anorm * xnorm + bnorm;
        *residual = denom == 0.0 ? 0.0 : num / denom;
    }
    if (rcond) {
        *rcond = band_rcond(a);
    }
    return apply_to(recombination({1, m}, n), g);
}

std::vector<cd> level2_source(int m, std::span<const cd> source, std::size_t rows) {
    const std::size_t cols = std::max(source.size(), rows + 2);
    std::vector<cd> padded(source.begin(), source.end());
    padded.resize(cols);
    return apply_to(compose({C_at(0, m), C_at(1, m)}, rows, cols), padded);
}

}  // namespace

std::vector<std::complex<double>> helmholtz_solve_m(int m, double kappa_sq,
                                                    std::span<const std::complex<double>> source,
                                                    std::complex<double> boundary, std::size_t n,
                                                    double* residual, double* rcond) {
    const auto rhs2 = level2_source(m, source, n);
    return solve_dirichlet(m, kappa_sq, rhs2, boundary, n, residual, rcond);
}

std::vector<std::complex<double>> helmholtz_solve_m_tau(int m, double kappa_sq,
                                                        std::span<const std::complex<double>> source,
                                                        std::complex<double> boundary, std::size_t n) {
    const BasisId f{0, m};
    BlockSystem sys;
    sys.fields = {{"f", f, n}};
    sys.equations = {{"helmholtz", n}};
    sys.lhs = {{0, 0,
                {term(2.0, {spin_derivative(+1, 0, m), spin_derivative(-1, 1, m + 1)}),
                 term(kappa_sq, {C_at(0, m), C_at(1, m)})}}};
    sys.boundary = {{0, Placement::Last, {{0, boundary_entries(f, 0, n)}}}};
    const DensePencil pencil = insert_boundary_rows(sys);
    const auto rhs2 = level2_source(m, source, n);
    Eigen::VectorXcd b(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        b(static_cast<Eigen::Index>(i)) = rhs2[i];
    }
    b(static_cast<Eigen::Index>(n - 1)) = boundary;
    const Eigen::VectorXcd x = pencil.L.partialPivLu().solve(b);
    return {x.data(), x.data() + x.size()};
}

HelmholtzData reference_forcing() {
    return HelmholtzData{
        [](double x, double y) { return std::exp(-(x - 0.4) * (x - 0.4) - (y - 0.3) * (y - 0.3)); },
        [](double x, double y) { return y * std::cos(10.0 * x); }};
}

namespace {

constexpr std::size_t kThetaPoints = 256;

// s_m(r_i) on the given radii by a DFT over kThetaPoints angles.
std::vector<cd> angular_mode(const std::function<double(double, double)>& f, int m,
                             std::span<const double> radii) {
    std::vector<cd> out(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        cd sum{};
        for (std::size_t j = 0; j < kThetaPoints; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / kThetaPoints;
            sum += f(radii[i] * std::cos(theta), radii[i] * std::sin(theta)) * std::polar(1.0, -m * theta);
        }
        out[i] = sum / static_cast<double>(kThetaPoints);
    }
    return out;
}

// Source coefficients of mode m, resolved once by doubling the quadrature.
std::vector<cd> source_coeffs(const HelmholtzData& data, int m, double tol) {
    for (std::size_t count = 32;; count *= 2) {
        const std::size_t nr = count + static_cast<std::size_t>(m / 2) + 8;
        const QuadGrid grid = gauss_legendre(nr);
        const RadialTransform t({0, m}, grid);
        auto coeffs = t.forward(angular_mode(data.source, m, grid.r));
        coeffs.resize(count);
        double peak = 0.0;
        double tail = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            peak = std::max(peak, std::abs(coeffs[i]));
            if (i >= count / 2) {
                tail = std::max(tail, std::abs(coeffs[i]));
            }
        }
        if (tail <= std::max(tol * peak, 1e-15) || count >= 1024) {
            return coeffs;
        }
    }
}

}  // namespace

HelmholtzReport run_helmholtz(const HelmholtzOptions& opts, const HelmholtzData& data) {
    if (!(opts.tol > 0.0)) {
        throw ParameterError("run_helmholtz needs tol > 0");
    }
    const auto start = std::chrono::steady_clock::now();
    HelmholtzReport report;
    report.kappa = opts.kappa;
    report.screened = opts.screened;
    const double kappa_sq = (opts.screened ? -1.0 : 1.0) * opts.kappa * opts.kappa;

    // Angular resolution: keep every m whose forcing or boundary data is above tol.
    const int m_cap = static_cast<int>(kThetaPoints / 2) - 1;
    const std::vector<double> probe{0.25, 0.5, 0.75, 1.0};
    std::vector<cd> boundary(static_cast<std::size_t>(m_cap) + 1);
    double scale = 0.0;
    std::vector<double> strength(boundary.size());
    for (int m = 0; m <= m_cap; ++m) {
        boundary[static_cast<std::size_t>(m)] = angular_mode(data.boundary, m, std::vector<double>{1.0})[0];
        double s = std::abs(boundary[static_cast<std::size_t>(m)]);
        for (cd v : angular_mode(data.source, m, probe)) {
            s = std::max(s, std::abs(v));
        }
        strength[static_cast<std::size_t>(m)] = s;
        scale = std::max(scale, s);
    }
    int m_max = 0;
    for (int m = 0; m <= m_cap; ++m) {
        if (strength[static_cast<std::size_t>(m)] > opts.tol * scale) {
            m_max = m;
        }
    }
    report.m_max = m_max;
    report.modes.resize(static_cast<std::size_t>(m_max) + 1);

    const long count = m_max + 1;
    std::vector<std::string> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic) if (opts.exec == Exec::Parallel)
    for (long idx = 0; idx < count; ++idx) {
        const int m = static_cast<int>(idx);
        HelmholtzMode& mode = report.modes[static_cast<std::size_t>(m)];
        mode.m = m;
        try {
            const auto s = source_coeffs(data, m, opts.tol);
            for (std::size_t n = opts.n_start;; n *= 2) {
                double residual = 0.0;
                double rcond = 0.0;
                auto f = helmholtz_solve_m(m, kappa_sq, s, boundary[static_cast<std::size_t>(m)], n,
                                           &residual, &rcond);
                double peak = 0.0;
                for (cd v : f) {
                    peak = std::max(peak, std::abs(v));
                }
                double tail = 0.0;
                for (std::size_t i = 3 * f.size() / 4; i < f.size(); ++i) {
                    tail = std::max(tail, std::abs(f[i]));
                }
                const bool converged = peak == 0.0 || tail <= opts.tol * peak;
                if (converged || 2 * n > opts.n_limit) {
                    mode.residual = residual;
                    mode.rcond = rcond;
                    mode.coeffs = std::move(f);
                    if (!converged) {
                        throw ConvergenceError("Helmholtz mode m=" + std::to_string(m) +
                                               " not resolved at N=" + std::to_string(n));
                    }
                    break;
                }
            }
        } catch (const std::exception& e) {
            errors[static_cast<std::size_t>(idx)] = e.what();
        }
    }
    for (const auto& e : errors) {
        if (!e.empty()) {
            throw ConvergenceError(e);
        }
    }
    // Coefficients count as used when they matter at tol relative to the whole field.
    double global_peak = 0.0;
    for (const auto& mode : report.modes) {
        for (cd c : mode.coeffs) {
            global_peak = std::max(global_peak, std::abs(c));
        }
    }
    for (auto& mode : report.modes) {
        for (std::size_t i = 0; i < mode.coeffs.size(); ++i) {
            if (std::abs(mode.coeffs[i]) > opts.tol * global_peak) {
                mode.n_used = i + 1;
            }
        }
        report.total_coeffs += (mode.m == 0 ? 1 : 2) * mode.n_used;
        report.max_residual = std::max(report.max_residual, mode.residual);
    }
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

double helmholtz_value(const HelmholtzReport& report, double r, double theta) {
    double value = 0.0;
    for (const auto& mode : report.modes) {
        const auto q = q_eval_all({0, mode.m}, mode.coeffs.size(), r);
        cd radial{};
        for (std::size_t n = 0; n < q.size(); ++n) {
            radial += mode.coeffs[n] * q[n];
        }
        const cd term = radial * std::polar(1.0, mode.m * theta);
        value += (mode.m == 0 ? 1.0 : 2.0) * term.real();
    }
    return value;
}

PipeFields pipe_mode_fields(const PipeReport& report, std::size_t mode, std::size_t nr_grid,
                            std::size_t ntheta) {
    if (report.eig.vectors.cols() == 0) {
        throw ParameterError("pipe_mode_fields needs eigenvectors");
    }
    if (mode >= static_cast<std::size_t>(report.eig.vectors.cols())) {
        throw ParameterError("pipe_mode_fields: mode index out of range");
    }
    const int m = report.m;
    const std::size_t n = report.n;
    const BlockSystem& sys = report.system;
    auto field = [&](std::size_t f) {
        const auto off = static_cast<Eigen::Index>(sys.field_offset(f));
        const Eigen::VectorXcd part = report.eig.vectors.col(static_cast<Eigen::Index>(mode)).segment(off, static_cast<Eigen::Index>(n));
        return cvec(part.data(), part.data() + part.size());
    };
    const SpinVector v{m, 0, field(0), field(1)};
    const cvec w = field(2);
    const cvec p = field(3);
    const cvec omega3 = curl_z(v);
    const std::vector<cd> psi_full = solve_dirichlet(m, 0.0, omega3, 0.0, n, nullptr, nullptr);

    const QuadGrid grid = gauss_legendre(nr_grid);
    auto synth = [&](BasisId basis, std::span<const cd> coeffs) {
        std::vector<cd> out(nr_grid);
        for (std::size_t i = 0; i < nr_grid; ++i) {
            const auto q = q_eval_all(basis, coeffs.size(), grid.r[i]);
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                out[i] += coeffs[j] * q[j];
            }
        }
        return out;
    };
    const auto vp = synth(signed_basis(0, m + 1), v.plus);
    const auto vm = synth(signed_basis(0, m - 1), v.minus);
    const auto [vr, vt] = spin_to_polar(vp, vm);
    std::map<std::string, std::vector<cd>> radial{
        {"p", synth({0, m}, p)},
        {"v_r", vr},
        {"v_theta", vt},
        {"w", synth({0, m}, w)},
        {"omega_3", synth({2, m}, omega3)},
        {"psi", synth({0, m}, psi_full)},
    };
    PipeFields out;
    out.r = grid.r;
    for (std::size_t j = 0; j < ntheta; ++j) {
        out.theta.push_back(2.0 * std::numbers::pi * j / ntheta);
    }
    for (const auto& [name, values] : radial) {
        std::vector<cd> grid_values(nr_grid * ntheta);
        for (std::size_t i = 0; i < nr_grid; ++i) {
            for (std::size_t j = 0; j < ntheta; ++j) {
                grid_values[i * ntheta + j] = values[i] * std::polar(1.0, m * out.theta[j]);
            }
        }
        out.values.emplace(name, std::move(grid_values));
    }
    return out;
}

void write_eigen_csv(std::ostream& os, const std::vector<std::complex<double>>& values,
                     const std::vector<double>& residuals) {
    const auto old = os.precision();
    os << "index,re,im,residual\n" << std::setprecision(17);
    for (std::size_t i = 0; i < values.size(); ++i) {
        os << i << ',' << values[i].real() << ',' << values[i].imag() << ',';
        if (i < residuals.size()) {
            os << residuals[i];
        } else {
            os << "nan";
        }
        os << '\n';
    }
    os.precision(old);
}

void write_helmholtz_json(std::ostream& os, const HelmholtzReport& report) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["kappa"] = report.kappa;
    j["screened"] = report.screened;
    j["total_coeffs"] = report.total_coeffs;
    j["wall_time_s"] = report.wall_time_s;
    j["max_residual"] = report.max_residual;
    j["per_m"] = nlohmann::json::array();
    for (const auto& mode : report.modes) {
        j["per_m"].push_back({{"m", mode.m}, {"n_used", mode.n_used}, {"residual", mode.residual}});
    }
    os << std::setprecision(17) << j.dump(2) << '\n';
}

}  // namespace diskspec
