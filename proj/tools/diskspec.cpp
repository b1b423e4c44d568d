// diskspec: command-line front end for the disk spectral examples.

#include "diskspec/apps.hpp"
#include "diskspec/error.hpp"
#include "diskspec/identities.hpp"
#include "diskspec/jacobi.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>

using namespace diskspec;
using cd = std::complex<double>;

namespace {

struct Common {
    int m = 1;
    std::size_t nr = 64;
    double alpha = 1.0;
    double re = 1e4;
    double kappa = 60.0;
    double tol = 1e-12;
    std::string out;
    std::string format = "csv";
    bool residuals = false;
};

// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw std::runtime_error("cannot open " + path);
            }
        }
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void write_eigen(const Common& c, const std::string& example, const std::vector<cd>& values,
                 const std::vector<double>& residuals, nlohmann::ordered_json extra) {
    Sink sink(c.out);
    if (c.format == "csv") {
        write_eigen_csv(sink.os(), values, residuals);
        return;
    }
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["example"] = example;
    j["m"] = c.m;
    j["nr"] = c.nr;
    j.update(extra);
    j["eigenvalues"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
        nlohmann::ordered_json e{{"index", i}, {"re", values[i].real()}, {"im", values[i].imag()}};
        if (i < residuals.size()) {
            e["residual"] = residuals[i];
        }
        j["eigenvalues"].push_back(e);
    }
    sink.os() << std::setprecision(17) << j.dump(2) << '\n';
}

Fault parse_fault(const std::string& spec) {
    static const std::map<std::string, OpKind> kinds{
        {"Dplus", OpKind::Dplus}, {"Dminus", OpKind::Dminus}, {"Rplus", OpKind::Rplus},
        {"Rminus", OpKind::Rminus}, {"C", OpKind::C}, {"Cdag", OpKind::Cdag},
        {"Z", OpKind::Z}, {"B", OpKind::B}, {"Recombine", OpKind::Recombine}};
    std::stringstream ss(spec);
    std::string kind;
    std::string row;
    std::string col;
    std::string delta;
    std::getline(ss, kind, ':');
    std::getline(ss, row, ':');
    std::getline(ss, col, ':');
    std::getline(ss, delta, ':');
    const auto it = kinds.find(kind);
    if (it == kinds.end() || row.empty() || col.empty()) {
        throw ParameterError("--fault expects KIND:ROW:COL[:DELTA], e.g. Dplus:3:4:1e-6");
    }
    Fault f;
    f.kind = it->second;
    f.row = std::stoul(row);
    f.col = std::stoul(col);
    if (!delta.empty()) {
        f.delta = std::stod(delta);
    }
    return f;
}

void write_pipe_fields(const PipeReport& report, std::size_t mode, std::size_t nr_grid,
                       std::size_t ntheta, const std::string& prefix) {
    const PipeFields fields = pipe_mode_fields(report, mode, nr_grid, ntheta);
    for (const auto& [name, values] : fields.values) {
        std::ofstream os(prefix + name + ".csv");
        if (!os) {
            throw std::runtime_error("cannot open " + prefix + name + ".csv");
        }
        os << "r,theta,re,im\n" << std::setprecision(17);
        for (std::size_t i = 0; i < fields.r.size(); ++i) {
            for (std::size_t j = 0; j < fields.theta.size(); ++j) {
                const cd v = values[i * fields.theta.size() + j];
                os << fields.r[i] << ',' << fields.theta[j] << ',' << v.real() << ',' << v.imag() << '\n';
            }
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse spectral solvers on the unit disk"};
    app.require_subcommand(1);
    Common c;
    auto add_common = [&](CLI::App* sub, std::string& format) {
        sub->add_option("--out", c.out, "output path (stdout if omitted)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* bessel = app.add_subcommand("bessel", "eigenvalues of 2 D- D+ f = -kappa^2 f, f(1) = 0");
    bessel->add_option("--m", c.m, "azimuthal wavenumber")->check(CLI::NonNegativeNumber);
    bessel->add_option("--nr", c.nr, "radial resolution")->check(CLI::PositiveNumber);
    bessel->add_flag("--residuals", c.residuals, "compute eigenvectors and residuals");
    add_common(bessel, c.format);

    auto* inertial = app.add_subcommand("inertial", "inertial waves in a rotating cylinder");
    inertial->add_option("--m", c.m)->check(CLI::PositiveNumber);
    inertial->add_option("--nr", c.nr)->check(CLI::PositiveNumber);
    inertial->add_option("--alpha", c.alpha, "aspect ratio")->check(CLI::PositiveNumber);
    add_common(inertial, c.format);

    std::optional<std::size_t> mode;
    std::string fields_prefix = "pipe_";
    std::size_t grid_r = 64;
    std::size_t grid_theta = 64;
    auto* pipe = app.add_subcommand("pipe", "linear stability of Hagen-Poiseuille flow");
    pipe->add_option("--m", c.m)->check(CLI::NonNegativeNumber);
    pipe->add_option("--nr", c.nr)->check(CLI::PositiveNumber);
    pipe->add_option("--alpha", c.alpha, "axial wavenumber");
    pipe->add_option("--re", c.re, "Reynolds number")->check(CLI::PositiveNumber);
    pipe->add_flag("--residuals", c.residuals);
    pipe->add_option("--mode", mode, "dump grid fields of this sorted mode");
    pipe->add_option("--fields-prefix", fields_prefix, "prefix of the field CSV files");
    pipe->add_option("--grid-r", grid_r)->check(CLI::PositiveNumber);
    pipe->add_option("--grid-theta", grid_theta)->check(CLI::PositiveNumber);
    add_common(pipe, c.format);

    bool screened = false;
    bool serial = false;
    std::string grid_path;
    auto* helm = app.add_subcommand("helmholtz", "(lap + kappa^2) f = s, f = g on r = 1");
    helm->add_option("--kappa", c.kappa);
    helm->add_option("--tol", c.tol)->check(CLI::PositiveNumber);
    helm->add_flag("--screened", screened, "solve (lap - kappa^2) f = s instead");
    helm->add_flag("--serial", serial, "one thread for the per-m solves");
    helm->add_option("--grid", grid_path, "also write f on a polar grid (r,theta,value)");
    helm->add_option("--grid-r", grid_r)->check(CLI::PositiveNumber);
    helm->add_option("--grid-theta", grid_theta)->check(CLI::PositiveNumber);
    std::string helm_format = "json";
    add_common(helm, helm_format);

    OpsCheckOptions ops;
    std::string fault;
    auto* opscheck = app.add_subcommand("opscheck", "operator identity suite");
    opscheck->add_option("--seed", ops.seed);
    opscheck->add_option("--n", ops.n)->check(CLI::Range(4, 256));
    opscheck->add_option("--pairs", ops.grid_pairs);
    opscheck->add_option("--fault", fault, "perturb KIND:ROW:COL[:DELTA] in every built operator");
    add_common(opscheck, c.format);

    CLI11_PARSE(app, argc, argv);

    try {
        if (bessel->parsed()) {
            const BesselReport r = run_bessel(c.m, c.nr, c.residuals);
            std::vector<cd> kappa_sq;
            for (cd mu : r.eig.values) {
                kappa_sq.push_back(-mu);
            }
            nlohmann::ordered_json extra;
            extra["kappa"] = r.kappa;
            extra["oracle_rel_error"] = r.rel_error;
            write_eigen(c, "bessel", kappa_sq, r.eig.residuals, extra);
        } else if (inertial->parsed()) {
            const InertialReport r = run_inertial(c.m, c.alpha, c.nr);
            nlohmann::ordered_json extra;
            extra["alpha"] = c.alpha;
            extra["analytic"] = r.analytic;
            extra["match_error"] = r.match_error;
            write_eigen(c, "inertial", r.omega, {}, extra);
        } else if (pipe->parsed()) {
            const PipeReport r = run_pipe(c.m, c.alpha, c.re, c.nr, c.residuals || mode.has_value());
            nlohmann::ordered_json extra;
            extra["alpha"] = c.alpha;
            extra["re"] = c.re;
            extra["kind"] = r.kind;
            write_eigen(c, "pipe", r.lambda, r.eig.residuals, extra);
            if (mode) {
                write_pipe_fields(r, *mode, grid_r, grid_theta, fields_prefix);
            }
        } else if (helm->parsed()) {
            HelmholtzOptions o;
            o.kappa = c.kappa;
            o.tol = c.tol;
            o.screened = screened;
            o.exec = serial ? Exec::Serial : Exec::Parallel;
            const HelmholtzReport r = run_helmholtz(o);
            Sink sink(c.out);
            if (helm_format == "json") {
                write_helmholtz_json(sink.os(), r);
            } else {
                sink.os() << "m,n_used,residual\n" << std::setprecision(17);
                for (const auto& md : r.modes) {
                    sink.os() << md.m << ',' << md.n_used << ',' << md.residual << '\n';
                }
            }
            if (!grid_path.empty()) {
                std::ofstream os(grid_path);
                os << "r,theta,value\n" << std::setprecision(17);
                const QuadGrid grid = gauss_legendre(grid_r);
                for (double rr : grid.r) {
                    for (std::size_t j = 0; j < grid_theta; ++j) {
                        const double th = 2.0 * std::numbers::pi * j / grid_theta;
                        os << rr << ',' << th << ',' << helmholtz_value(r, rr, th) << '\n';
                    }
                }
            }
            std::cerr << "kappa=" << r.kappa << " total_coeffs=" << r.total_coeffs
                      << " wall_time_s=" << r.wall_time_s << '\n';
        } else if (opscheck->parsed()) {
            if (!fault.empty()) {
                ops.fault = parse_fault(fault);
            }
            const OpsCheckReport r = run_opscheck(ops);
            Sink sink(c.out);
            if (c.format == "json") {
                nlohmann::ordered_json j;
                j["schema_version"] = 1;
                j["seed"] = ops.seed;
                j["all_pass"] = r.all_pass();
                j["identities"] = nlohmann::ordered_json::array();
                for (const auto& s : r.summary()) {
                    j["identities"].push_back({{"name", s.name},
                                               {"k", s.basis.k},
                                               {"m", s.basis.m},
                                               {"deviation", s.deviation},
                                               {"tolerance", s.tolerance},
                                               {"pass", s.pass()}});
                }
                sink.os() << std::setprecision(17) << j.dump(2) << '\n';
            } else {
                sink.os() << "name,k,m,deviation,tolerance,pass\n" << std::setprecision(6);
                for (const auto& s : r.summary()) {
                    sink.os() << s.name << ',' << s.basis.k << ',' << s.basis.m << ',' << s.deviation
                              << ',' << s.tolerance << ',' << (s.pass() ? "pass" : "FAIL") << '\n';
                }
            }
            return r.all_pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "diskspec: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
