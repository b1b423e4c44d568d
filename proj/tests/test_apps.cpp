#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diskspec/apps.hpp"
#include "diskspec/bessel_ref.hpp"
#include "diskspec/disk_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

using namespace diskspec;
using cd = std::complex<double>;

TEST_CASE("bessel at low resolution") {
    const BesselReport r = run_bessel(0, 16);
    CHECK(r.kappa[0] == doctest::Approx(2.404825557695773).epsilon(1e-10));
    for (std::size_t i = 0; i < r.eig.values.size(); ++i) {
        CHECK(-r.eig.values[i].real() > 0.0);
        CHECK(std::abs(r.kappa_sq_imag[i]) <= 1e-9 * std::abs(r.eig.values[i]));
    }
    const BesselReport r3 = run_bessel(3, 40);
    for (std::size_t i = 0; i < 12; ++i) {
        CHECK(r3.rel_error[i] <= 1e-10);
    }
}

TEST_CASE("bessel m = 50 eigenfunction near the origin") {
    const BesselReport r = run_bessel(50, 500, true);
    CHECK(r.kappa[0] == doctest::Approx(57.1).epsilon(5e-4));
    const auto& v = r.eig.vectors;
    std::vector<cd> c(static_cast<std::size_t>(v.rows()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = v(static_cast<Eigen::Index>(i), 200);
    }
    auto f = [&](double rr) {
        const auto q = q_eval_all({0, 50}, c.size(), rr);
        cd s{};
        for (std::size_t n = 0; n < c.size(); ++n) {
            s += c[n] * q[n];
        }
        return std::abs(s);
    };
    const double slope = std::log(f(2e-3) / f(1e-3)) / std::log(2.0);
    CHECK(slope == doctest::Approx(50.0).epsilon(0.01));

    SUBCASE("mode 200 coefficients fall below 1e-10 of peak between index 380 and 460") {
        double peak = 0.0;
        for (cd x : c) {
            peak = std::max(peak, std::abs(x));
        }
        std::size_t last = 0;
        for (std::size_t n = 0; n < c.size(); ++n) {
            if (std::abs(c[n]) > 1e-10 * peak) {
                last = n;
            }
        }
        INFO("last coefficient above 1e-10 of peak: " << last);
        CHECK(last + 1 >= 380);
        CHECK(last + 1 <= 460);
    }
}

TEST_CASE("inertial waves at moderate resolution") {
    const InertialReport r = run_inertial(1, 1.0, 96);
    CHECK(r.omega.size() == 2 * 96 - 1);
    for (cd w : r.omega) {
        CHECK(std::abs(w.imag()) <= 1e-10);
        CHECK(std::abs(w.real()) < 1.0);
    }
    REQUIRE_FALSE(r.analytic.empty());
    for (double e : r.match_error) {
        CHECK(e <= 1e-8);
    }
    // no reflection symmetry
    const double lo = r.omega.front().real();
    const double hi = r.omega.back().real();
    CHECK(std::abs(lo + hi) > 1e-3);
}

TEST_CASE("pipe eigenvalues at Re = 1e4 and their drift") {
    struct Row {
        int m;
        cd lambda;
    };
    const Row rows[] = {{1, {-0.0227049145535, 0.951481194735}}, {1, {-0.0472321995947, 0.273788709331}},
                        {5, {-0.0725274157946, 0.898561158159}}, {5, {-0.0793504734563, 0.247410847332}},
                        {12, {-0.0948648867252, 0.144951983763}}, {12, {-0.170456145014, 0.800901547889}}};
    for (int m : {1, 5, 12}) {
        const PipeReport a = run_pipe(m, 1.0, 1e4, 64);
        const PipeReport b = run_pipe(m, 1.0, 1e4, 80);
        for (const Row& row : rows) {
            if (row.m != m) {
                continue;
            }
            const cd la = a.lambda[nearest(a.lambda, row.lambda)];
            const cd lb = b.lambda[nearest(b.lambda, row.lambda)];
            CHECK(std::abs(la - row.lambda) <= 1e-9);
            CHECK(std::abs(la - lb) <= 1e-10);
        }
        for (std::size_t i = 1; i < a.lambda.size(); ++i) {
            CHECK(a.lambda[i].real() <= a.lambda[i - 1].real());
        }
    }
}

TEST_CASE("pipe mode fields") {
    const PipeReport r = run_pipe(1, 1.0, 1e4, 48, true);
    const PipeFields f = pipe_mode_fields(r, 0, 10, 8);
    for (const char* name : {"p", "v_r", "v_theta", "w", "omega_3", "psi"}) {
        REQUIRE(f.values.count(name) == 1);
        CHECK(f.values.at(name).size() == 80);
    }
    for (double res : r.eig.residuals) {
        CHECK(res <= 1e-8);
    }
}

TEST_CASE("Helmholtz with constant boundary data") {
    HelmholtzOptions o;
    o.kappa = 0.0;
    const HelmholtzData data{[](double, double) { return 0.0; }, [](double, double) { return 1.0; }};
    const HelmholtzReport r = run_helmholtz(o, data);
    for (double rr : {0.0, 0.3, 0.77, 1.0}) {
        for (double th : {0.0, 1.0, 4.0}) {
            CHECK(std::abs(helmholtz_value(r, rr, th) - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("Helmholtz forcing at kappa = 60") {
    HelmholtzOptions o;
    const HelmholtzReport r = run_helmholtz(o);
    CHECK(r.max_residual <= 1e-10);
    for (const auto& mode : r.modes) {
        CHECK(mode.residual <= 1e-10);
    }
    // boundary data is reproduced
    for (double th : {0.3, 1.9, 4.4}) {
        const double x = std::cos(th);
        const double y = std::sin(th);
        CHECK(std::abs(helmholtz_value(r, 1.0, th) - y * std::cos(10 * x)) <= 1e-10);
    }
    double global = 0.0;
    double inner = 0.0;
    for (int i = 0; i <= 40; ++i) {
        for (int j = 0; j < 64; ++j) {
            const double rr = i / 40.0;
            const double v = std::abs(helmholtz_value(r, rr, 2 * std::numbers::pi * j / 64));
            global = std::max(global, v);
            if (rr < 0.05) {
                inner = std::max(inner, v);
            }
        }
    }
    CHECK(inner <= global);
    CHECK(std::isfinite(global));

    std::ostringstream os;
    write_helmholtz_json(os, r);
    for (const char* key : {"\"kappa\"", "\"total_coeffs\"", "\"wall_time_s\"", "\"max_residual\"", "\"per_m\""}) {
        CHECK(os.str().find(key) != std::string::npos);
    }
}

TEST_CASE("Helmholtz coefficient count grows linearly in kappa") {
    std::vector<double> total;
    for (double kappa : {40.0, 60.0, 80.0}) {
        HelmholtzOptions o;
        o.kappa = kappa;
        total.push_back(static_cast<double>(run_helmholtz(o).total_coeffs));
    }
    CHECK(total[2] / total[0] == doctest::Approx(2.0).epsilon(0.15));
    const double secant = (total[2] - total[0]) / 40.0;
    CHECK((total[1] - total[0]) / 20.0 == doctest::Approx(secant).epsilon(0.15));
    CHECK((total[2] - total[1]) / 20.0 == doctest::Approx(secant).epsilon(0.15));
}

TEST_CASE("screened variant and serial parity") {
    HelmholtzOptions o;
    o.kappa = 20.0;
    o.screened = true;
    const HelmholtzReport par = run_helmholtz(o);
    o.exec = Exec::Serial;
    const HelmholtzReport ser = run_helmholtz(o);
    CHECK(par.total_coeffs == ser.total_coeffs);
    CHECK(helmholtz_value(par, 0.4, 1.0) == helmholtz_value(ser, 0.4, 1.0));
    CHECK(par.max_residual <= 1e-10);
}

TEST_CASE("eigenvalue CSV schema") {
    std::ostringstream os;
    write_eigen_csv(os, {cd{1.0, -2.0}}, {1e-15});
    CHECK(os.str().rfind("index,re,im,residual\n0,1,-2,", 0) == 0);
}
