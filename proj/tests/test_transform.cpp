#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diskspec/disk_basis.hpp"
#include "diskspec/error.hpp"
#include "diskspec/transform.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

using namespace diskspec;

TEST_CASE("n_max examples") {
    CHECK(n_max({0, 0}, 10) == 9);
    CHECK(n_max({0, 1}, 10) == 9);
    CHECK(n_max({2, 3}, 10) == 7);
    CHECK_THROWS_AS(n_max({0, 20}, 5), ParameterError);
}

TEST_CASE("total_modes examples") {
    CHECK(total_modes(10, 2) == 30);
    CHECK(total_modes(1, 0) == 1);
    const double exact = static_cast<double>(total_modes(64, 256));
    const double estimate = (64.0 - 256.0 / 8) * 256.0;
    CHECK(std::abs(exact - estimate) <= 0.05 * estimate);
}

TEST_CASE("quadrature_weight_factor examples") {
    const QuadGrid g2 = gauss_legendre(2);
    const auto w0 = quadrature_weight_factor(0, g2);
    const auto w1 = quadrature_weight_factor(1, g2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(w0[i] == g2.w[i]);
        CHECK(w1[i] == doctest::Approx(g2.w[i] * (1 - g2.r[i] * g2.r[i])).epsilon(1e-15));
    }
    const QuadGrid g = gauss_legendre(30);
    for (int k = 0; k <= 10; ++k) {
        for (double w : quadrature_weight_factor(k, g)) {
            CHECK(w > 0.0);
        }
    }
}

TEST_CASE("forward and backward examples") {
    const QuadGrid grid = gauss_legendre(16);
    std::vector<double> q3(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        q3[i] = q_eval({0, 2}, 3, grid.r[i]);
    }
    const RadialCoeffs c = forward({0, 2}, q3, grid);
    for (std::size_t n = 0; n < c.values.size(); ++n) {
        CHECK(std::abs(c.values[n] - (n == 3 ? 1.0 : 0.0)) <= 1e-13);
    }

    const RadialCoeffs zero = forward({1, 1}, std::vector<double>(grid.size(), 0.0), grid);
    for (auto v : zero.values) {
        CHECK(v == 0.0);
    }

    // r^2 = (1 + z)/2 = (Q_0 / sqrt2 + Q_1 / sqrt6) / 2 at (0,0)
    std::vector<double> r2(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        r2[i] = grid.r[i] * grid.r[i];
    }
    const RadialCoeffs p = forward({0, 0}, r2, grid);
    CHECK(std::abs(p.values[0] - 0.5 / std::sqrt(2.0)) <= 1e-15);
    CHECK(std::abs(p.values[1] - 0.5 / std::sqrt(6.0)) <= 1e-15);
    for (std::size_t n = 2; n < p.values.size(); ++n) {
        CHECK(std::abs(p.values[n]) <= 1e-15);
    }

    const auto e0 = backward(RadialCoeffs{{0, 0}, {1.0}}, grid);
    for (auto v : e0) {
        CHECK(std::abs(v - std::sqrt(2.0)) <= 1e-14);
    }
    CHECK_THROWS_AS(forward({0, 0}, std::vector<double>(3, 0.0), grid), ParameterError);
}

TEST_CASE("round trip on coefficient space and exactness boundary") {
    const std::size_t nr = 32;
    const QuadGrid grid = gauss_legendre(nr);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k <= 3; ++k) {
        for (int m = 0; m <= 20; ++m) {
            const RadialTransform t({k, m}, grid);
            std::vector<double> c(t.size());
            for (double& x : c) {
                x = u(rng);
            }
            const auto back = t.forward(std::span<const double>(t.backward(std::span<const double>(c))));
            double worst = 0.0;
            for (std::size_t n = 0; n < c.size(); ++n) {
                worst = std::max(worst, std::abs(back[n] - c[n]));
            }
            CHECK(worst <= 1e-13);

            // one degree past n_max the quadrature no longer integrates Q^2 exactly
            const auto wk = quadrature_weight_factor(k, grid);
            double norm = 0.0;
            for (std::size_t i = 0; i < nr; ++i) {
                const double q = q_eval({k, m}, static_cast<int>(t.size()), grid.r[i]);
                norm += 0.25 * wk[i] * q * q;
            }
            CHECK(std::abs(norm - 1.0) > 1e-8);
        }
    }
}

TEST_CASE("Parseval and transpose structure") {
    const QuadGrid grid = gauss_legendre(24);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const BasisId b : {BasisId{0, 0}, BasisId{1, 3}, BasisId{3, 8}}) {
        const RadialTransform t(b, grid);
        std::vector<double> c(t.size());
        for (double& x : c) {
            x = u(rng);
        }
        const auto f = t.backward(std::span<const double>(c));
        const auto wk = quadrature_weight_factor(b.k, grid);
        double energy = 0.0;
        double integral = 0.0;
        for (double x : c) {
            energy += x * x;
        }
        for (std::size_t i = 0; i < grid.size(); ++i) {
            integral += 0.25 * wk[i] * f[i] * f[i];
        }
        CHECK(integral == doctest::Approx(energy).epsilon(1e-12));

        // forward = S^T diag(w (1 - r^2)^k / 4)
        const auto synth = t.synthesis();
        std::vector<double> probe(grid.size());
        for (double& x : probe) {
            x = u(rng);
        }
        const auto fwd = t.forward(std::span<const double>(probe));
        for (std::size_t n = 0; n < t.size(); ++n) {
            double s = 0.0;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                s += synth[i * t.size() + n] * 0.25 * wk[i] * probe[i];
            }
            CHECK(std::abs(s - fwd[n]) <= 1e-14);
        }
    }
}

TEST_CASE("disk field grid round trip and serial parity") {
    auto f = [](double r, double th) { return r * r * std::cos(2 * th) + 0.3 * r * std::sin(th) + 1.0; };
    const std::size_t nr = 12;
    const DiskField serial = DiskField::from_grid(f, 3, 0, nr, 8, Exec::Serial);
    const DiskField parallel = DiskField::from_grid(f, 3, 0, nr, 8, Exec::Parallel);
    for (int m = -3; m <= 3; ++m) {
        for (std::size_t n = 0; n < serial.mode(m).values.size(); ++n) {
            CHECK(serial.mode(m).values[n] == parallel.mode(m).values[n]);
        }
    }
    // real field: f_{-m} = conj(f_m)
    for (std::size_t n = 0; n < serial.mode(2).values.size(); ++n) {
        CHECK(std::abs(serial.mode(-2).values[n] - std::conj(serial.mode(2).values[n])) <= 1e-15);
    }
    const QuadGrid grid = gauss_legendre(nr);
    const auto values = serial.to_grid(grid, 8);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            const double th = 2 * std::numbers::pi * j / 8;
            CHECK(std::abs(values[i * 8 + j] - f(grid.r[i], th)) <= 1e-13);
        }
    }
    std::ostringstream os;
    serial.write_coeffs_csv(os);
    CHECK(os.str().rfind("m,n,real,imag\n", 0) == 0);
    std::ostringstream gs;
    write_grid_csv(gs, grid, 8, values);
    CHECK(gs.str().rfind("r,theta,value\n", 0) == 0);
}
