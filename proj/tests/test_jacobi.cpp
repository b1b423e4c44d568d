#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diskspec/error.hpp"
#include "diskspec/jacobi.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace diskspec;

TEST_CASE("jacobi_eval examples") {
    CHECK(jacobi_eval(0, {2.5, 0.5}, 0.3) == 1.0);
    CHECK(jacobi_eval(5, {2, 7}, 1.0) == doctest::Approx(21.0).epsilon(1e-15));
    // Legendre P_2 in closed form
    const double z = 0.5;
    CHECK(jacobi_eval(2, {0, 0}, z) == doctest::Approx((3 * z * z - 1) / 2).epsilon(1e-15));
    CHECK_THROWS_AS(jacobi_eval(1, {-1.0, 0}, 0.0), ParameterError);
    CHECK_THROWS_AS(validate(JacobiParams{0, -2}), ParameterError);
}

TEST_CASE("jacobi_norm examples") {
    CHECK(jacobi_norm(0, {0, 0}) == doctest::Approx(2.0));
    CHECK(jacobi_norm(1, {0, 0}) == doctest::Approx(2.0 / 3.0));
    CHECK(jacobi_norm(0, {1, 0}) == doctest::Approx(2.0));
    // integer path stays finite where Gamma(n + a + b) would overflow
    CHECK(std::isfinite(jacobi_norm(400, {3, 200})));
    CHECK(jacobi_norm(400, {3, 200}) > 0.0);
}

TEST_CASE("jacobi_reflect examples") {
    CHECK(jacobi_reflect(1, {0, 0}, 0.5) == doctest::Approx(-0.5));
    CHECK(jacobi_reflect(0, {1.5, 3}, -0.2) == 1.0);
    CHECK(jacobi_eval(3, {1, 2}, -0.4) == doctest::Approx(-jacobi_eval(3, {2, 1}, 0.4)).epsilon(1e-14));
}

TEST_CASE("gauss_legendre examples") {
    const QuadGrid g1 = gauss_legendre(1);
    REQUIRE(g1.size() == 1);
    CHECK(g1.z[0] == doctest::Approx(0.0));
    CHECK(g1.w[0] == doctest::Approx(2.0));

    const QuadGrid g2 = gauss_legendre(2);
    CHECK(g2.z[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(g2.z[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(g2.w[0] == doctest::Approx(1.0).epsilon(1e-15));

    const QuadGrid g = gauss_legendre(64);
    double moment = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        moment += g.w[i] * std::pow(g.z[i], 126);
    }
    CHECK(moment == doctest::Approx(2.0 / 127.0).epsilon(1e-13));
}

TEST_CASE("gauss_legendre invariants") {
    for (std::size_t n : {3u, 17u, 100u, 1000u}) {
        const QuadGrid g = gauss_legendre(n);
        CHECK(std::accumulate(g.w.begin(), g.w.end(), 0.0) == doctest::Approx(2.0).epsilon(1e-14));
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0) {
                CHECK(g.z[i] > g.z[i - 1]);
            }
            CHECK(g.r[i] == doctest::Approx(std::sqrt((1 + g.z[i]) / 2)).epsilon(1e-15));
        }
    }
}

TEST_CASE("orthogonality under quadrature") {
    const std::size_t nr = 40;
    const QuadGrid g = gauss_legendre(nr);
    for (const JacobiParams p : {JacobiParams{0, 0}, JacobiParams{1, 0}, JacobiParams{0, 2}, JacobiParams{2, 3}}) {
        // weight degree a + b is absorbed by the 2 nr - 1 exactness budget
        const int top = static_cast<int>(nr) - 1 - static_cast<int>((p.a + p.b) / 2) - 1;
        for (int n = 0; n <= top; n += 3) {
            for (int k = n; k <= top; k += 4) {
                double s = 0.0;
                for (std::size_t i = 0; i < nr; ++i) {
                    s += g.w[i] * std::pow(1 - g.z[i], p.a) * std::pow(1 + g.z[i], p.b) *
                         jacobi_eval(n, p, g.z[i]) * jacobi_eval(k, p, g.z[i]);
                }
                if (n == k) {
                    CHECK(s == doctest::Approx(jacobi_norm(n, p)).epsilon(1e-12));
                } else {
                    CHECK(std::abs(s) <= 1e-12 * std::sqrt(jacobi_norm(n, p) * jacobi_norm(k, p)));
                }
            }
        }
    }
}

TEST_CASE("boundary value and reflection properties") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int a = 0; a <= 4; ++a) {
        for (int n = 0; n <= 30; ++n) {
            const double binom = std::exp(std::lgamma(a + n + 1.0) - std::lgamma(n + 1.0) - std::lgamma(a + 1.0));
            CHECK(jacobi_eval(n, {double(a), 3.0}, 1.0) == doctest::Approx(binom).epsilon(1e-13));
        }
    }
    CHECK(jacobi_eval(6, {0.5, 1.0}, 1.0) ==
          doctest::Approx(std::tgamma(7.5) / (std::tgamma(7.0) * std::tgamma(1.5))).epsilon(1e-13));
    for (int trial = 0; trial < 50; ++trial) {
        const double z = u(rng);
        const JacobiParams p{std::abs(u(rng)) * 4, std::abs(u(rng)) * 4};
        const int n = trial % 12;
        const double lhs = jacobi_eval(n, p, -z);
        const double rhs = (n % 2 ? -1.0 : 1.0) * jacobi_eval(n, {p.b, p.a}, z);
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(rhs)));
        CHECK(jacobi_reflect(n, p, z) == doctest::Approx(jacobi_eval(n, p, -z)).epsilon(1e-13));
    }
}
