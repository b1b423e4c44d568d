#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diskspec/disk_basis.hpp"
#include "diskspec/error.hpp"
#include "diskspec/jacobi.hpp"

#include <cmath>

using namespace diskspec;

TEST_CASE("q_eval examples") {
    CHECK(q_eval({0, 0}, 0, 0.7) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(q_eval({0, 3}, 0, 0.0) == 0.0);
    CHECK(q_eval({0, 0}, 1, 1.0) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
    CHECK_THROWS_AS(q_eval({-1, 0}, 0, 0.5), DomainError);
}

TEST_CASE("restriction_row examples") {
    CHECK(restriction_row({0, 0}, 0, 1).entries[0] == doctest::Approx(std::sqrt(2.0)));
    CHECK(restriction_row({0, 0}, 1, 1).entries[0] == 0.0);
    const auto row = restriction_row({1, 2}, 0, 2);
    CHECK(row.entries[1] == doctest::Approx(std::sqrt(96.0)).epsilon(1e-15));
    CHECK(row.entries[1] == doctest::Approx(q_eval({1, 2}, 1, 1.0)).epsilon(1e-13));
}

TEST_CASE("lambda_diagonal examples") {
    CHECK(lambda_entry({0, 0}, 0) == 0.0);
    CHECK(lambda_entry({0, 1}, 0) == 1.0);
    CHECK(lambda_entry({2, 3}, 2) == doctest::Approx(41.0 / 3.0));
    const BandedMatrix l = lambda_diagonal({2, 3}, 5);
    CHECK(l(2, 2) == doctest::Approx(41.0 / 3.0));
    CHECK(l.upper_bandwidth() == 0);
    CHECK(l.lower_bandwidth() == 0);
}

TEST_CASE("orthonormality") {
    const std::size_t nr = 48;
    const QuadGrid g = gauss_legendre(nr);
    for (const BasisId b : {BasisId{0, 0}, BasisId{1, 2}, BasisId{3, 7}, BasisId{0, 20}}) {
        const std::size_t count = 20;
        std::vector<std::vector<double>> q(nr);
        for (std::size_t i = 0; i < nr; ++i) {
            q[i] = q_eval_all(b, count, g.r[i]);
        }
        double worst = 0.0;
        for (std::size_t n = 0; n < count; ++n) {
            for (std::size_t k = 0; k < count; ++k) {
                double s = 0.0;
                for (std::size_t i = 0; i < nr; ++i) {
                    // r dr = dz / 4
                    s += 0.25 * g.w[i] * std::pow(1 - g.r[i] * g.r[i], b.k) * q[i][n] * q[i][k];
                }
                worst = std::max(worst, std::abs(s - (n == k ? 1.0 : 0.0)));
            }
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("q_eval_all agrees with q_eval") {
    for (const BasisId b : {BasisId{0, 0}, BasisId{2, 5}, BasisId{1, 40}}) {
        for (double r : {0.0, 0.1, 0.5, 0.93, 1.0}) {
            const auto all = q_eval_all(b, 25, r);
            for (int n = 0; n < 25; ++n) {
                CHECK(std::abs(all[n] - q_eval(b, n, r)) <= 1e-12 * std::max(1.0, std::abs(all[n])));
            }
        }
    }
}

TEST_CASE("regularity slope near the origin") {
    for (int m : {1, 5, 50}) {
        const BasisId b{0, m};
        const double lo = std::log(std::abs(q_eval(b, 0, 1e-3)));
        const double hi = std::log(std::abs(q_eval(b, 0, 1e-1)));
        const double slope = (hi - lo) / std::log(100.0);
        CHECK(slope == doctest::Approx(m).epsilon(0.01));
    }
    CHECK(std::abs(q_eval({0, 50}, 0, 1e-3)) < 1e-120);
    CHECK(std::abs(q_eval({0, 50}, 0, 1e-3)) > 0.0);
}

TEST_CASE("boundary consistency and derivative restriction") {
    for (const BasisId b : {BasisId{0, 0}, BasisId{0, 3}, BasisId{1, 1}, BasisId{2, 4}}) {
        const auto row = restriction_row(b, 0, 12);
        const auto drow = restriction_row(b, 1, 12);
        for (int n = 0; n < 12; ++n) {
            CHECK(row.entries[n] > 0.0);
            CHECK(row.entries[n] == doctest::Approx(q_eval(b, n, 1.0)).epsilon(1e-13));
            // one-sided second-order difference ending at r = 1
            const double h = 1e-6;
            const double fd = (3 * q_eval(b, n, 1.0) - 4 * q_eval(b, n, 1.0 - h) + q_eval(b, n, 1.0 - 2 * h)) / (2 * h);
            const double scale = std::max(std::abs(drow.entries[n]), std::abs(row.entries[n]));
            CHECK(std::abs(fd - drow.entries[n]) <= 1e-6 * scale);
        }
    }
}
