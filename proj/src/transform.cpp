#include "diskspec/transform.hpp"

#include "diskspec/disk_basis.hpp"
#include "diskspec/error.hpp"

#include <cmath>
#include <iomanip>
#include <mutex>
#include <numbers>
#include <ostream>
#include <tuple>

namespace diskspec {

std::size_t n_max(const BasisId& basis, std::size_t nr) {
    validate(basis);
    const std::size_t half = static_cast<std::size_t>((basis.k + basis.m) / 2);
    if (nr <= half) {
        throw ParameterError("basis " + to_string(basis) + " needs N_r >= " +
                             std::to_string(half + 1) + ", got " + std::to_string(nr));
    }
    return nr - 1 - half;
}

std::vector<double> quadrature_weight_factor(int k, const QuadGrid& grid) {
    if (k < 0) {
        throw DomainError("quadrature_weight_factor needs k >= 0");
    }
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double s = 1.0 - grid.r[i] * grid.r[i];
        out[i] = std::pow(s, k) * grid.w[i];
    }
    return out;
}

std::size_t total_modes(std::size_t nr, std::size_t ntheta) {
    if (nr == 0) {
        throw ParameterError("total_modes needs N_r >= 1");
    }
    const long mmax = static_cast<long>(ntheta / 2);
    std::size_t total = 0;
    for (long m = -mmax; m <= mmax; ++m) {
        const std::size_t half = static_cast<std::size_t>(std::labs(m) / 2);
        if (nr > half) {
            total += nr - half;
        }
    }
    return total;
}

RadialTransform::RadialTransform(BasisId basis, const QuadGrid& grid)
    : basis_(basis), nr_(grid.size()), count_(n_max(basis, grid.size()) + 1) {
    synth_.resize(nr_ * count_);
    analysis_.resize(count_ * nr_);
    const auto weights = quadrature_weight_factor(basis.k, grid);
    for (std::size_t i = 0; i < nr_; ++i) {
        const auto q = q_eval_all(basis, count_, grid.r[i]);
        for (std::size_t n = 0; n < count_; ++n) {
            synth_[i * count_ + n] = q[n];
            // dz = 4 r dr turns the Legendre weights into the disk measure.
            analysis_[n * nr_ + i] = 0.25 * weights[i] * q[n];
        }
    }
}

std::vector<std::complex<double>> RadialTransform::forward(
    std::span<const std::complex<double>> values, Exec exec) const {
    if (values.size() != nr_) {
        throw ParameterError("forward transform: expected " + std::to_string(nr_) +
                             " grid values, got " + std::to_string(values.size()));
    }
    std::vector<std::complex<double>> out(count_);
    dense_matvec(exec, analysis_, count_, nr_, values, out);
    return out;
}

std::vector<double> RadialTransform::forward(std::span<const double> values, Exec exec) const {
    if (values.size() != nr_) {
        throw ParameterError("forward transform: expected " + std::to_string(nr_) +
                             " grid values, got " + std::to_string(values.size()));
    }
    std::vector<double> out(count_);
    dense_matvec(exec, analysis_, count_, nr_, values, out);
    return out;
}

std::vector<std::complex<double>> RadialTransform::backward(
    std::span<const std::complex<double>> coeffs, Exec exec) const {
    if (coeffs.size() > count_) {
        throw ParameterError("backward transform: more coefficients than n_max + 1");
    }
    std::vector<std::complex<double>> padded(coeffs.begin(), coeffs.end());
    padded.resize(count_);
    std::vector<std::complex<double>> out(nr_);
    dense_matvec(exec, synth_, nr_, count_, padded, out);
    return out;
}

std::vector<double> RadialTransform::backward(std::span<const double> coeffs, Exec exec) const {
    if (coeffs.size() > count_) {
        throw ParameterError("backward transform: more coefficients than n_max + 1");
    }
    std::vector<double> padded(coeffs.begin(), coeffs.end());
    padded.resize(count_);
    std::vector<double> out(nr_);
    dense_matvec(exec, synth_, nr_, count_, padded, out);
    return out;
}

std::shared_ptr<const RadialTransform> radial_transform(BasisId basis, std::size_t nr) {
    static std::shared_mutex mutex;
    static std::map<std::tuple<int, int, std::size_t>, std::shared_ptr<const RadialTransform>> cache;
    static std::map<std::size_t, QuadGrid> grids;
    const auto key = std::make_tuple(basis.k, basis.m, nr);
    {
        std::shared_lock lock(mutex);
        if (const auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }
    std::unique_lock lock(mutex);
    if (const auto it = cache.find(key); it != cache.end()) {
        return it->second;
    }
    auto grid_it = grids.find(nr);
    if (grid_it == grids.end()) {
        grid_it = grids.emplace(nr, gauss_legendre(nr)).first;
    }
    auto built = std::make_shared<const RadialTransform>(basis, grid_it->second);
    cache.emplace(key, built);
    return built;
}

RadialCoeffs forward(const BasisId& basis, std::span<const double> grid_values, const QuadGrid& grid) {
    const RadialTransform t(basis, grid);
    const auto real = t.forward(grid_values);
    return RadialCoeffs{basis, {real.begin(), real.end()}};
}

std::vector<std::complex<double>> backward(const RadialCoeffs& coeffs, const QuadGrid& grid) {
    const RadialTransform t(coeffs.basis, grid);
    return t.backward(coeffs.values);
}

DiskField::DiskField(int m_max, int k, std::size_t nr) : m_max_(m_max), k_(k), nr_(nr) {
    if (m_max < 0 || k < 0) {
        throw ParameterError("DiskField needs m_max >= 0 and k >= 0");
    }
    for (int m = -m_max; m <= m_max; ++m) {
        const BasisId basis{k, std::abs(m)};
        modes_.push_back(RadialCoeffs{basis, std::vector<std::complex<double>>(n_max(basis, nr) + 1)});
    }
}

RadialCoeffs& DiskField::mode(int m) {
    if (std::abs(m) > m_max_) {
        throw ParameterError("Fourier mode " + std::to_string(m) + " outside field");
    }
    return modes_[static_cast<std::size_t>(m + m_max_)];
}

const RadialCoeffs& DiskField::mode(int m) const {
    return const_cast<DiskField*>(this)->mode(m);
}

DiskField DiskField::from_grid(const std::function<double(double, double)>& f, int m_max, int k,
                               std::size_t nr, std::size_t ntheta, Exec exec) {
    ntheta = std::max<std::size_t>(ntheta, 2 * static_cast<std::size_t>(m_max) + 1);
    DiskField field(m_max, k, nr);
    const QuadGrid grid = gauss_legendre(nr);
    std::vector<double> samples(nr * ntheta);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < ntheta; ++j) {
            samples[i * ntheta + j] = f(grid.r[i], 2.0 * std::numbers::pi * j / ntheta);
        }
    }
    const long count = 2L * m_max + 1;
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (long idx = 0; idx < count; ++idx) {
        const int m = static_cast<int>(idx) - m_max;
        std::vector<std::complex<double>> radial(nr);
        for (std::size_t i = 0; i < nr; ++i) {
            std::complex<double> sum{};
            for (std::size_t j = 0; j < ntheta; ++j) {
                sum += samples[i * ntheta + j] * std::polar(1.0, -m * 2.0 * std::numbers::pi * j / ntheta);
            }
            radial[i] = sum / static_cast<double>(ntheta);
        }
        field.mode(m).values = radial_transform({k, std::abs(m)}, nr)->forward(radial);
    }
    return field;
}

std::vector<std::complex<double>> DiskField::to_grid(const QuadGrid& grid, std::size_t ntheta,
                                                     Exec exec) const {
    if (grid.size() != nr_) {
        throw ParameterError("DiskField::to_grid: grid size differs from N_r");
    }
    std::vector<std::vector<std::complex<double>>> radial(modes_.size());
    const long count = static_cast<long>(modes_.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (long idx = 0; idx < count; ++idx) {
        const RadialCoeffs& c = modes_[static_cast<std::size_t>(idx)];
        radial[static_cast<std::size_t>(idx)] = RadialTransform(c.basis, grid).backward(c.values);
    }
    std::vector<std::complex<double>> out(nr_ * ntheta);
    for (std::size_t j = 0; j < ntheta; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / ntheta;
        for (int m = -m_max_; m <= m_max_; ++m) {
            const auto phase = std::polar(1.0, m * theta);
            const auto& values = radial[static_cast<std::size_t>(m + m_max_)];
            for (std::size_t i = 0; i < nr_; ++i) {
                out[i * ntheta + j] += values[i] * phase;
            }
        }
    }
    return out;
}

void DiskField::write_coeffs_csv(std::ostream& os) const {
    const auto old = os.precision();
    os << "m,n,real,imag\n" << std::setprecision(17);
    for (int m = -m_max_; m <= m_max_; ++m) {
        const auto& v = mode(m).values;
        for (std::size_t n = 0; n < v.size(); ++n) {
            os << m << ',' << n << ',' << v[n].real() << ',' << v[n].imag() << '\n';
        }
    }
    os.precision(old);
}

void write_grid_csv(std::ostream& os, const QuadGrid& grid, std::size_t ntheta,
                    std::span<const std::complex<double>> values) {
    if (values.size() != grid.size() * ntheta) {
        throw ParameterError("write_grid_csv: value count does not match the grid");
    }
    const auto old = os.precision();
    os << "r,theta,value\n" << std::setprecision(17);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < ntheta; ++j) {
            os << grid.r[i] << ',' << 2.0 * std::numbers::pi * j / ntheta << ','
               << values[i * ntheta + j].real() << '\n';
        }
    }
    os.precision(old);
}

}  // namespace diskspec
