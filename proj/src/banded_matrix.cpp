#include "diskspec/banded_matrix.hpp"

#include "diskspec/error.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

namespace diskspec {

namespace {

template <typename T>
std::vector<T> apply_impl(const BandedMatrix& a, std::span<const T> x) {
    if (x.size() != a.cols()) {
        throw ParameterError("banded apply: vector length " + std::to_string(x.size()) +
                             " does not match " + std::to_string(a.cols()) + " columns");
    }
    std::vector<T> y(a.rows(), T{});
    for (const auto& [offset, values] : a.bands()) {
        const std::size_t start = a.band_start(offset);
        for (std::size_t t = 0; t < values.size(); ++t) {
            const std::size_t i = start + t;
            y[i] += values[t] * x[static_cast<std::size_t>(static_cast<long>(i) + offset)];
        }
    }
    return y;
}

}  // namespace

BandedMatrix::BandedMatrix(std::size_t rows, std::size_t cols, BasisId domain, BasisId codomain)
    : rows_(rows), cols_(cols), domain_(domain), codomain_(codomain) {}

BandedMatrix BandedMatrix::identity(std::size_t n, BasisId basis) {
    BandedMatrix id(n, n, basis, basis);
    if (n > 0) {
        id.band(0).assign(n, 1.0);
    }
    return id;
}

std::size_t BandedMatrix::band_start(int offset) const noexcept {
    return offset >= 0 ? 0 : static_cast<std::size_t>(-offset);
}

std::size_t BandedMatrix::band_length(int offset) const noexcept {
    const long start = offset >= 0 ? 0 : -offset;
    const long stop = std::min(static_cast<long>(rows_), static_cast<long>(cols_) - offset);
    return stop > start ? static_cast<std::size_t>(stop - start) : 0;
}

std::vector<double>& BandedMatrix::band(int offset) {
    auto it = bands_.find(offset);
    if (it == bands_.end()) {
        it = bands_.emplace(offset, std::vector<double>(band_length(offset), 0.0)).first;
    }
    return it->second;
}

double BandedMatrix::operator()(std::size_t i, std::size_t j) const {
    const int offset = static_cast<int>(static_cast<long>(j) - static_cast<long>(i));
    const auto it = bands_.find(offset);
    if (it == bands_.end() || i >= rows_ || j >= cols_) {
        return 0.0;
    }
    return it->second[i - band_start(offset)];
}

void BandedMatrix::set(std::size_t i, std::size_t j, double value) {
    if (i >= rows_ || j >= cols_) {
        throw ParameterError("banded set: entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    const int offset = static_cast<int>(static_cast<long>(j) - static_cast<long>(i));
    band(offset)[i - band_start(offset)] = value;
}

void BandedMatrix::add_to(std::size_t i, std::size_t j, double value) {
    if (i >= rows_ || j >= cols_) {
        throw ParameterError("banded add_to: entry outside the rectangle");
    }
    const int offset = static_cast<int>(static_cast<long>(j) - static_cast<long>(i));
    band(offset)[i - band_start(offset)] += value;
}

int BandedMatrix::upper_bandwidth() const noexcept {
    return bands_.empty() ? 0 : std::max(0, bands_.rbegin()->first);
}

int BandedMatrix::lower_bandwidth() const noexcept {
    return bands_.empty() ? 0 : std::max(0, -bands_.begin()->first);
}

void BandedMatrix::prune() {
    std::erase_if(bands_, [](const auto& kv) {
        return std::all_of(kv.second.begin(), kv.second.end(), [](double v) { return v == 0.0; });
    });
}

BandedMatrix BandedMatrix::leading_block(std::size_t rows, std::size_t cols) const {
    if (rows > rows_ || cols > cols_) {
        throw ParameterError("leading_block larger than the matrix");
    }
    BandedMatrix out(rows, cols, domain_, codomain_);
    for (const auto& [offset, values] : bands_) {
        const std::size_t len = out.band_length(offset);
        if (len == 0) {
            continue;
        }
        out.bands_.emplace(offset, std::vector<double>(values.begin(), values.begin() + len));
    }
    return out;
}

BandedMatrix BandedMatrix::transpose() const {
    BandedMatrix out(cols_, rows_, codomain_, domain_);
    for (const auto& [offset, values] : bands_) {
        // Entry (i, i+d) becomes (i+d, i); both bands list entries in the same order.
        out.bands_.emplace(-offset, values);
    }
    return out;
}

std::vector<double> BandedMatrix::apply(std::span<const double> x) const {
    return apply_impl<double>(*this, x);
}

std::vector<std::complex<double>> BandedMatrix::apply(std::span<const std::complex<double>> x) const {
    return apply_impl<std::complex<double>>(*this, x);
}

std::vector<double> BandedMatrix::to_dense() const {
    std::vector<double> dense(rows_ * cols_, 0.0);
    for (const auto& [offset, values] : bands_) {
        const std::size_t start = band_start(offset);
        for (std::size_t t = 0; t < values.size(); ++t) {
            const std::size_t i = start + t;
            dense[i * cols_ + static_cast<std::size_t>(static_cast<long>(i) + offset)] = values[t];
        }
    }
    return dense;
}

void BandedMatrix::write_csv(std::ostream& os) const {
    const auto old_precision = os.precision();
    os << "row,col,value\n" << std::setprecision(17);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [offset, values] : bands_) {
            const long j = static_cast<long>(i) + offset;
            if (j < 0 || j >= static_cast<long>(cols_)) {
                continue;
            }
            os << i << ',' << j << ',' << values[i - band_start(offset)] << '\n';
        }
    }
    os.precision(old_precision);
}

BandedMatrix& BandedMatrix::operator*=(double s) {
    for (auto& [offset, values] : bands_) {
        for (double& v : values) {
            v *= s;
        }
    }
    return *this;
}

BandedMatrix multiply(const BandedMatrix& a, const BandedMatrix& b) {
    if (a.domain() != b.codomain()) {
        throw CompositionError("cannot compose: left operator acts on " + to_string(a.domain()) +
                               " but right operator produces " + to_string(b.codomain()));
    }
    if (a.cols() != b.rows()) {
        throw CompositionError("cannot compose: inner dimensions " + std::to_string(a.cols()) +
                               " and " + std::to_string(b.rows()) + " differ");
    }
    BandedMatrix out(a.rows(), b.cols(), b.domain(), a.codomain());
    const long bcols = static_cast<long>(b.cols());
    for (const auto& [da, va] : a.bands()) {
        const std::size_t start = a.band_start(da);
        for (std::size_t t = 0; t < va.size(); ++t) {
            const std::size_t i = start + t;
            const std::size_t l = static_cast<std::size_t>(static_cast<long>(i) + da);
            for (const auto& [db, vb] : b.bands()) {
                const long j = static_cast<long>(l) + db;
                if (j < 0 || j >= bcols) {
                    continue;
                }
                out.add_to(i, static_cast<std::size_t>(j), va[t] * vb[l - b.band_start(db)]);
            }
        }
    }
    return out;
}

BandedMatrix linear_combination(double sa, const BandedMatrix& a, double sb, const BandedMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ParameterError("linear_combination: shapes differ");
    }
    if (a.domain() != b.domain() || a.codomain() != b.codomain()) {
        throw CompositionError("cannot add operators " + to_string(a.domain()) + "->" +
                               to_string(a.codomain()) + " and " + to_string(b.domain()) + "->" +
                               to_string(b.codomain()));
    }
    BandedMatrix out(a.rows(), a.cols(), a.domain(), a.codomain());
    for (const auto& [offset, values] : a.bands()) {
        const std::size_t start = a.band_start(offset);
        for (std::size_t t = 0; t < values.size(); ++t) {
            out.add_to(start + t, static_cast<std::size_t>(static_cast<long>(start + t) + offset),
                       sa * values[t]);
        }
    }
    for (const auto& [offset, values] : b.bands()) {
        const std::size_t start = b.band_start(offset);
        for (std::size_t t = 0; t < values.size(); ++t) {
            out.add_to(start + t, static_cast<std::size_t>(static_cast<long>(start + t) + offset),
                       sb * values[t]);
        }
    }
    return out;
}

BandedMatrix operator+(const BandedMatrix& a, const BandedMatrix& b) {
    return linear_combination(1.0, a, 1.0, b);
}

BandedMatrix operator-(const BandedMatrix& a, const BandedMatrix& b) {
    return linear_combination(1.0, a, -1.0, b);
}

BandedMatrix operator*(double s, const BandedMatrix& a) {
    BandedMatrix out = a;
    out *= s;
    return out;
}

double max_abs_diff(const BandedMatrix& a, const BandedMatrix& b, std::size_t skip_rows,
                    std::size_t skip_cols) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ParameterError("max_abs_diff: shapes differ");
    }
    const std::size_t rows = a.rows() > skip_rows ? a.rows() - skip_rows : 0;
    const std::size_t cols = a.cols() > skip_cols ? a.cols() - skip_cols : 0;
    int lo = 0;
    int hi = 0;
    for (const auto* m : {&a, &b}) {
        lo = std::max(lo, m->lower_bandwidth());
        hi = std::max(hi, m->upper_bandwidth());
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        const std::size_t j0 = i > static_cast<std::size_t>(lo) ? i - lo : 0;
        const std::size_t j1 = std::min(cols, i + hi + 1);
        for (std::size_t j = j0; j < j1; ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

}  // namespace diskspec
