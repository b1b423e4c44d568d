#pragma once

#include "diskspec/basis_id.hpp"

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

namespace diskspec {

/// Rectangular operator between two radial spaces, stored by diagonals.
///
/// Band offset d = col - row, so superdiagonals are positive. Band d holds the
/// entries (i, i+d) for every row i with 0 <= i+d < cols, ordered by row.
class BandedMatrix {
public:
    BandedMatrix() = default;
    BandedMatrix(std::size_t rows, std::size_t cols, BasisId domain, BasisId codomain);

    static BandedMatrix identity(std::size_t n, BasisId basis);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    BasisId domain() const noexcept { return domain_; }
    BasisId codomain() const noexcept { return codomain_; }

    /// Entry (i, j); zero outside the stored bands.
    double operator()(std::size_t i, std::size_t j) const;

    /// Writes entry (i, j), allocating its band if needed.
    void set(std::size_t i, std::size_t j, double value);
    void add_to(std::size_t i, std::size_t j, double value);

    const std::map<int, std::vector<double>>& bands() const noexcept { return bands_; }

    /// First row of band d inside the rectangle.
    std::size_t band_start(int offset) const noexcept;
    /// Number of entries of band d inside the rectangle.
    std::size_t band_length(int offset) const noexcept;

    /// Largest superdiagonal offset with a stored band (0 if none).
    int upper_bandwidth() const noexcept;
    /// Largest subdiagonal distance with a stored band (0 if none).
    int lower_bandwidth() const noexcept;

    /// Removes bands whose entries are all exactly zero.
    void prune();

    /// Leading rows x cols block, same labels.
    BandedMatrix leading_block(std::size_t rows, std::size_t cols) const;

    BandedMatrix transpose() const;

    std::vector<double> apply(std::span<const double> x) const;
    std::vector<std::complex<double>> apply(std::span<const std::complex<double>> x) const;

    /// Row-major dense copy.
    std::vector<double> to_dense() const;

    /// Debug dump: header `row,col,value`, 17 significant digits.
    void write_csv(std::ostream& os) const;

    BandedMatrix& operator*=(double s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    BasisId domain_{};
    BasisId codomain_{};
    std::map<int, std::vector<double>> bands_;

    std::vector<double>& band(int offset);
};

/// Product a * b. Requires a.domain() == b.codomain() and a.cols() == b.rows().
BandedMatrix multiply(const BandedMatrix& a, const BandedMatrix& b);

/// sa * a + sb * b. Both operands must share shape and labels.
BandedMatrix linear_combination(double sa, const BandedMatrix& a, double sb, const BandedMatrix& b);

BandedMatrix operator+(const BandedMatrix& a, const BandedMatrix& b);
BandedMatrix operator-(const BandedMatrix& a, const BandedMatrix& b);
BandedMatrix operator*(double s, const BandedMatrix& a);

/// Max |a_ij - b_ij| over rows < rows-skip_rows and cols < cols-skip_cols.
double max_abs_diff(const BandedMatrix& a, const BandedMatrix& b, std::size_t skip_rows = 0,
                    std::size_t skip_cols = 0);

}  // namespace diskspec
