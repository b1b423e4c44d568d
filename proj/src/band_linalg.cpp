#include "diskspec/band_linalg.hpp"

#include "diskspec/error.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace diskspec {

namespace {

struct BandLayout {
    lapack_int n = 0;
    lapack_int kl = 0;
    lapack_int ku = 0;
    lapack_int ldab = 0;
    std::vector<double> ab;  // column-major, LAPACK band storage with room for fill-in
};

BandLayout pack(const BandedMatrix& a) {
    if (a.rows() != a.cols()) {
        throw ParameterError("band_solve needs a square matrix, got " + std::to_string(a.rows()) +
                             "x" + std::to_string(a.cols()));
    }
    BandLayout out;
    out.n = static_cast<lapack_int>(a.rows());
    out.kl = a.lower_bandwidth();
    out.ku = a.upper_bandwidth();
    out.ldab = 2 * out.kl + out.ku + 1;
    out.ab.assign(static_cast<std::size_t>(out.ldab) * static_cast<std::size_t>(out.n), 0.0);
    for (const auto& [offset, values] : a.bands()) {
        const std::size_t start = a.band_start(offset);
        for (std::size_t t = 0; t < values.size(); ++t) {
            const long i = static_cast<long>(start + t);
            const long j = i + offset;
            out.ab[static_cast<std::size_t>(j * out.ldab + out.kl + out.ku + i - j)] = values[t];
        }
    }
    return out;
}

std::vector<double> solve_columns(const BandedMatrix& a, std::vector<double> rhs, lapack_int nrhs) {
    BandLayout lay = pack(a);
    if (lay.n == 0) {
        return rhs;
    }
    std::vector<lapack_int> ipiv(static_cast<std::size_t>(lay.n));
    const lapack_int info = LAPACKE_dgbsv(LAPACK_COL_MAJOR, lay.n, lay.kl, lay.ku, nrhs, lay.ab.data(),
                                          lay.ldab, ipiv.data(), rhs.data(), lay.n);
    if (info > 0) {
        throw SingularMatrixError("banded LU: zero pivot at index " + std::to_string(info - 1),
                                  info - 1);
    }
    if (info < 0) {
        throw ParameterError("dgbsv rejected argument " + std::to_string(-info));
    }
    return rhs;
}

}  // namespace

std::vector<double> band_solve(const BandedMatrix& a, std::span<const double> b) {
    if (b.size() != a.rows()) {
        throw ParameterError("band_solve: right-hand side length differs from matrix size");
    }
    return solve_columns(a, {b.begin(), b.end()}, 1);
}

std::vector<std::complex<double>> band_solve(const BandedMatrix& a,
                                             std::span<const std::complex<double>> b) {
    const std::size_t n = b.size();
    if (n != a.rows()) {
        throw ParameterError("band_solve: right-hand side length differs from matrix size");
    }
    std::vector<double> rhs(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        rhs[i] = b[i].real();
        rhs[n + i] = b[i].imag();
    }
    const auto x = solve_columns(a, std::move(rhs), 2);
    std::vector<std::complex<double>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = {x[i], x[n + i]};
    }
    return out;
}

double band_rcond(const BandedMatrix& a) {
    BandLayout lay = pack(a);
    if (lay.n == 0) {
        return 1.0;
    }
    double anorm = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double col = 0.0;
        for (std::size_t i = j > static_cast<std::size_t>(lay.ku) ? j - lay.ku : 0;
             i < std::min(a.rows(), j + lay.kl + 1); ++i) {
            col += std::abs(a(i, j));
        }
        anorm = std::max(anorm, col);
    }
    std::vector<lapack_int> ipiv(static_cast<std::size_t>(lay.n));
    lapack_int info = LAPACKE_dgbtrf(LAPACK_COL_MAJOR, lay.n, lay.n, lay.kl, lay.ku, lay.ab.data(),
                                     lay.ldab, ipiv.data());
    if (info > 0) {
        return 0.0;
    }
    double rcond = 0.0;
    info = LAPACKE_dgbcon(LAPACK_COL_MAJOR, '1', lay.n, lay.kl, lay.ku, lay.ab.data(), lay.ldab,
                          ipiv.data(), anorm, &rcond);
    if (info != 0) {
        throw ConvergenceError("dgbcon failed");
    }
    return rcond;
}

std::size_t BlockSystem::field_offset(std::size_t field) const {
    std::size_t off = 0;
    for (std::size_t f = 0; f < field; ++f) {
        off += fields.at(f).size;
    }
    return off;
}

std::size_t BlockSystem::equation_offset(std::size_t eq) const {
    std::size_t off = 0;
    for (std::size_t e = 0; e < eq; ++e) {
        off += equations.at(e).size;
    }
    return off;
}

std::size_t BlockSystem::total_fields() const { return field_offset(fields.size()); }
std::size_t BlockSystem::total_equations() const { return equation_offset(equations.size()); }

std::vector<std::complex<double>> boundary_entries(const BasisId& basis, int order, std::size_t size) {
    const RestrictionRow row = restriction_row(basis, order, size);
    return {row.entries.begin(), row.entries.end()};
}

namespace {

std::vector<std::size_t> first_rows(const BlockSystem& sys) {
    std::vector<std::size_t> count(sys.equations.size(), 0);
    for (const BoundaryRow& b : sys.boundary) {
        if (b.eq >= sys.equations.size()) {
            throw ParameterError("boundary row targets equation " + std::to_string(b.eq) +
                                 " of " + std::to_string(sys.equations.size()));
        }
        if (b.placement == Placement::First) {
            ++count[b.eq];
        }
    }
    return count;
}

void add_blocks(const BlockSystem& sys, const std::vector<Block>& blocks,
                const std::vector<std::size_t>& shift, Eigen::MatrixXcd& out) {
    for (const Block& block : blocks) {
        const FieldSpec& field = sys.fields.at(block.field);
        const std::size_t rows = sys.equations.at(block.eq).size - shift[block.eq];
        const std::size_t r0 = sys.equation_offset(block.eq) + shift[block.eq];
        const std::size_t c0 = sys.field_offset(block.field);
        for (const Term& term : block.terms) {
            if (term.chain.empty() || term.chain.front().source != field.basis) {
                throw CompositionError("term in equation '" + sys.equations[block.eq].name +
                                       "' does not start on field '" + field.name + "' basis " +
                                       to_string(field.basis));
            }
            const BandedMatrix op = compose(term.chain, rows, field.size);
            for (const auto& [offset, values] : op.bands()) {
                const std::size_t start = op.band_start(offset);
                for (std::size_t t = 0; t < values.size(); ++t) {
                    const std::size_t i = start + t;
                    const std::size_t j = static_cast<std::size_t>(static_cast<long>(i) + offset);
                    out(static_cast<Eigen::Index>(r0 + i), static_cast<Eigen::Index>(c0 + j)) +=
                        term.scale * values[t];
                }
            }
        }
    }
}

}  // namespace

DensePencil insert_boundary_rows(const BlockSystem& sys) {
    const auto shift = first_rows(sys);
    const auto rows = static_cast<Eigen::Index>(sys.total_equations());
    const auto cols = static_cast<Eigen::Index>(sys.total_fields());
    DensePencil p{Eigen::MatrixXcd::Zero(rows, cols), Eigen::MatrixXcd::Zero(rows, cols)};
    add_blocks(sys, sys.lhs, shift, p.L);
    add_blocks(sys, sys.rhs, shift, p.R);
    std::vector<std::size_t> placed_first(sys.equations.size(), 0);
    std::vector<std::size_t> placed_last(sys.equations.size(), 0);
    for (const BoundaryRow& b : sys.boundary) {
        const std::size_t size = sys.equations[b.eq].size;
        std::size_t row = 0;
        if (b.placement == Placement::First) {
            row = placed_first[b.eq]++;
        } else {
            row = size - 1 - placed_last[b.eq]++;
        }
        if (placed_first[b.eq] + placed_last[b.eq] > size) {
            throw ParameterError("more boundary rows than rows in equation '" +
                                 sys.equations[b.eq].name + "'");
        }
        const auto r = static_cast<Eigen::Index>(sys.equation_offset(b.eq) + row);
        p.L.row(r).setZero();
        p.R.row(r).setZero();
        for (const auto& [field, entries] : b.parts) {
            const std::size_t c0 = sys.field_offset(field);
            const std::size_t len = std::min(entries.size(), sys.fields.at(field).size);
            for (std::size_t j = 0; j < len; ++j) {
                p.L(r, static_cast<Eigen::Index>(c0 + j)) = entries[j];
            }
        }
    }
    return p;
}

EigenResult generalized_eig(const DensePencil& pencil, bool want_vectors,
                            const std::function<bool(std::complex<double>, std::complex<double>)>& less,
                            double infinite_threshold) {
    const Eigen::Index n = pencil.L.rows();
    if (pencil.L.cols() != n || pencil.R.rows() != n || pencil.R.cols() != n) {
        throw ParameterError("generalized_eig needs square matrices of equal size");
    }
    const bool real = pencil.L.imag().isZero(0.0) && pencil.R.imag().isZero(0.0);
    std::vector<std::complex<double>> raw(static_cast<std::size_t>(n));
    std::vector<bool> finite(static_cast<std::size_t>(n), false);
    Eigen::MatrixXcd raw_vectors;
    const char jobvr = want_vectors ? 'V' : 'N';
    lapack_int info = 0;
    if (real) {
        Eigen::MatrixXd a = pencil.L.real();
        Eigen::MatrixXd b = pencil.R.real();
        std::vector<double> ar(static_cast<std::size_t>(n)), ai(ar.size()), beta(ar.size());
        Eigen::MatrixXd vr(want_vectors ? n : 1, want_vectors ? n : 1);
        double dummy = 0.0;
        info = LAPACKE_dggev(LAPACK_COL_MAJOR, 'N', jobvr, static_cast<lapack_int>(n), a.data(),
                             static_cast<lapack_int>(n), b.data(), static_cast<lapack_int>(n), ar.data(),
                             ai.data(), beta.data(), &dummy, 1, vr.data(),
                             static_cast<lapack_int>(vr.rows()));
        if (info == 0) {
            for (Eigen::Index j = 0; j < n; ++j) {
                const auto u = static_cast<std::size_t>(j);
                if (beta[u] != 0.0) {
                    raw[u] = std::complex<double>(ar[u], ai[u]) / beta[u];
                    finite[u] = std::abs(raw[u]) <= infinite_threshold;
                }
            }
            if (want_vectors) {
                raw_vectors = vr.cast<std::complex<double>>();
                for (Eigen::Index j = 0; j + 1 < n; ++j) {
                    if (ai[static_cast<std::size_t>(j)] > 0.0) {
                        const Eigen::VectorXd re = vr.col(j);
                        const Eigen::VectorXd im = vr.col(j + 1);
                        raw_vectors.col(j) = re.cast<std::complex<double>>() +
                                             std::complex<double>(0, 1) * im.cast<std::complex<double>>();
                        raw_vectors.col(j + 1) = raw_vectors.col(j).conjugate();
                        ++j;
                    }
                }
            }
        }
    } else {
        Eigen::MatrixXcd a = pencil.L;
        Eigen::MatrixXcd b = pencil.R;
        std::vector<lapack_complex_double> alpha(static_cast<std::size_t>(n)), beta(alpha.size());
        Eigen::MatrixXcd vr(want_vectors ? n : 1, want_vectors ? n : 1);
        lapack_complex_double dummy{};
        info = LAPACKE_zggev(LAPACK_COL_MAJOR, 'N', jobvr, static_cast<lapack_int>(n),
                             a.data(),
                             static_cast<lapack_int>(n),
                             b.data(),
                             static_cast<lapack_int>(n), alpha.data(), beta.data(), &dummy, 1,
                             vr.data(),
                             static_cast<lapack_int>(vr.rows()));
        if (info == 0) {
            for (Eigen::Index j = 0; j < n; ++j) {
                const auto u = static_cast<std::size_t>(j);
                const std::complex<double> al = alpha[u];
                const std::complex<double> be = beta[u];
                if (be != 0.0) {
                    raw[u] = al / be;
                    finite[u] = std::abs(raw[u]) <= infinite_threshold;
                }
            }
            if (want_vectors) {
                raw_vectors = vr;
            }
        }
    }
    if (info != 0) {
        throw ConvergenceError("generalized Schur reduction failed (info " + std::to_string(info) +
                               ") for a " + std::to_string(n) + "x" + std::to_string(n) +
                               " pencil; L norm " + std::to_string(pencil.L.norm()) +
                               ", R norm " + std::to_string(pencil.R.norm()));
    }
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < raw.size(); ++j) {
        if (finite[j]) {
            order.push_back(j);
        }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return less(raw[x], raw[y]); });
    EigenResult result;
    result.infinite = raw.size() - order.size();
    for (std::size_t j : order) {
        result.values.push_back(raw[j]);
    }
    if (want_vectors) {
        result.vectors.resize(n, static_cast<Eigen::Index>(order.size()));
        for (std::size_t c = 0; c < order.size(); ++c) {
            Eigen::VectorXcd v = raw_vectors.col(static_cast<Eigen::Index>(order[c]));
            v /= v.norm();
            result.vectors.col(static_cast<Eigen::Index>(c)) = v;
            const Eigen::VectorXcd lx = pencil.L * v;
            const Eigen::VectorXcd rx = pencil.R * v;
            const double scale = std::max(lx.norm(), std::abs(result.values[c]) * rx.norm());
            result.residuals.push_back(scale == 0.0 ? 0.0 : (lx - result.values[c] * rx).norm() / scale);
        }
    }
    return result;
}

BlockSystem galerkin_recombine(const BlockSystem& sys, std::span<const std::size_t> fields,
                               Recombination kind) {
    BlockSystem out = sys;
    for (std::size_t f : fields) {
        FieldSpec& spec = out.fields.at(f);
        const BasisId fbasis = spec.basis;
        if (kind == Recombination::Neumann && fbasis.m == 0) {
            throw GaugeError("Neumann recombination cannot fix the n=0 mode at m=0; a gauge "
                             "condition is required for field '" + spec.name + "'");
        }
        const BasisId gbasis{fbasis.k + 1, fbasis.m};
        std::vector<OperatorTag> prefix{tag(OpKind::Recombine, gbasis)};
        if (kind == Recombination::Neumann) {
            prefix.push_back(tag(OpKind::LambdaInv, fbasis));
        }
        for (auto* blocks : {&out.lhs, &out.rhs}) {
            for (Block& block : *blocks) {
                if (block.field != f) {
                    continue;
                }
                for (Term& term : block.terms) {
                    term.chain.insert(term.chain.begin(), prefix.begin(), prefix.end());
                }
            }
        }
        spec.basis = gbasis;
        for (BoundaryRow& b : out.boundary) {
            const bool touches = std::any_of(b.parts.begin(), b.parts.end(),
                                             [f](const auto& part) { return part.first == f; });
            if (!touches) {
                continue;
            }
            if (b.parts.size() != 1) {
                throw ParameterError("galerkin_recombine: boundary row couples several fields");
            }
            std::vector<std::complex<double>> unit(spec.size, 0.0);
            if (!unit.empty()) {
                unit[0] = 1.0;
            }
            b.parts[0].second = std::move(unit);
            b.placement = Placement::First;
        }
    }
    return out;
}

BandedMatrix assemble_banded(const BlockSystem& sys) {
    if (sys.fields.size() != 1 || sys.equations.size() != 1) {
        throw ParameterError("assemble_banded handles one field and one equation");
    }
    const FieldSpec& field = sys.fields[0];
    const std::size_t n = sys.equations[0].size;
    if (field.size != n) {
        throw ParameterError("assemble_banded needs a square system");
    }
    const auto shift = first_rows(sys);
    if (shift[0] != sys.boundary.size()) {
        throw ParameterError("assemble_banded needs first-placed boundary rows only");
    }
    const std::size_t nb = shift[0];
    BandedMatrix body(n - nb, n, field.basis, field.basis);
    bool have = false;
    for (const Block& block : sys.lhs) {
        for (const Term& term : block.terms) {
            if (term.scale.imag() != 0.0) {
                throw ParameterError("assemble_banded needs real coefficients");
            }
            BandedMatrix op = term.scale.real() * compose(term.chain, n - nb, n);
            if (!have) {
                body = op;
                have = true;
            } else {
                body = body + op;
            }
        }
    }
    const BasisId codom = have ? body.codomain() : field.basis;
    BandedMatrix out(n, n, field.basis, codom);
    for (const auto& [offset, values] : body.bands()) {
        const std::size_t start = body.band_start(offset);
        for (std::size_t t = 0; t < values.size(); ++t) {
            const std::size_t i = start + t;
            out.set(i + nb, static_cast<std::size_t>(static_cast<long>(i) + offset), values[t]);
        }
    }
    for (std::size_t r = 0; r < nb; ++r) {
        const auto& entries = sys.boundary[r].parts.at(0).second;
        for (std::size_t j = 0; j < std::min(entries.size(), n); ++j) {
            if (entries[j] != 0.0) {
                out.set(r, j, entries[j].real());
            }
        }
    }
    out.prune();
    return out;
}

}  // namespace diskspec
