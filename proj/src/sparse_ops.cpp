#include "diskspec/sparse_ops.hpp"

#include "diskspec/disk_basis.hpp"
#include "diskspec/error.hpp"
#include "diskspec/ncc.hpp"

#include <algorithm>
#include <cmath>

namespace diskspec {

namespace {

// sqrt(num / den) that returns 0 when the numerator vanishes, so the
// n = k = m = 0 corner never evaluates 0/0.
double ratio_sqrt(double num, double den) {
    return num == 0.0 ? 0.0 : std::sqrt(num / den);
}

// Fills the rows x cols block column by column. entry(n) returns the values
// for rows n-1, n, n+1 of column n.
struct ColumnEntries {
    double above = 0.0;
    double diag = 0.0;
    double below = 0.0;
};

template <typename F>
BandedMatrix fill(BasisId src, BasisId dst, std::size_t rows, std::size_t cols, F entry) {
    BandedMatrix out(rows, cols, src, dst);
    for (std::size_t j = 0; j < cols; ++j) {
        const ColumnEntries e = entry(static_cast<double>(j));
        if (j >= 1 && j - 1 < rows && e.above != 0.0) {
            out.set(j - 1, j, e.above);
        }
        if (j < rows && e.diag != 0.0) {
            out.set(j, j, e.diag);
        }
        if (j + 1 < rows && e.below != 0.0) {
            out.set(j + 1, j, e.below);
        }
    }
    return out;
}

void require_k(BasisId src, const char* name) {
    validate(src);
    if (src.k < 1) {
        throw DomainError(std::string(name) + " needs k >= 1, got " + to_string(src));
    }
}

}  // namespace

BandedMatrix d_plus(BasisId src, std::size_t rows, std::size_t cols) {
    validate(src);
    const double k = src.k;
    const double m = src.m;
    return fill(src, {src.k + 1, src.m + 1}, rows, cols, [&](double n) {
        return ColumnEntries{std::sqrt(2.0 * n * (n + k + m + 1.0)), 0.0, 0.0};
    });
}

BandedMatrix d_minus(BasisId src, std::size_t rows, std::size_t cols) {
    validate(src);
    if (src.m == 0) {
        return d_plus(src, rows, cols);
    }
    const double k = src.k;
    const double m = src.m;
    return fill(src, {src.k + 1, src.m - 1}, rows, cols, [&](double n) {
        return ColumnEntries{0.0, std::sqrt(2.0 * (n + k + 1.0) * (n + m)), 0.0};
    });
}

BandedMatrix r_plus(BasisId src, std::size_t rows, std::size_t cols) {
    validate(src);
    const double k = src.k;
    const double m = src.m;
    return fill(src, {src.k, src.m + 1}, rows, cols, [&](double n) {
        const double s = 2.0 * n + k + m;
        return ColumnEntries{ratio_sqrt(n * (n + k), s * (s + 1.0)),
                             ratio_sqrt((n + m + 1.0) * (n + k + m + 1.0), (s + 1.0) * (s + 2.0)),
                             0.0};
    });
}

BandedMatrix r_minus(BasisId src, std::size_t rows, std::size_t cols) {
    validate(src);
    if (src.m == 0) {
        return r_plus(src, rows, cols);
    }
    const double k = src.k;
    const double m = src.m;
    return fill(src, {src.k, src.m - 1}, rows, cols, [&](double n) {
        const double s = 2.0 * n + k + m;
        return ColumnEntries{0.0, ratio_sqrt((n + m) * (n + k + m), s * (s + 1.0)),
                             ratio_sqrt((n + 1.0) * (n + k + 1.0), (s + 1.0) * (s + 2.0))};
    });
}

BandedMatrix convert(BasisId src, std::size_t rows, std::size_t cols) {
    validate(src);
    const double k = src.k;
    const double m = src.m;
    return fill(src, {src.k + 1, src.m}, rows, cols, [&](double n) {
        const double s = 2.0 * n + k + m;
        return ColumnEntries{-ratio_sqrt(n * (n + m), s * (s + 1.0)),
                             ratio_sqrt((n + k + 1.0) * (n + k + m + 1.0), (s + 1.0) * (s + 2.0)),
                             0.0};
    });
}

BandedMatrix convert_down(BasisId src, std::size_t rows, std::size_t cols) {
    require_k(src, "convert_down");
    const double k = src.k;
    const double m = src.m;
    return fill(src, {src.k - 1, src.m}, rows, cols, [&](double n) {
        const double s = 2.0 * n + k + m;
        return ColumnEntries{0.0, ratio_sqrt((n + k) * (n + k + m), s * (s + 1.0)),
                             -ratio_sqrt((n + 1.0) * (n + m + 1.0), (s + 1.0) * (s + 2.0))};
    });
}

BandedMatrix z_matrix(BasisId src, std::size_t rows, std::size_t cols) {
    validate(src);
    return fill(src, src, rows, cols, [&](double n) {
        const int in = static_cast<int>(n);
        return ColumnEntries{recursion_b(src, in), recursion_a(src, in), recursion_b(src, in + 1)};
    });
}

BandedMatrix dirichlet_B(BasisId src, std::size_t rows, std::size_t cols) {
    require_k(src, "dirichlet_B");
    BandedMatrix out = convert_down(src, rows, cols);
    if (rows > 0 && cols > 0) {
        const double alpha = restriction_row({src.k - 1, src.m}, 0, 1).entries[0];
        out.add_to(0, 0, 1.0 / alpha);
    }
    return out;
}

BandedMatrix recombination(BasisId src, std::size_t rows, std::size_t cols) {
    require_k(src, "recombination");
    const BandedMatrix cdag = convert_down(src, std::max(rows, cols) + 1, std::max(cols, std::size_t{1}));
    BandedMatrix out(rows, cols, src, {src.k - 1, src.m});
    if (rows > 0 && cols > 0) {
        out.set(0, 0, 1.0 / restriction_row({src.k - 1, src.m}, 0, 1).entries[0]);
    }
    // column j carries (1-r^2) Q_{j-1}^{k,m}
    for (std::size_t j = 1; j < cols; ++j) {
        if (j - 1 < rows) out.set(j - 1, j, cdag(j - 1, j - 1));
        if (j < rows) out.set(j, j, cdag(j, j - 1));
    }
    return out;
}

BandedMatrix lambda_inverse(BasisId src, std::size_t rows, std::size_t cols) {
    validate(src);
    if (src.m == 0) {
        throw GaugeError("Lambda is singular at m=0: the n=0 mode has zero boundary slope");
    }
    BandedMatrix out(rows, cols, src, src);
    for (std::size_t n = 0; n < std::min(rows, cols); ++n) {
        out.set(n, n, 1.0 / lambda_entry(src, static_cast<int>(n)));
    }
    return out;
}

BandedMatrix d_plus(BasisId src, std::size_t n) { return d_plus(src, n, n); }
BandedMatrix d_minus(BasisId src, std::size_t n) { return d_minus(src, n, n); }
BandedMatrix r_plus(BasisId src, std::size_t n) { return r_plus(src, n, n); }
BandedMatrix r_minus(BasisId src, std::size_t n) { return r_minus(src, n, n); }
BandedMatrix convert(BasisId src, std::size_t n) { return convert(src, n, n); }
BandedMatrix convert_down(BasisId src, std::size_t n) { return convert_down(src, n, n); }
BandedMatrix z_matrix(BasisId src, std::size_t n) { return z_matrix(src, n, n); }
BandedMatrix dirichlet_B(BasisId src, std::size_t n) { return dirichlet_B(src, n, n); }
BandedMatrix recombination(BasisId src, std::size_t n) { return recombination(src, n, n); }

std::string to_string(OpKind kind) {
    switch (kind) {
        case OpKind::Dplus: return "Dplus";
        case OpKind::Dminus: return "Dminus";
        case OpKind::Rplus: return "Rplus";
        case OpKind::Rminus: return "Rminus";
        case OpKind::C: return "C";
        case OpKind::Cdag: return "Cdag";
        case OpKind::Z: return "Z";
        case OpKind::B: return "B";
        case OpKind::Recombine: return "Recombine";
        case OpKind::LambdaInv: return "LambdaInv";
        case OpKind::Ncc: return "Ncc";
        case OpKind::Identity: return "Identity";
    }
    return "?";
}

OperatorTag tag(OpKind kind, BasisId source) {
    if (kind == OpKind::Ncc) {
        throw ParameterError("Ncc tags carry an expansion; use ncc_tag");
    }
    return OperatorTag{kind, source, nullptr};
}

OperatorTag ncc_tag(std::shared_ptr<const CoeffExpansion> expansion, BasisId source) {
    if (!expansion) {
        throw ParameterError("ncc_tag: null expansion");
    }
    return OperatorTag{OpKind::Ncc, source, std::move(expansion)};
}

BasisId codomain(const OperatorTag& t) {
    const BasisId s = t.source;
    switch (t.kind) {
        case OpKind::Dplus: return {s.k + 1, s.m + 1};
        case OpKind::Dminus: return s.m == 0 ? BasisId{s.k + 1, 1} : BasisId{s.k + 1, s.m - 1};
        case OpKind::Rplus: return {s.k, s.m + 1};
        case OpKind::Rminus: return s.m == 0 ? BasisId{s.k, 1} : BasisId{s.k, s.m - 1};
        case OpKind::C: return {s.k + 1, s.m};
        case OpKind::Cdag:
        case OpKind::B:
        case OpKind::Recombine: return {s.k - 1, s.m};
        case OpKind::Z:
        case OpKind::LambdaInv:
        case OpKind::Ncc:
        case OpKind::Identity: return s;
    }
    return s;
}

int upper_bandwidth(const OperatorTag& t) {
    switch (t.kind) {
        case OpKind::Dplus:
        case OpKind::Rplus:
        case OpKind::C:
        case OpKind::Recombine:
        case OpKind::Z: return 1;
        case OpKind::Dminus:
        case OpKind::Rminus: return t.source.m == 0 ? 1 : 0;
        case OpKind::Ncc: return static_cast<int>(t.ncc->degree());
        default: return 0;
    }
}

int lower_bandwidth(const OperatorTag& t) {
    switch (t.kind) {
        case OpKind::Rminus: return t.source.m == 0 ? 0 : 1;
        case OpKind::Cdag:
        case OpKind::B:
        case OpKind::Z: return 1;
        case OpKind::Ncc: return static_cast<int>(t.ncc->degree());
        default: return 0;
    }
}

BandedMatrix build(const OperatorTag& t, std::size_t rows, std::size_t cols) {
    switch (t.kind) {
        case OpKind::Dplus: return d_plus(t.source, rows, cols);
        case OpKind::Dminus: return d_minus(t.source, rows, cols);
        case OpKind::Rplus: return r_plus(t.source, rows, cols);
        case OpKind::Rminus: return r_minus(t.source, rows, cols);
        case OpKind::C: return convert(t.source, rows, cols);
        case OpKind::Cdag: return convert_down(t.source, rows, cols);
        case OpKind::Z: return z_matrix(t.source, rows, cols);
        case OpKind::B: return dirichlet_B(t.source, rows, cols);
        case OpKind::Recombine: return recombination(t.source, rows, cols);
        case OpKind::LambdaInv: return lambda_inverse(t.source, rows, cols);
        case OpKind::Ncc: return clenshaw_matrix(*t.ncc, t.source, rows, cols);
        case OpKind::Identity: {
            validate(t.source);
            BandedMatrix id(rows, cols, t.source, t.source);
            for (std::size_t n = 0; n < std::min(rows, cols); ++n) {
                id.set(n, n, 1.0);
            }
            return id;
        }
    }
    throw ParameterError("unknown operator kind");
}

BasisId chain_codomain(std::span<const OperatorTag> ops) {
    if (ops.empty()) {
        throw CompositionError("empty operator chain");
    }
    for (std::size_t i = 1; i < ops.size(); ++i) {
        const BasisId out = codomain(ops[i - 1]);
        if (out != ops[i].source) {
            throw CompositionError("cannot apply " + to_string(ops[i].kind) + " on " +
                                   to_string(ops[i].source) + " after " + to_string(ops[i - 1].kind) +
                                   " which lands in " + to_string(out));
        }
    }
    return codomain(ops.back());
}

BandedMatrix compose(std::span<const OperatorTag> ops, std::size_t rows, std::size_t cols) {
    chain_codomain(ops);
    const std::size_t count = ops.size();
    // dims[i] is the row count of factor i; factor i has dims[i-1] columns.
    std::vector<std::size_t> dims(count);
    dims[count - 1] = rows;
    for (std::size_t i = count - 1; i > 0; --i) {
        dims[i - 1] = dims[i] + static_cast<std::size_t>(upper_bandwidth(ops[i]));
    }
    auto& cache = OperatorCache::global();
    BandedMatrix product = *cache.get(ops[0], dims[0], cols);
    for (std::size_t i = 1; i < count; ++i) {
        product = multiply(*cache.get(ops[i], dims[i], dims[i - 1]), product);
    }
    product.prune();
    return product;
}

BandedMatrix compose(std::span<const OperatorTag> ops, std::size_t n) { return compose(ops, n, n); }

BandedMatrix compose(std::initializer_list<OperatorTag> ops, std::size_t n) {
    return compose(std::span<const OperatorTag>(ops.begin(), ops.size()), n, n);
}

BandedMatrix compose(std::initializer_list<OperatorTag> ops, std::size_t rows, std::size_t cols) {
    return compose(std::span<const OperatorTag>(ops.begin(), ops.size()), rows, cols);
}

OperatorCache& OperatorCache::global() {
    static OperatorCache cache;
    return cache;
}

std::shared_ptr<const BandedMatrix> OperatorCache::get(const OperatorTag& t, std::size_t rows,
                                                       std::size_t cols) {
    if (t.kind == OpKind::Ncc) {
        return std::make_shared<const BandedMatrix>(build(t, rows, cols));
    }
    const Key key{static_cast<int>(t.kind), t.source.k, t.source.m, rows, cols};
    {
        std::shared_lock lock(mutex_);
        if (const auto it = entries_.find(key); it != entries_.end()) {
            return it->second;
        }
    }
    auto built = std::make_shared<const BandedMatrix>(build(t, rows, cols));
    std::unique_lock lock(mutex_);
    entries_[key] = built;
    return built;
}

std::size_t OperatorCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void OperatorCache::clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
}

}  // namespace diskspec
