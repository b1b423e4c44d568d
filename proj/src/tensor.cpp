#include "diskspec/tensor.hpp"

#include "diskspec/error.hpp"

#include <cmath>
#include <numbers>

namespace diskspec {

OperatorTag spin_derivative(int sigma, int k, int ell) {
    if (sigma != 1 && sigma != -1) {
        throw ParameterError("spin index must be +1 or -1");
    }
    const BasisId src = signed_basis(k, ell);
    const bool raise = ell > 0 ? sigma > 0 : (ell < 0 ? sigma < 0 : true);
    return tag(raise ? OpKind::Dplus : OpKind::Dminus, src);
}

OperatorTag spin_multiply_r(int sigma, int k, int ell) {
    if (sigma != 1 && sigma != -1) {
        throw ParameterError("spin index must be +1 or -1");
    }
    const BasisId src = signed_basis(k, ell);
    const bool raise = ell > 0 ? sigma > 0 : (ell < 0 ? sigma < 0 : true);
    return tag(raise ? OpKind::Rplus : OpKind::Rminus, src);
}

int SpinTensor::weight(const std::vector<int>& mu) {
    int total = 0;
    for (int s : mu) {
        total += s;
    }
    return total;
}

cvec apply_to(const BandedMatrix& a, std::span<const std::complex<double>> x) {
    cvec padded(a.cols());
    for (std::size_t i = 0; i < std::min(x.size(), padded.size()); ++i) {
        padded[i] = x[i];
    }
    return a.apply(std::span<const std::complex<double>>(padded));
}

namespace {

cvec apply_chain(std::initializer_list<OperatorTag> chain, std::span<const std::complex<double>> x) {
    return apply_to(compose(chain, x.size()), x);
}

cvec add(const cvec& a, const cvec& b, std::complex<double> sb = 1.0) {
    if (a.size() != b.size()) {
        throw ParameterError("component lengths differ");
    }
    cvec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + sb * b[i];
    }
    return out;
}

}  // namespace

SpinVector gradient_scalar(int m, int k, std::span<const std::complex<double>> f) {
    SpinVector v{m, k + 1, {}, {}};
    v.plus = apply_chain({spin_derivative(+1, k, m)}, f);
    v.minus = apply_chain({spin_derivative(-1, k, m)}, f);
    return v;
}

SpinTensor gradient(const SpinTensor& t) {
    SpinTensor out{t.m, t.k + 1, t.rank + 1, {}};
    for (const auto& [mu, coeffs] : t.components) {
        const int ell = t.m + SpinTensor::weight(mu);
        for (int sigma : {+1, -1}) {
            std::vector<int> index{sigma};
            index.insert(index.end(), mu.begin(), mu.end());
            out.components[index] = apply_chain({spin_derivative(sigma, t.k, ell)}, coeffs);
        }
    }
    return out;
}

BandedMatrix laplacian_scalar(int m, std::size_t n) {
    const OperatorTag first = spin_derivative(+1, 0, m);
    const OperatorTag second = spin_derivative(-1, 1, m + 1);
    return 2.0 * compose({first, second}, n);
}

cvec divergence(const SpinVector& v) {
    const cvec a = apply_chain({spin_derivative(-1, v.k, v.m + 1)}, v.plus);
    const cvec b = apply_chain({spin_derivative(+1, v.k, v.m - 1)}, v.minus);
    return add(a, b);
}

cvec curl_z(const SpinVector& v) {
    const BasisId level{v.k + 1, std::abs(v.m)};
    const cvec a = apply_chain({spin_derivative(-1, v.k, v.m + 1), tag(OpKind::C, level)}, v.plus);
    const cvec b = apply_chain({spin_derivative(+1, v.k, v.m - 1), tag(OpKind::C, level)}, v.minus);
    const std::complex<double> i{0.0, 1.0};
    cvec out(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        out[n] = i * a[n] - i * b[n];
    }
    return out;
}

std::pair<cvec, cvec> spin_to_polar(std::span<const std::complex<double>> plus,
                                    std::span<const std::complex<double>> minus) {
    if (plus.size() != minus.size()) {
        throw ParameterError("spin components differ in length");
    }
    const double s = 1.0 / std::numbers::sqrt2;
    const std::complex<double> i{0.0, 1.0};
    cvec vr(plus.size());
    cvec vt(plus.size());
    for (std::size_t n = 0; n < plus.size(); ++n) {
        vr[n] = s * (plus[n] + minus[n]);
        vt[n] = -i * s * (plus[n] - minus[n]);
    }
    return {vr, vt};
}

std::pair<cvec, cvec> polar_to_spin(std::span<const std::complex<double>> vr,
                                    std::span<const std::complex<double>> vtheta) {
    if (vr.size() != vtheta.size()) {
        throw ParameterError("polar components differ in length");
    }
    const double s = 1.0 / std::numbers::sqrt2;
    const std::complex<double> i{0.0, 1.0};
    cvec plus(vr.size());
    cvec minus(vr.size());
    for (std::size_t n = 0; n < vr.size(); ++n) {
        plus[n] = s * (vr[n] + i * vtheta[n]);
        minus[n] = s * (vr[n] - i * vtheta[n]);
    }
    return {plus, minus};
}

}  // namespace diskspec
