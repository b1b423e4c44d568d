#pragma once

#include <compare>
#include <string>

namespace diskspec {

/// One radial Hilbert space of the (k, m) lattice: Q_n^{k,m}, n = 0, 1, ...
struct BasisId {
    int k = 0;
    int m = 0;

    auto operator<=>(const BasisId&) const = default;
};

inline std::string to_string(const BasisId& b) {
    return "(k=" + std::to_string(b.k) + ",m=" + std::to_string(b.m) + ")";
}

}  // namespace diskspec
