#pragma once

#include "kdvflow/diffpoly.hpp"

#include <array>
#include <utility>
#include <vector>

namespace kdvflow {

// Polynomial in the spectral variable z with DiffPoly coefficients,
// coeff[k] multiplying z^k.
struct ZPoly {
    std::vector<DiffPoly> coeff;

    int degree() const;
    void trim();
    bool is_zero() const;
    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly x_derivative() const;
    std::string to_string() const;

    static ZPoly from(DiffPoly p);
    static ZPoly z();  // the monomial z
};

struct ZPolyMatrix {
    std::array<std::array<ZPoly, 2>, 2> a;

    ZPoly& operator()(int r, int c) { return a[r][c]; }
    const ZPoly& operator()(int r, int c) const { return a[r][c]; }
    ZPolyMatrix operator+(const ZPolyMatrix& o) const;
    ZPolyMatrix operator-(const ZPolyMatrix& o) const;
    ZPolyMatrix operator*(const ZPolyMatrix& o) const;
    ZPolyMatrix x_derivative() const;
    int max_z_degree() const;
};

// f-hat_ell of the KdV hierarchy, exact rational coefficients; memoized.
const DiffPoly& fhat(unsigned ell);

// Right-hand side of the n-th hierarchy flow: 2 * d/dx f-hat_{n+1}.
DiffPoly kdv_rhs(unsigned n);

// F-hat_n(z) = sum_{l=0}^{n} fhat(n-l) z^l.
ZPoly fhat_big(unsigned n);

// The (P, Q) pair of the first-order system at hierarchy index n.
std::pair<ZPolyMatrix, ZPolyMatrix> pq_matrices(unsigned n);

// dQ/dt - dP/dx + bracket, with the bracket oriented so that for a correct
// hierarchy all entries vanish identically except (2,1) = qt - kdv_rhs(n).
ZPolyMatrix zero_curvature_residual(unsigned n);

}  // namespace kdvflow
