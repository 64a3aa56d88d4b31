#pragma once

#include "qch/hecke.hpp"
#include "qch/ncpoly.hpp"
#include "qch/tensor.hpp"

namespace qch {

/* Matrix with NCPoly entries; the carrier for L, powers of L, projectors.
 * Entry (i,j) of the generator matrix is g^{i}_{j} with the upper index
 * as the row (matrix conventions of the operator picture). */
struct MatrixPoly {
    unsigned n = 0;
    std::vector<NCPoly> e;

    MatrixPoly() = default;
    explicit MatrixPoly(unsigned n_) : n(n_), e(static_cast<size_t>(n_) * n_) {}

    NCPoly& at(unsigned r, unsigned c) { return e[static_cast<size_t>(r) * n + c]; }
    const NCPoly& at(unsigned r, unsigned c) const { return e[static_cast<size_t>(r) * n + c]; }

    static MatrixPoly identity(unsigned n);
    static MatrixPoly generators(unsigned n); // ||g^i_j||

    MatrixPoly operator*(const MatrixPoly& o) const;
    MatrixPoly operator+(const MatrixPoly& o) const;
    MatrixPoly operator-(const MatrixPoly& o) const;
    MatrixPoly scale_nc(const NCPoly& c) const;   // entry * c (c on the right)
    MatrixPoly scale(const Scalar& c) const;
    MatrixPoly map(const std::function<NCPoly(const NCPoly&)>& f) const;

    bool is_zero() const;
};

/* NC-entried operator on V^{otimes k}; used to transcribe the matrix
 * relations and the sigma trace formula. */
using NCTensor = DenseMat<NCPoly>;

// L embedded on leg 1 of V^{otimes k}: entries l^i_j delta elsewhere.
NCTensor embed_generators_leg1(unsigned n, unsigned k);
// Scalar tensor operator lifted to NC entries.
NCTensor lift(const TensorOp& a);
NCTensor nc_identity(unsigned n, unsigned k);

/* Defining relations, as the nonzero entries of the matrix equations:
 *   RE:   R L1 R L1 - L1 R L1 R = 0
 *   REqh: R L1 R L1 - L1 R L1 R = hbar (R L1 - L1 R)
 *   Ugl:  a^i1_j1 a^i2_j2 - a^i2_j2 a^i1_j1
 *           = hbar (delta^i2_j1 a^i1_j2 - delta^i1_j2 a^i2_j1)
 * Generators are letters i*n + j (0-based) in the respective alphabet. */
std::vector<NCPoly> relations_RE(const HeckeSymmetry& h);
std::vector<NCPoly> relations_REqh(const HeckeSymmetry& h);
std::vector<NCPoly> relations_Ugl(unsigned n);

} // namespace qch
