#pragma once

#include <set>
#include <vector>

#include "qch/error.hpp"
#include "qch/scalar.hpp"

namespace qch {

/* Dense square matrix over a ring coefficient type (Scalar or NCPoly).
 * Multiplication preserves the entry order a(i,k)*b(k,j), so it is valid
 * over noncommutative entries as well. Zero entries are skipped. */
template <class T>
class DenseMat {
public:
    DenseMat() : dim_(0) {}
    explicit DenseMat(unsigned dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim) {}

    unsigned dim() const { return dim_; }
    T& at(unsigned r, unsigned c) { return e_[static_cast<size_t>(r) * dim_ + c]; }
    const T& at(unsigned r, unsigned c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }

    static DenseMat identity(unsigned dim)
    {
        DenseMat m(dim);
        for (unsigned i = 0; i < dim; ++i)
            m.at(i, i) = T(1);
        return m;
    }

    DenseMat operator*(const DenseMat& o) const
    {
        if (dim_ != o.dim_)
            throw DomainError("matrix shape mismatch");
        DenseMat r(dim_);
        for (unsigned i = 0; i < dim_; ++i)
            for (unsigned k = 0; k < dim_; ++k) {
                const T& a = at(i, k);
                if (a.is_zero())
                    continue;
                for (unsigned j = 0; j < dim_; ++j) {
                    const T& b = o.at(k, j);
                    if (b.is_zero())
                        continue;
                    r.at(i, j) += a * b;
                }
            }
        return r;
    }

    DenseMat operator+(const DenseMat& o) const
    {
        if (dim_ != o.dim_)
            throw DomainError("matrix shape mismatch");
        DenseMat r(dim_);
        for (size_t i = 0; i < e_.size(); ++i)
            r.e_[i] = e_[i] + o.e_[i];
        return r;
    }

    DenseMat operator-(const DenseMat& o) const
    {
        if (dim_ != o.dim_)
            throw DomainError("matrix shape mismatch");
        DenseMat r(dim_);
        for (size_t i = 0; i < e_.size(); ++i)
            r.e_[i] = e_[i] - o.e_[i];
        return r;
    }

    DenseMat scale(const T& c) const
    {
        DenseMat r(dim_);
        for (size_t i = 0; i < e_.size(); ++i)
            if (!e_[i].is_zero())
                r.e_[i] = e_[i] * c;
        return r;
    }

    bool is_zero() const
    {
        for (auto& x : e_)
            if (!x.is_zero())
                return false;
        return true;
    }

    bool operator==(const DenseMat& o) const { return dim_ == o.dim_ && e_ == o.e_; }
    bool operator!=(const DenseMat& o) const { return !(*this == o); }

private:
    unsigned dim_;
    std::vector<T> e_;
};

/* Linear operator on V^{otimes k}, dim V = n, with exact Scalar entries.
 * Multi-index linearization is row-major: the leftmost tensor factor is
 * the most significant digit; indices are 1-based externally and 0-based
 * internally. */
struct TensorOp {
    unsigned n = 0, k = 0;
    DenseMat<Scalar> m;

    TensorOp() = default;
    TensorOp(unsigned n_, unsigned k_) : n(n_), k(k_), m(dim_pow(n_, k_)) {}

    static unsigned dim_pow(unsigned n, unsigned k)
    {
        unsigned d = 1;
        for (unsigned i = 0; i < k; ++i)
            d *= n;
        return d;
    }

    unsigned dim() const { return m.dim(); }

    static TensorOp identity(unsigned n, unsigned k);
    static TensorOp zero(unsigned n, unsigned k) { return TensorOp(n, k); }
    static TensorOp flip(unsigned n); // P on V^{otimes 2}

    Scalar& at(unsigned r, unsigned c) { return m.at(r, c); }
    const Scalar& at(unsigned r, unsigned c) const { return m.at(r, c); }

    TensorOp substitute(const std::map<unsigned, Scalar>& bindings) const;

    bool operator==(const TensorOp& o) const { return n == o.n && k == o.k && m == o.m; }
    bool operator!=(const TensorOp& o) const { return !(*this == o); }
};

// Multi-index <-> linear index helpers (0-based digits).
unsigned pack_index(const std::vector<unsigned>& digits, unsigned n);
std::vector<unsigned> unpack_index(unsigned idx, unsigned n, unsigned k);

// Acts as `two` on tensor factors (pos, pos+1), identity elsewhere; 1 <= pos <= k-1.
TensorOp embed(const TensorOp& two, unsigned pos, unsigned k);

TensorOp compose(const TensorOp& a, const TensorOp& b);
TensorOp add(const TensorOp& a, const TensorOp& b);
TensorOp scale(const Scalar& c, const TensorOp& a);

// Exact partial trace over the 1-based legs in `legs` (nonempty). Tracing
// all legs yields a TensorOp with k = 0 (a 1x1 matrix holding a Scalar).
TensorOp partial_trace(const TensorOp& a, const std::set<unsigned>& legs);

/* q-antisymmetrizer tower of a braid-form Hecke symmetry R with Hecke
 * parameter q: idempotent, and R_i P = P R_i = -(1/q) P on every adjacent
 * pair of legs. Built by the coupled recursion
 *   P^(l) = P^(l-1) (q^{l-1} id - (l-1)_q R_{l-1}) P^(l-1) / l_q ,
 * after which the contract is asserted; failure signals a non-Hecke input
 * or a degenerate q specialization. P^(1) = id. */
TensorOp antisymmetrizer(const TensorOp& R, const Scalar& q, unsigned l);

// Incremental form: extends `tower` (tower[l-1] = P_-^{(l)}) up to lmax,
// reusing already-built levels. Used by validation and the symmetry cache.
void antisym_extend(const TensorOp& R, const Scalar& q, std::vector<TensorOp>& tower,
                    unsigned lmax);

// Rank over the rational-function field by Gaussian elimination with
// exact symbolic pivots (zero Scalars rejected as pivots).
unsigned operator_rank(const TensorOp& a);
unsigned matrix_rank(DenseMat<Scalar> m);

// Determinant over the Scalar field (fraction-free elimination would be
// overkill at this scale; ordinary elimination with exact division).
Scalar tensor_determinant(const TensorOp& a);

// Partial transpose on the first leg: (R^{t1})^{i,j}_{k,l} = R^{k,j}_{i,l}.
TensorOp partial_transpose_first(const TensorOp& a);

} // namespace qch
