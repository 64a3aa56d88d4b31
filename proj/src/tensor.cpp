#include "qch/tensor.hpp"

#include <algorithm>

#include "qch/qcomb.hpp"
#include "qch/vars.hpp"

namespace qch {

unsigned pack_index(const std::vector<unsigned>& digits, unsigned n)
{
    unsigned idx = 0;
    for (unsigned d : digits)
        idx = idx * n + d;
    return idx;
}

std::vector<unsigned> unpack_index(unsigned idx, unsigned n, unsigned k)
{
    std::vector<unsigned> d(k);
    for (unsigned t = k; t-- > 0;) {
        d[t] = idx % n;
        idx /= n;
    }
    return d;
}

TensorOp TensorOp::identity(unsigned n, unsigned k)
{
    TensorOp t(n, k);
    t.m = DenseMat<Scalar>::identity(t.dim());
    return t;
}

TensorOp TensorOp::flip(unsigned n)
{
    TensorOp t(n, 2);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            t.at(a * n + b, b * n + a) = Scalar(1);
    return t;
}

TensorOp TensorOp::substitute(const std::map<unsigned, Scalar>& bindings) const
{
    TensorOp r(n, k);
    for (unsigned i = 0; i < dim(); ++i)
        for (unsigned j = 0; j < dim(); ++j)
            if (!at(i, j).is_zero())
                r.at(i, j) = at(i, j).substitute(bindings);
    return r;
}

TensorOp embed(const TensorOp& two, unsigned pos, unsigned k)
{
    if (two.k != 2)
        throw DomainError("embed expects an operator on V^{otimes 2}");
    if (pos < 1 || pos > k - 1)
        throw DomainError("embed position out of range");
    unsigned n = two.n;
    TensorOp r(n, k);
    unsigned left = pos - 1, right = k - pos - 1;
    unsigned dl = TensorOp::dim_pow(n, left), dr = TensorOp::dim_pow(n, right);
    unsigned d2 = n * n;
    for (unsigned a = 0; a < dl; ++a)
        for (unsigned rr = 0; rr < d2; ++rr)
            for (unsigned cc = 0; cc < d2; ++cc) {
                const Scalar& v = two.at(rr, cc);
                if (v.is_zero())
                    continue;
                for (unsigned b = 0; b < dr; ++b) {
                    unsigned row = (a * d2 + rr) * dr + b;
                    unsigned col = (a * d2 + cc) * dr + b;
                    r.at(row, col) = v;
                }
            }
    return r;
}

TensorOp compose(const TensorOp& a, const TensorOp& b)
{
    if (a.n != b.n || a.k != b.k)
        throw DomainError("compose shape mismatch");
    TensorOp r(a.n, a.k);
    r.m = a.m * b.m;
    return r;
}

TensorOp add(const TensorOp& a, const TensorOp& b)
{
    if (a.n != b.n || a.k != b.k)
        throw DomainError("add shape mismatch");
    TensorOp r(a.n, a.k);
    r.m = a.m + b.m;
    return r;
}

TensorOp scale(const Scalar& c, const TensorOp& a)
{
    TensorOp r(a.n, a.k);
    r.m = a.m.scale(c);
    return r;
}

TensorOp partial_trace(const TensorOp& a, const std::set<unsigned>& legs)
{
    if (legs.empty())
        throw DomainError("partial_trace needs a nonempty leg set");
    for (unsigned l : legs)
        if (l < 1 || l > a.k)
            throw DomainError("partial_trace leg out of range");
    unsigned keep = a.k - static_cast<unsigned>(legs.size());
    TensorOp r(a.n, keep);
    std::vector<unsigned> kept_pos;
    std::vector<unsigned> traced_pos;
    for (unsigned t = 1; t <= a.k; ++t)
        (legs.count(t) ? traced_pos : kept_pos).push_back(t - 1);

    unsigned dt = TensorOp::dim_pow(a.n, static_cast<unsigned>(traced_pos.size()));
    for (unsigned ri = 0; ri < r.dim(); ++ri) {
        auto rk = unpack_index(ri, a.n, keep);
        for (unsigned ci = 0; ci < r.dim(); ++ci) {
            auto ck = unpack_index(ci, a.n, keep);
            Scalar s;
            std::vector<unsigned> row(a.k), col(a.k);
            for (unsigned t = 0; t < kept_pos.size(); ++t) {
                row[kept_pos[t]] = rk[t];
                col[kept_pos[t]] = ck[t];
            }
            for (unsigned ti = 0; ti < dt; ++ti) {
                auto td = unpack_index(ti, a.n, static_cast<unsigned>(traced_pos.size()));
                for (unsigned t = 0; t < traced_pos.size(); ++t) {
                    row[traced_pos[t]] = td[t];
                    col[traced_pos[t]] = td[t];
                }
                const Scalar& v = a.at(pack_index(row, a.n), pack_index(col, a.n));
                if (!v.is_zero())
                    s += v;
            }
            if (!s.is_zero())
                r.at(ri, ci) = s;
        }
    }
    return r;
}

void antisym_extend(const TensorOp& R, const Scalar& q, std::vector<TensorOp>& tower,
                    unsigned lmax)
{
    if (R.k != 2)
        throw DomainError("antisymmetrizer expects R on V^{otimes 2}");
    if (lmax < 1)
        throw DomainError("antisymmetrizer level must be >= 1");
    unsigned n = R.n;
    std::map<unsigned, Scalar> at_q{{Vars::instance().q(), q}};
    if (tower.empty())
        tower.push_back(TensorOp::identity(n, 1));

    // widen an operator on the first (k_total - 1) legs to k_total legs
    auto widen = [&](const TensorOp& op, unsigned k_total) {
        TensorOp r(n, k_total);
        unsigned dl = op.dim();
        unsigned dr = TensorOp::dim_pow(n, k_total - op.k);
        for (unsigned a = 0; a < dl; ++a)
            for (unsigned b = 0; b < dl; ++b) {
                const Scalar& v = op.at(a, b);
                if (v.is_zero())
                    continue;
                for (unsigned t = 0; t < dr; ++t)
                    r.at(a * dr + t, b * dr + t) = v;
            }
        return r;
    };

    for (unsigned m = static_cast<unsigned>(tower.size()) + 1; m <= lmax; ++m) {
        TensorOp prev = widen(tower.back(), m);
        TensorOp Rm = embed(R, m - 1, m);
        Scalar qm = q.pow(static_cast<long>(m) - 1);
        Scalar mq = q_number(static_cast<long>(m)).substitute(at_q);
        Scalar m1q = q_number(static_cast<long>(m) - 1).substitute(at_q);
        if (mq.is_zero())
            throw DomainError("antisymmetrizer: m_q vanishes (degenerate q)");
        TensorOp mid = add(scale(qm, TensorOp::identity(n, m)), scale(-m1q, Rm));
        TensorOp P = scale(mq.inverse(), compose(compose(prev, mid), prev));

        // contract: idempotency and absorption at every adjacent pair
        if (compose(P, P) != P)
            throw EngineError("antisymmetrizer contract failed: not idempotent at level " +
                              std::to_string(m));
        Scalar absorb = -q.inverse();
        for (unsigned i = 1; i + 1 <= m; ++i) {
            TensorOp Ri = embed(R, i, m);
            TensorOp target = scale(absorb, P);
            if (compose(Ri, P) != target || compose(P, Ri) != target)
                throw EngineError("antisymmetrizer contract failed: absorption at leg " +
                                  std::to_string(i) + ", level " + std::to_string(m));
        }
        tower.push_back(std::move(P));
    }
}

TensorOp antisymmetrizer(const TensorOp& R, const Scalar& q, unsigned l)
{
    std::vector<TensorOp> tower;
    antisym_extend(R, q, tower, l);
    return tower[l - 1];
}

namespace {

// Gaussian elimination; returns (rank, det-if-square-and-full-rank).
unsigned eliminate(DenseMat<Scalar>& m, Scalar* det)
{
    unsigned dim = m.dim();
    unsigned rank = 0;
    Scalar d(1);
    for (unsigned col = 0; col < dim && rank < dim; ++col) {
        unsigned pivot = dim;
        for (unsigned r = rank; r < dim; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == dim)
            continue;
        if (pivot != rank) {
            for (unsigned c = col; c < dim; ++c)
                std::swap(m.at(pivot, c), m.at(rank, c));
            d = -d;
        }
        const Scalar pv = m.at(rank, col);
        d *= pv;
        for (unsigned r = rank + 1; r < dim; ++r) {
            if (m.at(r, col).is_zero())
                continue;
            Scalar f = m.at(r, col) / pv;
            for (unsigned c = col; c < dim; ++c)
                m.at(r, c) -= f * m.at(rank, c);
        }
        ++rank;
    }
    if (det)
        *det = rank == dim ? d : Scalar();
    return rank;
}

} // namespace

unsigned operator_rank(const TensorOp& a)
{
    DenseMat<Scalar> m = a.m;
    return eliminate(m, nullptr);
}

unsigned matrix_rank(DenseMat<Scalar> m)
{
    return eliminate(m, nullptr);
}

Scalar tensor_determinant(const TensorOp& a)
{
    DenseMat<Scalar> m = a.m;
    Scalar det;
    eliminate(m, &det);
    return det;
}

TensorOp partial_transpose_first(const TensorOp& a)
{
    if (a.k != 2)
        throw DomainError("partial_transpose_first expects k = 2");
    unsigned n = a.n;
    TensorOp r(n, 2);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k2 = 0; k2 < n; ++k2)
                for (unsigned l = 0; l < n; ++l)
                    r.at(i * n + j, k2 * n + l) = a.at(k2 * n + j, i * n + l);
    return r;
}

} // namespace qch
