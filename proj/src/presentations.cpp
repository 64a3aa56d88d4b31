#include "qch/presentations.hpp"

#include "qch/vars.hpp"

namespace qch {

MatrixPoly MatrixPoly::identity(unsigned n)
{
    MatrixPoly m(n);
    for (unsigned i = 0; i < n; ++i)
        m.at(i, i) = NCPoly(1);
    return m;
}

MatrixPoly MatrixPoly::generators(unsigned n)
{
    MatrixPoly m(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            m.at(i, j) = NCPoly::generator(i * n + j);
    return m;
}

MatrixPoly MatrixPoly::operator*(const MatrixPoly& o) const
{
    if (n != o.n)
        throw DomainError("MatrixPoly shape mismatch");
    MatrixPoly r(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k < n; ++k) {
            const NCPoly& a = at(i, k);
            if (a.is_zero())
                continue;
            for (unsigned j = 0; j < n; ++j) {
                const NCPoly& b = o.at(k, j);
                if (!b.is_zero())
                    r.at(i, j) += a * b;
            }
        }
    return r;
}

MatrixPoly MatrixPoly::operator+(const MatrixPoly& o) const
{
    if (n != o.n)
        throw DomainError("MatrixPoly shape mismatch");
    MatrixPoly r(n);
    for (size_t i = 0; i < e.size(); ++i)
        r.e[i] = e[i] + o.e[i];
    return r;
}

MatrixPoly MatrixPoly::operator-(const MatrixPoly& o) const
{
    if (n != o.n)
        throw DomainError("MatrixPoly shape mismatch");
    MatrixPoly r(n);
    for (size_t i = 0; i < e.size(); ++i)
        r.e[i] = e[i] - o.e[i];
    return r;
}

MatrixPoly MatrixPoly::scale_nc(const NCPoly& c) const
{
    MatrixPoly r(n);
    for (size_t i = 0; i < e.size(); ++i)
        if (!e[i].is_zero())
            r.e[i] = e[i] * c;
    return r;
}

MatrixPoly MatrixPoly::scale(const Scalar& c) const
{
    MatrixPoly r(n);
    for (size_t i = 0; i < e.size(); ++i)
        r.e[i] = e[i].scale(c);
    return r;
}

MatrixPoly MatrixPoly::map(const std::function<NCPoly(const NCPoly&)>& f) const
{
    MatrixPoly r(n);
    for (size_t i = 0; i < e.size(); ++i)
        r.e[i] = f(e[i]);
    return r;
}

bool MatrixPoly::is_zero() const
{
    for (auto& p : e)
        if (!p.is_zero())
            return false;
    return true;
}

NCTensor embed_generators_leg1(unsigned n, unsigned k)
{
    unsigned rest = TensorOp::dim_pow(n, k - 1);
    NCTensor m(TensorOp::dim_pow(n, k));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            NCPoly g = NCPoly::generator(i * n + j);
            for (unsigned t = 0; t < rest; ++t)
                m.at(i * rest + t, j * rest + t) = g;
        }
    return m;
}

NCTensor lift(const TensorOp& a)
{
    NCTensor m(a.dim());
    for (unsigned i = 0; i < a.dim(); ++i)
        for (unsigned j = 0; j < a.dim(); ++j)
            if (!a.at(i, j).is_zero())
                m.at(i, j) = NCPoly(a.at(i, j));
    return m;
}

NCTensor nc_identity(unsigned n, unsigned k)
{
    return NCTensor::identity(TensorOp::dim_pow(n, k));
}

namespace {

std::vector<NCPoly> collect_nonzero(const NCTensor& m)
{
    std::vector<NCPoly> rels;
    for (unsigned i = 0; i < m.dim(); ++i)
        for (unsigned j = 0; j < m.dim(); ++j)
            if (!m.at(i, j).is_zero())
                rels.push_back(m.at(i, j));
    return rels;
}

} // namespace

std::vector<NCPoly> relations_RE(const HeckeSymmetry& h)
{
    unsigned n = h.n();
    NCTensor R = lift(h.R());
    NCTensor L1 = embed_generators_leg1(n, 2);
    NCTensor lhs = R * L1 * R * L1;
    NCTensor rhs = L1 * R * L1 * R;
    return collect_nonzero(lhs - rhs);
}

std::vector<NCPoly> relations_REqh(const HeckeSymmetry& h)
{
    unsigned n = h.n();
    Scalar hb = Scalar::variable(Vars::instance().find("hbar").value());
    NCTensor R = lift(h.R());
    NCTensor L1 = embed_generators_leg1(n, 2);
    NCTensor quad = R * L1 * R * L1 - L1 * R * L1 * R;
    NCTensor lin = R * L1 - L1 * R;
    NCTensor diff = quad - lin.scale(NCPoly(hb));
    return collect_nonzero(diff);
}

std::vector<NCPoly> relations_Ugl(unsigned n)
{
    Scalar hb = Scalar::variable(Vars::instance().find("hbar").value());
    std::vector<NCPoly> rels;
    auto gen = [n](unsigned i, unsigned j) { return NCPoly::generator(i * n + j); };
    for (unsigned i1 = 0; i1 < n; ++i1)
        for (unsigned j1 = 0; j1 < n; ++j1)
            for (unsigned i2 = 0; i2 < n; ++i2)
                for (unsigned j2 = 0; j2 < n; ++j2) {
                    NCPoly rel = gen(i1, j1) * gen(i2, j2) - gen(i2, j2) * gen(i1, j1);
                    if (j1 == i2)
                        rel -= gen(i1, j2).scale(hb);
                    if (i1 == j2)
                        rel += gen(i2, j1).scale(hb);
                    if (!rel.is_zero())
                        rels.push_back(std::move(rel));
                }
    return rels;
}

} // namespace qch
