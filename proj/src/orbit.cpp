#include "qch/orbit.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "qch/vars.hpp"

namespace qch {

using nlohmann::json;
using nlohmann::ordered_json;

std::string algebra_tag_name(AlgebraTag t)
{
    switch (t) {
    case AlgebraTag::RE: return "RE";
    case AlgebraTag::REqh: return "REqh";
    case AlgebraTag::Ugl: return "Ugl";
    }
    return "?";
}

OrbitDescription load_orbit_description(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw DomainError("invalid JSON in '" + path + "': " + e.what());
    }
    if (!doc.is_object() || !doc.contains("algebra") || !doc.contains("hecke") ||
        !doc.contains("mu"))
        throw DomainError("orbit description must have algebra, hecke, mu");
    OrbitDescription d;
    std::string alg = doc.at("algebra").get<std::string>();
    if (alg == "RE")
        d.algebra = AlgebraTag::RE;
    else if (alg == "REqh")
        d.algebra = AlgebraTag::REqh;
    else if (alg == "Ugl")
        d.algebra = AlgebraTag::Ugl;
    else
        throw DomainError("orbit description: unknown algebra '" + alg + "'");
    d.hecke_source = doc.at("hecke").get<std::string>();
    auto exprs = doc.at("mu").get<std::vector<std::string>>();
    for (auto& e : exprs)
        if (is_valid_identifier(e))
            Vars::instance().declare(e);
    for (auto& e : exprs)
        d.mu.push_back(parse_scalar(e));
    if (doc.contains("degree_bound"))
        d.degree_bound = doc.at("degree_bound").get<unsigned>();
    return d;
}

std::vector<Scalar> c_from_mu(const std::vector<Scalar>& mu)
{
    unsigned p = static_cast<unsigned>(mu.size());
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = i + 1; j < p; ++j)
            if ((mu[i] - mu[j]).is_zero())
                throw DomainError("roots must be pairwise distinct (mu_" +
                                  std::to_string(i + 1) + " = mu_" + std::to_string(j + 1) +
                                  ")");
    // expand prod_i (t - mu_i) in coefficient-list form: coeffs[d] of t^d
    std::vector<Scalar> coeffs{Scalar(1)};
    for (auto& root : mu) {
        std::vector<Scalar> next(coeffs.size() + 1);
        for (size_t d = 0; d < coeffs.size(); ++d) {
            next[d + 1] += coeffs[d];        // t * coeffs
            next[d] -= coeffs[d] * root;     // -mu_i * coeffs
        }
        coeffs = std::move(next);
    }
    // prod(t - mu_i) = sum_k (-1)^k e_k t^{p-k}  =>  c_k = e_k = (-1)^k coeffs[p-k]
    std::vector<Scalar> c(p);
    for (unsigned k = 1; k <= p; ++k) {
        Scalar v = coeffs[p - k];
        c[k - 1] = (k % 2) ? -v : v;
    }
    return c;
}

OrbitSpec make_orbit(const HeckeSymmetry& h, std::vector<Scalar> mu, AlgebraTag tag,
                     unsigned degree_bound)
{
    OrbitSpec o;
    o.algebra = tag;
    o.n = h.n();
    o.p = h.rank_p();
    if (mu.size() != o.p)
        throw DomainError("need exactly rank-many roots (" + std::to_string(o.p) + ")");
    o.c = c_from_mu(mu);
    o.mu = std::move(mu);
    if (degree_bound == 0)
        degree_bound = o.p + 2;

    std::vector<NCPoly> rels;
    std::string sym;
    switch (tag) {
    case AlgebraTag::RE:
        rels = relations_RE(h);
        sym = "l";
        for (unsigned k = 1; k <= o.p; ++k)
            rels.push_back(sigma(h, k) - NCPoly(o.c[k - 1]));
        break;
    case AlgebraTag::REqh:
        rels = relations_REqh(h);
        sym = "lb";
        for (unsigned k = 1; k <= o.p; ++k)
            rels.push_back(sigma_hbar(h, k) - NCPoly(o.c[k - 1]));
        break;
    case AlgebraTag::Ugl:
        if (o.p != o.n)
            throw DomainError("enveloping-algebra orbits need rank = n");
        rels = relations_Ugl(o.n);
        sym = "a";
        for (unsigned k = 1; k <= o.p; ++k)
            rels.push_back(tau_hbar(o.n, k) - NCPoly(o.c[k - 1]));
        break;
    }
    o.quotient = complete(std::move(rels), o.n * o.n, matrix_alphabet(o.n, sym), degree_bound);
    if (tag != AlgebraTag::Ugl)
        o.hecke = std::make_shared<HeckeSymmetry>(h);
    return o;
}

FreeModuleElement FreeModuleElement::basis(unsigned n, unsigned i)
{
    if (i < 1 || i > n)
        throw DomainError("basis index out of range");
    FreeModuleElement v;
    v.components.resize(n);
    v.components[i - 1] = NCPoly(1);
    return v;
}

bool FreeModuleElement::is_zero() const
{
    for (auto& c : components)
        if (!c.is_zero())
            return false;
    return true;
}

FreeModuleElement right_action(const FreeModuleElement& v, const OrbitSpec& orbit)
{
    unsigned n = orbit.n;
    if (v.components.size() != n)
        throw DomainError("component count mismatch");
    FreeModuleElement r;
    r.components.resize(n);
    for (unsigned i = 0; i < n; ++i) {
        NCPoly acc;
        for (unsigned j = 0; j < n; ++j) {
            if (v.components[j].is_zero())
                continue;
            acc += NCPoly::generator(i * n + j) * v.components[j];
        }
        r.components[i] = orbit.quotient.normal_form(acc);
    }
    return r;
}

MatrixPoly projector(const OrbitSpec& orbit, unsigned i)
{
    unsigned p = orbit.p;
    if (i < 1 || i > p)
        throw DomainError("projector index out of range");
    MatrixPoly L = MatrixPoly::generators(orbit.n);
    MatrixPoly acc = MatrixPoly::identity(orbit.n);
    for (unsigned j = 1; j <= p; ++j) {
        if (j == i)
            continue;
        Scalar denom = orbit.mu[i - 1] - orbit.mu[j - 1];
        MatrixPoly factor = L - MatrixPoly::identity(orbit.n).scale(orbit.mu[j - 1]);
        acc = acc * factor.scale(denom.inverse());
    }
    return acc.map([&](const NCPoly& e) { return orbit.quotient.normal_form(e); });
}

ProjectorReport verify_projector_family(const OrbitSpec& orbit)
{
    ProjectorReport rep;
    unsigned p = orbit.p;
    std::vector<MatrixPoly> P;
    for (unsigned i = 1; i <= p; ++i)
        P.push_back(projector(orbit, i));

    auto reduced_zero = [&](const MatrixPoly& m) {
        for (auto& e : m.e)
            if (!orbit.quotient.normal_form(e).is_zero())
                return false;
        return true;
    };

    rep.orthogonal = true;
    for (unsigned i = 0; i < p && rep.orthogonal; ++i)
        for (unsigned j = 0; j < p && rep.orthogonal; ++j) {
            MatrixPoly prod = P[i] * P[j];
            MatrixPoly expect = (i == j) ? P[i] : MatrixPoly(orbit.n);
            if (!reduced_zero(prod - expect)) {
                rep.orthogonal = false;
                rep.detail = "P_" + std::to_string(i + 1) + " P_" + std::to_string(j + 1) +
                             " != " + (i == j ? "P_i" : "0");
            }
        }

    MatrixPoly sum(orbit.n);
    for (auto& Pi : P)
        sum = sum + Pi;
    rep.complete = reduced_zero(sum - MatrixPoly::identity(orbit.n));

    rep.eigen = true;
    MatrixPoly L = MatrixPoly::generators(orbit.n);
    for (unsigned i = 0; i < p && rep.eigen; ++i) {
        MatrixPoly shifted = L - MatrixPoly::identity(orbit.n).scale(orbit.mu[i]);
        if (!reduced_zero(shifted * P[i]))
            rep.eigen = false;
    }
    return rep;
}

std::string ProjectorReport::to_json() const
{
    ordered_json j;
    j["orthogonal"] = orthogonal;
    j["complete"] = complete;
    j["eigen_relation"] = eigen;
    j["status"] = all_pass() ? "pass" : "fail";
    if (!detail.empty())
        j["detail"] = detail;
    return j.dump(2);
}

ModuleVerdict module_nontrivial(const OrbitSpec& orbit, const Scalar& nu)
{
    Scalar prod(1);
    for (auto& m : orbit.mu)
        prod *= nu - m;
    if (!prod.is_zero())
        return ModuleVerdict{true, 0};
    for (unsigned i = 1; i <= orbit.p; ++i) {
        if (!(nu - orbit.mu[i - 1]).is_zero())
            continue;
        MatrixPoly Pi = projector(orbit, i);
        if (Pi.is_zero())
            throw EngineError("projector P_" + std::to_string(i) +
                              " reduced to zero for nu = mu_i; orbit inconsistent");
        return ModuleVerdict{false, i};
    }
    throw EngineError("product of (nu - mu_i) vanished without a matching root");
}

TensorOp symmetrizer_plus(const HeckeSymmetry& h)
{
    Scalar q = h.q_param();
    Scalar two_q = q + q.inverse();
    TensorOp num = add(scale(q.inverse(), TensorOp::identity(h.n(), 2)), h.R());
    return scale(two_q.inverse(), num);
}

namespace {

MatrixPoly to_matrix(const NCTensor& t)
{
    MatrixPoly m(t.dim());
    for (unsigned i = 0; i < t.dim(); ++i)
        for (unsigned j = 0; j < t.dim(); ++j)
            m.at(i, j) = t.at(i, j);
    return m;
}

} // namespace

MatrixPoly l_plus(const HeckeSymmetry& h, const OrbitSpec& orbit)
{
    unsigned n = h.n();
    NCTensor Pp = lift(symmetrizer_plus(h));
    NCTensor L1 = embed_generators_leg1(n, 2);
    MatrixPoly lp = to_matrix(Pp * L1 * Pp);
    return lp.map([&](const NCPoly& e) { return orbit.quotient.normal_form(e); });
}

LplusReport verify_ch_lplus(const HeckeSymmetry& h, const OrbitSpec& orbit)
{
    if (h.rank_p() != 2)
        throw DomainError("the derived-bundle cubic needs rank 2");
    if (orbit.algebra != AlgebraTag::RE)
        throw DomainError("the derived-bundle cubic is set up over an RE orbit");
    unsigned n = h.n();
    LplusReport rep;
    Scalar q = h.q_param();
    Scalar xi = q.inverse() / (q + q.inverse()); // q^{-1}/2_q
    Scalar a = orbit.c[0], b = orbit.c[1];

    NCTensor Pp = lift(symmetrizer_plus(h));
    NCTensor L1 = embed_generators_leg1(n, 2);

    // P+ form of the RE relation: consequence of the base ideal alone
    {
        RewriteSystem base = complete(relations_RE(h), n * n, matrix_alphabet(n, "l"),
                                      orbit.quotient.degree_bound);
        NCTensor lhs = Pp * L1 * Pp * L1 - L1 * Pp * L1 * Pp;
        NCTensor corr = (L1 * L1 * Pp - Pp * L1 * L1).scale(NCPoly(xi));
        NCTensor expr = lhs + corr;
        rep.re_pr = true;
        for (unsigned i = 0; i < expr.dim() && rep.re_pr; ++i)
            for (unsigned j = 0; j < expr.dim(); ++j)
                if (!base.normal_form(expr.at(i, j)).is_zero()) {
                    rep.re_pr = false;
                    break;
                }
    }

    // orbit form with L^2 = aL - b substituted
    {
        NCTensor lhs = Pp * L1 * Pp * L1 - L1 * Pp * L1 * Pp;
        NCTensor corr = (L1 * Pp - Pp * L1).scale(NCPoly(a * xi));
        NCTensor expr = lhs + corr;
        rep.re_ch = true;
        for (unsigned i = 0; i < expr.dim() && rep.re_ch; ++i)
            for (unsigned j = 0; j < expr.dim(); ++j)
                if (!orbit.quotient.normal_form(expr.at(i, j)).is_zero()) {
                    rep.re_ch = false;
                    break;
                }
    }

    // the cubic, both sign readings
    auto reduce = [&](const MatrixPoly& m) {
        return m.map([&](const NCPoly& e) { return orbit.quotient.normal_form(e); });
    };
    MatrixPoly Lp = l_plus(h, orbit);
    MatrixPoly Lp2 = reduce(Lp * Lp);
    MatrixPoly Lp3 = reduce(Lp2 * Lp);
    MatrixPoly Ppm = to_matrix(Pp);

    MatrixPoly common = Lp3 - reduce(Lp2.scale(a * (Scalar(1) + xi)));
    MatrixPoly prop = common + Lp.scale(a * a * xi - b) + Ppm.scale(a * b * xi);
    MatrixPoly deriv = common + Lp.scale(a * a * xi + b) - Ppm.scale(a * b * xi);
    rep.proposition_variant = reduce(prop).is_zero();
    rep.derivation_variant = reduce(deriv).is_zero();
    if (rep.proposition_variant && rep.derivation_variant)
        rep.passing_variant = "both";
    else if (rep.proposition_variant)
        rep.passing_variant = "proposition";
    else if (rep.derivation_variant)
        rep.passing_variant = "derivation";
    else
        rep.passing_variant = "none";
    return rep;
}

std::string LplusReport::to_json() const
{
    ordered_json j;
    j["re_pr"] = re_pr;
    j["re_ch"] = re_ch;
    j["proposition_variant"] = proposition_variant;
    j["derivation_variant"] = derivation_variant;
    j["passing_variant"] = passing_variant;
    j["status"] = pass() ? "pass" : "fail";
    return j.dump(2);
}

} // namespace qch
