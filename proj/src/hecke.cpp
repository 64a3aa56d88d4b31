#include "qch/hecke.hpp"

#include <fstream>
#include <mutex>

#include <nlohmann/json.hpp>

#include "qch/vars.hpp"

namespace qch {

using nlohmann::json;
using nlohmann::ordered_json;

HeckeSymmetry::HeckeSymmetry(TensorOp R, Scalar q_param, Scalar lambda, unsigned rank_p)
    : R_(std::move(R)), q_(std::move(q_param)), lambda_(std::move(lambda)), p_(rank_p)
{
}

const TensorOp& HeckeSymmetry::antisym(unsigned l) const
{
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (asy_.size() < l)
        antisym_extend(R_, q_, asy_, l);
    return asy_[l - 1];
}

Scalar q_from_lambda(const Scalar& lambda)
{
    if (lambda.is_zero())
        return Scalar(1);
    if (lambda == Scalar::lambda())
        return Scalar::q();
    throw DomainError("cannot recover q from lambda '" + lambda.str() +
                      "'; expected 0 or q - 1/q");
}

HeckeReport check_all(const TensorOp& R, const Scalar& lambda)
{
    HeckeReport rep;
    if (R.k != 2) {
        rep.detail = "operator is not on V^{otimes 2}";
        return rep;
    }
    unsigned n = R.n;

    // Yang-Baxter in braid form
    TensorOp R12 = embed(R, 1, 3), R23 = embed(R, 2, 3);
    rep.yang_baxter =
        compose(compose(R12, R23), R12) == compose(compose(R23, R12), R23);

    // Hecke condition R^2 = id + lambda R
    rep.hecke = compose(R, R) == add(TensorOp::identity(n, 2), scale(lambda, R));
    if (!rep.yang_baxter || !rep.hecke)
        return rep;

    Scalar qp;
    try {
        qp = q_from_lambda(lambda);
    } catch (const DomainError& e) {
        rep.detail = e.what();
        return rep;
    }

    // evenness: find p with rank(P_-^{(p)}) = 1 and P_-^{(p+1)} = 0
    try {
        std::vector<TensorOp> tower;
        unsigned top = 0;
        for (unsigned l = 1; l <= n + 1; ++l) {
            antisym_extend(R, qp, tower, l);
            if (tower[l - 1].m.is_zero())
                break;
            top = l;
        }
        if (top >= 1 && top <= n && top < tower.size() && tower[top].m.is_zero() &&
            operator_rank(tower[top - 1]) == 1) {
            rep.even_rank = true;
            rep.rank_p = static_cast<int>(top);
        }
        if (!rep.even_rank)
            rep.detail = "antisymmetrizer tower does not terminate with a line";
    } catch (const Error& e) {
        rep.detail = e.what();
        return rep;
    }

    // closedness: the partial transpose of the quasitriangular form P R is
    // invertible. (For braid-form matrices the t1-transpose is identically
    // singular -- e.g. the standard symmetry has zero rows there -- so the
    // condition is checked on the composite with the flip.)
    rep.closed =
        !tensor_determinant(partial_transpose_first(compose(TensorOp::flip(n), R)))
             .is_zero();
    return rep;
}

HeckeSymmetry make_hecke(TensorOp R, Scalar lambda)
{
    HeckeReport rep = check_all(R, lambda);
    if (!rep.all_pass()) {
        std::string why;
        if (!rep.yang_baxter) why += " yang_baxter";
        if (!rep.hecke) why += " hecke";
        if (!rep.even_rank) why += " even_rank";
        if (!rep.closed) why += " closed";
        throw DomainError("Hecke validation failed:" + why +
                          (rep.detail.empty() ? "" : " (" + rep.detail + ")"));
    }
    Scalar qp = q_from_lambda(lambda);
    return HeckeSymmetry(std::move(R), std::move(qp), std::move(lambda),
                         static_cast<unsigned>(rep.rank_p));
}

HeckeSymmetry standard_R(unsigned n)
{
    if (n < 2)
        throw DomainError("standard_R needs n >= 2");
    Scalar q = Scalar::q(), lam = Scalar::lambda();
    TensorOp R(n, 2);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (i == j) {
                R.at(i * n + i, i * n + i) = q;
            } else {
                R.at(j * n + i, i * n + j) = Scalar(1); // flip part
                if (i < j)
                    R.at(i * n + j, i * n + j) = lam; // upper-triangular correction
            }
        }
    return make_hecke(std::move(R), std::move(lam));
}

void save_hecke(const HeckeSymmetry& h, const std::string& path)
{
    ordered_json doc;
    doc["n"] = h.n();
    // Record every indeterminate in declaration order so the file parses
    // back with identical ids.
    std::vector<std::string> names;
    for (unsigned i = 0; i < Vars::instance().count(); ++i)
        names.push_back(Vars::instance().name(i));
    doc["indeterminates"] = names;
    doc["lambda"] = h.lambda().str();
    ordered_json entries = ordered_json::array();
    unsigned n = h.n();
    for (unsigned r = 0; r < n * n; ++r)
        for (unsigned c = 0; c < n * n; ++c) {
            const Scalar& v = h.R().at(r, c);
            if (v.is_zero())
                continue;
            ordered_json e;
            e["row"] = {r / n + 1, r % n + 1};
            e["col"] = {c / n + 1, c % n + 1};
            e["value"] = v.str();
            entries.push_back(std::move(e));
        }
    doc["entries"] = std::move(entries);
    std::ofstream out(path);
    if (!out)
        throw DomainError("cannot open '" + path + "' for writing");
    out << doc.dump(2) << "\n";
}

HeckeSymmetry load_hecke(const std::string& path)
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
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("lambda") ||
        !doc.contains("entries"))
        throw DomainError("hecke file must have n, lambda, entries");
    unsigned n = doc.at("n").get<unsigned>();
    if (n < 1)
        throw DomainError("hecke file: n must be positive");
    if (doc.contains("indeterminates"))
        for (auto& v : doc.at("indeterminates"))
            Vars::instance().declare(v.get<std::string>());
    Scalar lambda = parse_scalar(doc.at("lambda").get<std::string>());
    TensorOp R(n, 2);
    for (auto& e : doc.at("entries")) {
        auto row = e.at("row").get<std::vector<unsigned>>();
        auto col = e.at("col").get<std::vector<unsigned>>();
        if (row.size() != 2 || col.size() != 2)
            throw DomainError("hecke file: row/col must be index pairs");
        for (unsigned idx : {row[0], row[1], col[0], col[1]})
            if (idx < 1 || idx > n)
                throw DomainError("hecke file: index out of range");
        R.at((row[0] - 1) * n + (row[1] - 1), (col[0] - 1) * n + (col[1] - 1)) =
            parse_scalar(e.at("value").get<std::string>());
    }
    return make_hecke(std::move(R), std::move(lambda));
}

} // namespace qch
