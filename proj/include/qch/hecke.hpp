#pragma once

#include <mutex>
#include <string>

#include "qch/tensor.hpp"

namespace qch {

struct HeckeReport {
    bool yang_baxter = false;
    bool hecke = false;
    bool even_rank = false;
    bool closed = false;
    int rank_p = 0; // computed rank (valid when even_rank holds)
    std::string detail;

    bool all_pass() const { return yang_baxter && hecke && even_rank && closed; }
};

/* A validated braid-form Hecke symmetry: YB in braid form, R^2 = id + lambda R,
 * even of rank p (top antisymmetrizer one-dimensional, next level zero),
 * closed (partial transpose invertible). Immutable after construction;
 * antisymmetrizer levels are cached. */
class HeckeSymmetry {
public:
    HeckeSymmetry(TensorOp R, Scalar q_param, Scalar lambda, unsigned rank_p);
    HeckeSymmetry(const HeckeSymmetry& o)
        : R_(o.R_), q_(o.q_), lambda_(o.lambda_), p_(o.p_)
    {
        std::lock_guard<std::mutex> lock(o.cache_mu_);
        asy_ = o.asy_;
    }
    HeckeSymmetry& operator=(const HeckeSymmetry&) = delete;

    unsigned n() const { return R_.n; }
    unsigned rank_p() const { return p_; }
    const TensorOp& R() const { return R_; }
    const Scalar& q_param() const { return q_; }
    const Scalar& lambda() const { return lambda_; }

    // P_-^{(l)}, cached.
    const TensorOp& antisym(unsigned l) const;

private:
    TensorOp R_;
    Scalar q_, lambda_;
    unsigned p_;
    mutable std::vector<TensorOp> asy_; // asy_[l-1] = P_-^{(l)}, filled lazily
    mutable std::mutex cache_mu_;
};

// Validation report for a candidate R; failures are entries, not exceptions.
HeckeReport check_all(const TensorOp& R, const Scalar& lambda);

// Validates and wraps; throws DomainError with the report on failure.
HeckeSymmetry make_hecke(TensorOp R, Scalar lambda);

/* Standard Drinfeld-Jimbo braid-form symmetry for GL(n): q on coinciding
 * indices, flip off the diagonal, lambda correction on the upper triangle.
 * Passes check_all with rank p = n and degenerates to the flip at q = 1. */
HeckeSymmetry standard_R(unsigned n);

/* JSON file format (UTF-8, no BOM):
 * { "n": int, "indeterminates": [string...], "lambda": expr-string,
 *   "entries": [{"row":[i1,i2],"col":[j1,j2],"value":expr-string}...] }
 * 1-based indices; omitted entries are zero. load validates via check_all. */
HeckeSymmetry load_hecke(const std::string& path);
void save_hecke(const HeckeSymmetry& h, const std::string& path);

/* The Hecke parameter q recovered from lambda: 0 -> 1, the canonical
 * q - 1/q -> the indeterminate q. Anything else is rejected (the
 * antisymmetrizer tower needs q itself, not just lambda). */
Scalar q_from_lambda(const Scalar& lambda);

} // namespace qch
