#pragma once

#include <memory>
#include <optional>

#include "qch/cayley.hpp"

namespace qch {

enum class AlgebraTag { RE, REqh, Ugl };

std::string algebra_tag_name(AlgebraTag t);

/* Quantum orbit: quotient of the chosen base algebra by the central
 * relations fixing each invariant to a scalar (sigma_k - c_k for RE,
 * sigma^(hbar)_k - c_k for the two-parameter algebra, tau^(hbar)_k - c_k
 * for the enveloping algebra). Immutable after construction. */
struct OrbitSpec {
    AlgebraTag algebra = AlgebraTag::RE;
    unsigned n = 0, p = 0;
    std::vector<Scalar> mu; // pairwise distinct roots
    std::vector<Scalar> c;  // elementary symmetric functions of mu
    RewriteSystem quotient;
    std::shared_ptr<const HeckeSymmetry> hecke; // null for Ugl
};

/* Orbit description file:
 * { "algebra": "RE"|"REqh"|"Ugl", "hecke": "standard:n" | <file path>,
 *   "mu": [expr...], "degree_bound": int }
 * Bare identifiers in mu are declared as fresh indeterminates. */
struct OrbitDescription {
    AlgebraTag algebra = AlgebraTag::RE;
    std::string hecke_source;
    std::vector<Scalar> mu;
    unsigned degree_bound = 0; // 0 = default
};
OrbitDescription load_orbit_description(const std::string& path);

/* c_k with (-t)^p + sum_{k=0}^{p-1} (-t)^k c_{p-k} = (-1)^p prod_i (t - mu_i);
 * derived by symbolic expansion of the product, so c_k = e_k(mu) by
 * construction. Throws on repeated roots. Returned 1-based conceptually:
 * result[k-1] = c_k. */
std::vector<Scalar> c_from_mu(const std::vector<Scalar>& mu);

OrbitSpec make_orbit(const HeckeSymmetry& h, std::vector<Scalar> mu, AlgebraTag tag,
                     unsigned degree_bound = 0 /* 0 = rank + 2 */);

/* Element of the free right module V (x) k(M): component i is the
 * coefficient of the basis vector v_i. */
struct FreeModuleElement {
    std::vector<NCPoly> components;

    static FreeModuleElement basis(unsigned n, unsigned i); // e_i, 1-based
    bool is_zero() const;
};

/* Right action of the generator matrix on the free module,
 *   (v <| L)_i = sum_j l^i_j g_j  (generators act from the left of the
 * coefficients, so the action commutes with right multiplication),
 * components reduced to normal form in the orbit quotient. */
FreeModuleElement right_action(const FreeModuleElement& v, const OrbitSpec& orbit);

// P_i = prod_{j != i} (L - mu_j id)/(mu_i - mu_j), entries in normal form; 1-based i.
MatrixPoly projector(const OrbitSpec& orbit, unsigned i);

struct ProjectorReport {
    bool orthogonal = false;    // P_i P_j = delta_ij P_i
    bool complete = false;      // sum_i P_i = id
    bool eigen = false;         // (L - mu_i) P_i = 0
    std::string detail;
    bool all_pass() const { return orthogonal && complete && eigen; }
    std::string to_json() const;
};

ProjectorReport verify_projector_family(const OrbitSpec& orbit);

/* Triviality of the quotient module R(V,M)/R_nu: trivial unless nu equals
 * some mu_i, in which case the bundle is Im P_i and P_i must be nonzero
 * mod the ideal (anything else is a hard engine failure). */
struct ModuleVerdict {
    bool trivial = true;
    unsigned index = 0; // 1-based root index when nontrivial
};
ModuleVerdict module_nontrivial(const OrbitSpec& orbit, const Scalar& nu);

// P_+ = (q^{-1} id + R)/(q + q^{-1}) on V^{otimes 2}; idempotent for Hecke R.
TensorOp symmetrizer_plus(const HeckeSymmetry& h);

// L_+ = P_+ L_1 P_+ as an n^2 x n^2 matrix over the orbit quotient.
MatrixPoly l_plus(const HeckeSymmetry& h, const OrbitSpec& orbit);

/* Cubic identity for the derived (symmetric-square) bundle, rank 2 only.
 * Both sign readings of the b-terms are reduced:
 *   proposition: L+^3 - a(1+x)L+^2 + (a^2 x - b)L+ + ab x P+ = 0
 *   derivation:  L+^3 - a(1+x)L+^2 + (a^2 x + b)L+ - ab x P+ = 0
 * with x = q^{-1}/2_q and P_+ standing for the identity on the symmetric
 * part. The report records which variant vanished; the intermediate
 * identities (the P_+ form of the RE relation, and its orbit form with
 * L^2 = aL - b applied) are verified as well. */
struct LplusReport {
    bool re_pr = false;            // P+ rewriting of the RE relation (no orbit needed)
    bool re_ch = false;            // same with the quadratic CH substituted
    bool proposition_variant = false;
    bool derivation_variant = false;
    std::string passing_variant;   // "proposition", "derivation", "none", "both"
    bool pass() const
    {
        return re_pr && re_ch && (proposition_variant != derivation_variant);
    }
    std::string to_json() const;
};

LplusReport verify_ch_lplus(const HeckeSymmetry& h, const OrbitSpec& orbit);

} // namespace qch
