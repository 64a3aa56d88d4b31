#pragma once

#include <string>
#include <vector>

#include "qch/presentations.hpp"
#include "qch/qcomb.hpp"
#include "qch/rewrite.hpp"

namespace qch {

/* sigma_k(L) = alpha_k Tr_{(1..p)} P_-^{(p)} (L_1 R_{12} ... R_{k-1,k})^k,
 * alpha_k = q^{-k(p-k)} [C^k_p]_q. A degree-k element of the RE algebra
 * (or of the two-parameter algebra when read in the lb alphabet);
 * sigma_0 = 1. */
NCPoly sigma(const HeckeSymmetry& h, unsigned k);

// The string L_1 R_1 ... R_{r_count} embedded on V^{otimes legs}.
NCTensor generator_string(const HeckeSymmetry& h, unsigned r_count, unsigned legs);

struct CHReport {
    std::string identity; // "RE", "REqh", "Ugl", "Lplus"
    unsigned n = 0, p = 0;
    bool pass = false;
    std::string convention; // which summation/sign reading verified
    std::vector<std::string> coefficients;
    // (row, col, value) of entries that failed to reduce to zero, 1-based
    std::vector<std::tuple<unsigned, unsigned, std::string>> residual_nonzero;

    std::string to_json() const; // stable key order, canonical printing
};

/* Quantum Cayley-Hamilton of the RE algebra:
 * (-L)^p + sum_{k=0}^{p-1} (-L)^k sigma_{p-k}(L) = 0 entrywise mod the
 * ideal. If the k=0..p-1 reading fails, the k=1..p reading is tried and
 * the report records which one verified. */
CHReport verify_ch_RE(const HeckeSymmetry& h, const RewriteSystem& rs);

// Two-parameter version with sigma^{(hbar)} coefficients.
CHReport verify_ch_qh(const HeckeSymmetry& h, const RewriteSystem& rs);

// Enveloping-algebra version with tau^{(hbar)} coefficients (p = n).
CHReport verify_ch_ugl(unsigned n, const RewriteSystem& rs);

/* Image of sigma_k(L) under the shift l = lb - h*id, expressed through
 * sigma_j(Lb):
 *   sum_{r=0}^k (-h)^r q^{-r(p-1)} [C^k_p]_q C^r_k / [C^{k-r}_p]_q sigma_{k-r}(Lb)
 * ([..]_q q-binomial, C classical; hbar = h*lambda substituted back).
 * Must equal substituting the shift into sigma_k directly. */
NCPoly sigma_shift_transform(const HeckeSymmetry& h, unsigned k);

// Direct path: substitute l^i_j -> lb^i_j - h delta^i_j into sigma_k and expand.
NCPoly sigma_shift_direct(const HeckeSymmetry& h, unsigned k);

/* Appendix coefficient calculus (0 <= k <= s <= p):
 *   xi^{(p)}_{s,k}    = sum_{r=0}^{s-k} (-1)^r q^{-r(p-1)} C^k_{s-r} C^r_{p-s+r} [C^{s-r}_p]_q
 *   omega^{(p)}_{s,k} = lambda^{k-s} xi^{(p)}_{s,k} / [C^s_p]_q
 *   rho^{(p)}_{s,k}   = omega at q -> 1 (must be pole-free)
 * xi_closed is the product/V-sum closed form, kept as an independent path. */
Scalar xi_direct(unsigned p, unsigned s, unsigned k);
Scalar xi_closed(unsigned p, unsigned s, unsigned k);
Scalar omega(unsigned p, unsigned s, unsigned k);
Scalar rho(unsigned p, unsigned s, unsigned k);

/* Generating function of the xi family in the formal variables x, y:
 * phi_sum expands the defining double sum, phi_product the product form
 * with the given upper limit (p or p-1). */
Scalar phi_sum(unsigned p);
Scalar phi_product(unsigned p, unsigned upper);

struct PhiVerdict {
    bool matches_upper_p = false;
    bool matches_upper_pm1 = false;
    bool extraction_inverts = false; // coefficient read-off reproduces xi
};
PhiVerdict compare_phi(unsigned p);

// sigma^{(hbar)}_m(Lb) = sigma_m + sum_{r=1}^m hbar^r omega^{(p)}_{r+p-m, p-m} sigma_{m-r}
NCPoly sigma_hbar(const HeckeSymmetry& h, unsigned m);

/* tau_k(A) = (C^k_n / n!) eps_{i1..ik a..} A^{i1}_{j1} ... A^{ik}_{jk} eps^{j1..jk a..},
 * the Levi-Civita spectral invariants of the gl(n) generator matrix; tau_0 = 1. */
NCPoly tau(unsigned n, unsigned k);

// tau^{(hbar)}_m(A) = tau_m + sum_{s=1}^m hbar^s rho^{(n)}_{s+n-m, n-m} tau_{m-s}
NCPoly tau_hbar(unsigned n, unsigned m);

// Coefficient of x1^e1 * x2^e2 * ... in f (remaining variables stay free).
Scalar coeff_of(const Scalar& f, const std::vector<std::pair<unsigned, unsigned>>& var_exps);

} // namespace qch
