#pragma once

#include "qch/scalar.hpp"

namespace qch {

// r_q = (q^r - q^-r)/(q - q^-1); q_number(-r) = -q_number(r).
Scalar q_number(long r);

// r_q! with 0_q! = 1; r >= 0.
Scalar q_factorial(long r);

// [C^k_p]_q = p_q!/(k_q! (p-k)_q!); requires 0 <= k <= p.
Scalar q_binomial(long p, long k);

// Classical binomial as a Scalar; requires 0 <= k <= p.
Scalar binomial(long p, long k);

// Checks sum_{k=0}^p x^k q^{-k(p-1)} [C^k_p]_q == prod_{k=0}^{p-1} (1 + x/q^{2k}).
bool q_binomial_theorem_check(long p);

} // namespace qch
