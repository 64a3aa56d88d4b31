#pragma once

#include <vector>

#include "qch/ncpoly.hpp"

namespace qch {

/* Oriented monic rule: lead -> tail, with every tail word strictly below
 * lead in the graded lex word order. */
struct Rule {
    Word lead;
    NCPoly tail;
};

enum class ReduceStrategy {
    leftmost,  // reduce the leading term at its leftmost redex, rules in order
    rightmost, // reduce at the rightmost redex, rules scanned in reverse
};

enum class CompletionStatus { closed, truncated };

/* Completion-closed (up to degree_bound) rewriting system presenting a
 * quotient of the free algebra. Reduction by the completed set is
 * confluent on elements of degree <= degree_bound; when every potential
 * overlap of the final rules fits under the bound the system is closed
 * and normal forms are canonical in all degrees. */
class RewriteSystem {
public:
    RewriteSystem() = default;

    unsigned alphabet_size = 0;
    std::vector<std::string> names;
    std::vector<Rule> rules;
    unsigned degree_bound = 0;
    CompletionStatus status = CompletionStatus::truncated;

    NCPoly normal_form(const NCPoly& p,
                       ReduceStrategy strategy = ReduceStrategy::leftmost) const;

    // true iff normal_form(p*r - r*p) == 0.
    bool commutes(const NCPoly& p, const NCPoly& r) const;

    // Number of irreducible words of exact degree d (the normal-form basis
    // dimension in that degree).
    size_t normal_word_count(unsigned d) const;

private:
    void check_degree(const NCPoly& p) const;
};

/* Diamond-lemma completion: orients the relations by the graded lex word
 * order (monic over the Scalar field), resolves all overlap and inclusion
 * ambiguities whose ambiguity word has degree <= degree_bound. Keeps the
 * rule set inter-reduced (no lead contains another lead). */
RewriteSystem complete(std::vector<NCPoly> relations, unsigned alphabet_size,
                       std::vector<std::string> names, unsigned degree_bound);

bool commutes_mod(const NCPoly& p, const NCPoly& r, const RewriteSystem& rs);

} // namespace qch
