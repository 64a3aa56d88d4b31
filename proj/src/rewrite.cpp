#include "qch/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "qch/error.hpp"

namespace qch {

namespace {

// position of the first occurrence of `sub` in `w`, or npos
size_t find_subword(const Word& w, const Word& sub, bool rightmost)
{
    if (sub.size() > w.size())
        return std::string::npos;
    size_t last = w.size() - sub.size();
    if (!rightmost) {
        for (size_t at = 0; at <= last; ++at)
            if (std::equal(sub.begin(), sub.end(), w.begin() + at))
                return at;
    } else {
        for (size_t at = last + 1; at-- > 0;)
            if (std::equal(sub.begin(), sub.end(), w.begin() + at))
                return at;
    }
    return std::string::npos;
}

struct Redex {
    size_t rule;
    size_t at;
};

// first reducible position of word w under the strategy, or nullopt
std::optional<Redex> find_redex(const Word& w, const std::vector<Rule>& rules,
                                ReduceStrategy strategy)
{
    if (strategy == ReduceStrategy::leftmost) {
        for (size_t r = 0; r < rules.size(); ++r) {
            size_t at = find_subword(w, rules[r].lead, false);
            if (at != std::string::npos)
                return Redex{r, at};
        }
    } else {
        for (size_t r = rules.size(); r-- > 0;) {
            size_t at = find_subword(w, rules[r].lead, true);
            if (at != std::string::npos)
                return Redex{r, at};
        }
    }
    return std::nullopt;
}

NCPoly reduce_full(const NCPoly& p, const std::vector<Rule>& rules, ReduceStrategy strategy)
{
    NCPoly work = p;
    NCPoly done;
    while (!work.is_zero()) {
        const Word w = work.leading_word();
        const Scalar c = work.leading_coeff();
        auto rx = find_redex(w, rules, strategy);
        if (!rx) {
            done.add_term(w, c);
            work.add_term(w, -c);
            continue;
        }
        const Rule& rule = rules[rx->rule];
        Word u(w.begin(), w.begin() + rx->at);
        Word v(w.begin() + rx->at + rule.lead.size(), w.end());
        work.add_term(w, -c);
        work += rule.tail.sandwich(u, v).scale(c);
    }
    return done;
}

} // namespace

void RewriteSystem::check_degree(const NCPoly& p) const
{
    if (status == CompletionStatus::truncated && p.degree() > static_cast<int>(degree_bound))
        throw DomainError("degree " + std::to_string(p.degree()) +
                          " exceeds the truncated system's bound " +
                          std::to_string(degree_bound));
}

NCPoly RewriteSystem::normal_form(const NCPoly& p, ReduceStrategy strategy) const
{
    check_degree(p);
    return reduce_full(p, rules, strategy);
}

bool RewriteSystem::commutes(const NCPoly& p, const NCPoly& r) const
{
    return normal_form(p * r - r * p).is_zero();
}

bool commutes_mod(const NCPoly& p, const NCPoly& r, const RewriteSystem& rs)
{
    return rs.commutes(p, r);
}

size_t RewriteSystem::normal_word_count(unsigned d) const
{
    // depth-first enumeration of words avoiding every rule lead as a suffix
    size_t count = 0;
    Word w;
    auto has_lead_suffix = [&](const Word& word) {
        for (const Rule& r : rules) {
            if (r.lead.size() > word.size())
                continue;
            if (std::equal(r.lead.begin(), r.lead.end(), word.end() - r.lead.size()))
                return true;
        }
        return false;
    };
    std::function<void()> rec = [&]() {
        if (w.size() == d) {
            ++count;
            return;
        }
        for (unsigned g = 0; g < alphabet_size; ++g) {
            w.push_back(static_cast<uint16_t>(g));
            if (!has_lead_suffix(w))
                rec();
            w.pop_back();
        }
    };
    rec();
    return count;
}

RewriteSystem complete(std::vector<NCPoly> relations, unsigned alphabet_size,
                       std::vector<std::string> names, unsigned degree_bound)
{
    RewriteSystem rs;
    rs.alphabet_size = alphabet_size;
    rs.names = std::move(names);
    rs.degree_bound = degree_bound;

    int max_rel_deg = 0;
    for (auto& r : relations)
        max_rel_deg = std::max(max_rel_deg, r.degree());
    if (degree_bound < static_cast<unsigned>(std::max(max_rel_deg, 0)))
        throw DomainError("degree bound " + std::to_string(degree_bound) +
                          " below the maximal relation degree " + std::to_string(max_rel_deg));

    std::deque<NCPoly> queue(relations.begin(), relations.end());
    auto& rules = rs.rules;

    auto push_spoly = [&](NCPoly s) {
        if (!s.is_zero())
            queue.push_back(std::move(s));
    };

    while (!queue.empty()) {
        NCPoly p = reduce_full(queue.front(), rules, ReduceStrategy::leftmost);
        queue.pop_front();
        if (p.is_zero())
            continue;
        if (p.degree() == 0)
            throw EngineError("relations force 1 = 0: the quotient algebra is trivial");
        const Scalar& lc = p.leading_coeff();
        if (lc.is_zero())
            throw EngineError("zero leading coefficient after specialization");
        Rule nr;
        nr.lead = p.leading_word();
        NCPoly tail = -(p.scale(lc.inverse()));
        tail.add_term(nr.lead, Scalar(1)); // tail = lead - p/lc
        nr.tail = std::move(tail);

        // retire any existing rule whose lead contains the new lead
        for (size_t i = rules.size(); i-- > 0;) {
            if (find_subword(rules[i].lead, nr.lead, false) != std::string::npos) {
                NCPoly back = NCPoly::word(rules[i].lead) - rules[i].tail;
                rules.erase(rules.begin() + static_cast<long>(i));
                push_spoly(std::move(back));
            }
        }

        rules.push_back(std::move(nr));
        const Rule& added = rules.back();

        // overlap ambiguities of the new rule with every rule (both sides)
        for (const Rule& other : rules) {
            // suffix of added.lead == prefix of other.lead, and vice versa
            for (int dir = 0; dir < 2; ++dir) {
                const Word& a = dir == 0 ? added.lead : other.lead;
                const Word& b = dir == 0 ? other.lead : added.lead;
                const NCPoly& ta = dir == 0 ? added.tail : other.tail;
                const NCPoly& tb = dir == 0 ? other.tail : added.tail;
                size_t maxo = std::min(a.size(), b.size()) - 1;
                for (size_t o = 1; o <= maxo; ++o) {
                    if (a.size() + b.size() - o > static_cast<size_t>(degree_bound))
                        continue;
                    if (!std::equal(b.begin(), b.begin() + static_cast<long>(o),
                                    a.end() - static_cast<long>(o)))
                        continue;
                    // ambiguity word w = a + b[o..] ; resolve both ways
                    Word suffix(b.begin() + static_cast<long>(o), b.end());
                    Word prefix(a.begin(), a.end() - static_cast<long>(o));
                    NCPoly left = ta.sandwich(Word{}, suffix); // rewrite a first
                    NCPoly right = tb.sandwich(prefix, Word{}); // rewrite b first
                    push_spoly(left - right);
                }
            }
        }
    }

    // inter-reduce tails so stored rules are fully normalized
    for (auto& r : rules)
        r.tail = reduce_full(r.tail, rules, ReduceStrategy::leftmost);

    // closed iff every potential ambiguity word of the final set fits
    // under the bound (then all ambiguities were examined)
    rs.status = CompletionStatus::closed;
    for (const Rule& a : rules)
        for (const Rule& b : rules) {
            size_t maxo = std::min(a.lead.size(), b.lead.size()) - 1;
            for (size_t o = 1; o <= maxo; ++o) {
                if (!std::equal(b.lead.begin(), b.lead.begin() + static_cast<long>(o),
                                a.lead.end() - static_cast<long>(o)))
                    continue;
                if (a.lead.size() + b.lead.size() - o > static_cast<size_t>(degree_bound))
                    rs.status = CompletionStatus::truncated;
            }
        }
    return rs;
}

} // namespace qch
