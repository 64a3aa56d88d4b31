#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qch/scalar.hpp"

namespace qch {

/* Word over a generator alphabet; letters are generator indices. For the
 * matrix algebras the alphabet is {g^i_j}, row-major: letter = i*n + j
 * (0-based). */
using Word = std::vector<uint16_t>;

// Graded lexicographic word order: longer words are bigger; equal length
// compares letters left to right, bigger letter index bigger.
int word_cmp(const Word& a, const Word& b);

struct WordGreater {
    bool operator()(const Word& a, const Word& b) const { return word_cmp(a, b) > 0; }
};

/* Element of the free associative algebra over Scalar. Terms keyed by
 * word, leading term first; no zero coefficients stored. Scalars commute
 * with generators. */
class NCPoly {
public:
    using TermMap = std::map<Word, Scalar, WordGreater>;

    NCPoly() = default;
    NCPoly(long c) : NCPoly(Scalar(c)) {}
    explicit NCPoly(const Scalar& c);
    static NCPoly generator(unsigned letter);
    static NCPoly word(Word w, Scalar c = Scalar(1));

    bool is_zero() const { return t_.empty(); }
    int degree() const; // -1 for zero
    size_t term_count() const { return t_.size(); }
    const TermMap& terms() const { return t_; }

    const Word& leading_word() const;
    const Scalar& leading_coeff() const;
    Scalar coeff_of(const Word& w) const;

    NCPoly operator-() const;
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o) { return *this += -o; }
    NCPoly& operator*=(const NCPoly& o) { *this = *this * o; return *this; }

    NCPoly scale(const Scalar& c) const;
    // u * this * v for words u, v.
    NCPoly sandwich(const Word& u, const Word& v) const;

    bool operator==(const NCPoly& o) const { return t_ == o.t_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    // Replace each generator with an NCPoly (e.g. l^i_j -> lb^i_j - h delta).
    NCPoly substitute_generators(const std::function<NCPoly(unsigned)>& image) const;
    // Substitute indeterminates inside all coefficients.
    NCPoly substitute_scalars(const std::map<unsigned, Scalar>& bindings) const;
    // Rename letters (e.g. move between the l and lb alphabets).
    NCPoly map_letters(const std::function<unsigned(unsigned)>& f) const;

    void add_term(const Word& w, const Scalar& c); // in-place accumulate

    std::string str(const std::vector<std::string>& names) const;

private:
    TermMap t_;
};

// Generator names "g^i_1..n_1..n" in row-major order for an n x n matrix
// of generators with base symbol `sym` (e.g. "l", "lb", "a").
std::vector<std::string> matrix_alphabet(unsigned n, const std::string& sym);

} // namespace qch
