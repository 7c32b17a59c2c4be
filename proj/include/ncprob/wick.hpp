#pragma once

#include "ncprob/lincomb.hpp"
#include "ncprob/moments.hpp"
#include "ncprob/rational.hpp"
#include "ncprob/word.hpp"

#include <map>
#include <vector>

namespace ncprob {

// One-variable polynomial with exact rational coefficients.
struct Polynomial {
    std::map<unsigned, Rat> coeffs; // exponent -> coefficient, no zeros stored

    Polynomial() = default;
    explicit Polynomial(std::map<unsigned, Rat> cs);

    static Polynomial monomial(unsigned n, const Rat &c = 1);

    Rat coeff(unsigned n) const;
    unsigned degree() const; // 0 for the zero polynomial
    bool is_zero() const { return coeffs.empty(); }

    Polynomial &operator+=(const Polynomial &o);
    Polynomial operator*(const Polynomial &o) const;
    Polynomial operator*(const Rat &s) const;
    Polynomial derivative() const;

    bool operator==(const Polynomial &) const = default;
};

std::string polynomial_to_string(const Polynomial &p);

// phi^{*-1}(x^n) on the binomial bialgebra, the truncated geometric series
// sum_j (-1)^j (phi - nu)^{*j}. phi is a single-generator functional; x^k is
// read as the word of k copies of generator 0.
Rat classical_phi_inverse(const MomentFunctional &phi, unsigned n);

// W(x^n) = (phi^{*-1} * Id)(x^n); for gaussian phi these are the Hermite
// polynomials He_n.
Polynomial classical_wick(const MomentFunctional &phi, unsigned n);

// Inverse map W^{-1} = phi * Id, needed for the transported product.
Polynomial classical_wick_inverse_map(const MomentFunctional &phi,
                                      const Polynomial &p);

// p .W q = W(W^{-1}(p) W^{-1}(q)); associative and commutative with unit 1.
Polynomial wick_product(const MomentFunctional &phi, const Polynomial &p,
                        const Polynomial &q);

// State on sentences: Phi(w_1|...|w_n) = phi(w_1)...phi(w_n), Phi(1) = 1.
struct SentenceState {
    MomentFunctional base;

    explicit SentenceState(MomentFunctional phi) : base(std::move(phi)) {}

    Rat operator()(const Sentence &s) const;
};

// Maximal runs of consecutive integers in the sorted 0-based complement of
// the position set S inside [0, n).
std::vector<std::vector<int>> complement_components(unsigned n,
                                                    unsigned long mask);

// Delta(a_1...a_n) = sum over S subset of [n] of a_S (x) a_{J_1}|...|a_{J_k},
// the J_i the connected components of the complement. Left leg a subword,
// right leg a sentence.
LinComb<std::pair<Word, Sentence>> double_coproduct(const Word &w);

// Convolution inverse of Phi, multiplicative over the sentence bars.
Rat phi_inverse(const SentenceState &state, const Sentence &s);

// Free Wick polynomial W(w) = (Id (x) Phi^{*-1}) Delta(w), as a combination
// of subwords of w; the full word carries coefficient 1.
struct WickExpansion {
    Word input;
    LinComb<Word> terms;
};

WickExpansion free_wick(const SentenceState &state, const Word &w);

// Checks a_1...a_n = sum_S W(a_S) Phi(a_{J_1}|...|a_{J_k}) exactly.
bool wick_inversion(const SentenceState &state, const Word &w);

// Same expansion through free cumulants: the coefficient of a_S is the sum
// over interval partitions pi of the complement, with pi cup {S} noncrossing,
// of (-1)^{|pi|} times the product of free cumulants over the blocks.
WickExpansion free_wick_via_cumulants(const SentenceState &state, const Word &w);

// Degree cap for the 2^n subset enumerations.
inline constexpr unsigned kWickWordBound = 12;

} // namespace ncprob
