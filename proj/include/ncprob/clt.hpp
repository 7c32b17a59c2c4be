#pragma once

#include "ncprob/lincomb.hpp"
#include "ncprob/moments.hpp"
#include "ncprob/rational.hpp"
#include "ncprob/word.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ncprob {

// Connected graded coalgebra with Word-encoded basis elements; degree is the
// word length, the empty word spans degree 0. Behavior is supplied by two
// oracles so instances are pluggable.
struct GradedCoalgebra {
    std::string name;
    unsigned alphabet_size;
    // reduced coproduct: both legs nonempty, degrees add up
    std::function<LinComb<std::pair<Word, Word>>(const Word &)> reduced_coproduct;
    // all basis elements of the given degree
    std::function<std::vector<Word>(unsigned)> basis;
};

// Unshuffling of words over the given alphabet: the dual of the shuffle
// product, reduced Delta(w) = sum over proper nonempty position subsets I of
// w_I (x) w_{I^c}. On a word of identical letters this is the binomial
// coproduct with multiplicities.
GradedCoalgebra unshuffle_coalgebra(unsigned alphabet_size);

// Binomial coalgebra on R[x]: x^n encoded as the word 0^n,
// reduced Delta(x^n) = sum_{k=1}^{n-1} C(n,k) x^k (x) x^{n-k}.
GradedCoalgebra binomial_coalgebra();

// Delta-bar_i, legs collected as a Sentence; zero when i > degree(x).
LinComb<Sentence> iterated_reduced_coproduct(const GradedCoalgebra &C,
                                             const Word &x, unsigned i);

// phi^{*n}(x) = sum_{i=1}^{deg x} C(n,i) phi tensor-applied to Delta-bar_i(x).
// Polynomial in n, so n may be far beyond any enumeration range.
Rat convolution_power(const GradedCoalgebra &C, const MomentFunctional &phi,
                      const Int &n, const Word &x);

// Coefficient of n^{deg(x)/r} in phi^{*n}(x), the limit of the rescaled
// convolution powers. r = vanish_degree is 2 for the standard CLT scaling;
// phi must vanish on degrees 1..r-1. Zero when r does not divide deg(x).
Rat clt_limit(const GradedCoalgebra &C, const MomentFunctional &phi,
              const Word &x, unsigned vanish_degree = 2);

// variance^{k/2} times the number of noncrossing pair partitions of [k].
Rat free_clt_limit(unsigned k, const Rat &variance);

struct CltTableRow {
    Int n;
    Rat scaled;    // phi^{*n}(x) / n^{deg(x)/2}
    Rat deviation; // scaled - clt_limit
};

// Even-degree x only: the sqrt(n)^k scaling is rational exactly then.
std::vector<CltTableRow> clt_convergence_table(const GradedCoalgebra &C,
                                               const MomentFunctional &phi,
                                               const Word &x,
                                               const std::vector<Int> &n_list);

} // namespace ncprob
