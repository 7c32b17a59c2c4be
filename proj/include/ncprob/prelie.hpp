#pragma once

#include "ncprob/cumulants.hpp"
#include "ncprob/lincomb.hpp"
#include "ncprob/moments.hpp"
#include "ncprob/rational.hpp"
#include "ncprob/word.hpp"

#include <map>
#include <vector>

namespace ncprob {

// Graded linear form on nonempty words, identically 0 on the empty word.
// Values are tabulated for every word up to the degree bound, so equality is
// equality in the truncated graded dual.
class Infinitesimal {
  public:
    Infinitesimal(unsigned alphabet_size, unsigned max_degree,
                  std::map<Word, Rat> values = {});

    static Infinitesimal from_cumulants(const CumulantFunctional &c);

    unsigned alphabet_size() const { return alphabet_size_; }
    unsigned max_degree() const { return max_degree_; }
    const std::map<Word, Rat> &values() const { return values_; }

    Rat operator()(const Word &w) const;
    void set(const Word &w, const Rat &v);

    Infinitesimal &operator+=(const Infinitesimal &o);
    Infinitesimal &operator*=(const Rat &s);
    friend Infinitesimal operator+(Infinitesimal a, const Infinitesimal &b)
    {
        return a += b;
    }
    friend Infinitesimal operator*(const Rat &s, Infinitesimal a) { return a *= s; }
    friend Infinitesimal operator-(Infinitesimal a) { return a *= Rat(-1); }

    bool operator==(const Infinitesimal &) const = default;
    bool operator<(const Infinitesimal &o) const;

  private:
    unsigned alphabet_size_;
    unsigned max_degree_;
    std::map<Word, Rat> values_; // no zero entries
};

// (beta{alpha})(w) = -sum beta(w1.w3) alpha(w2) over factorizations
// w = w1.w2.w3 into three nonempty subwords (strict insertions).
Infinitesimal prelie_product(const Infinitesimal &beta, const Infinitesimal &alpha);

// v{w1,...,wn}, symmetric in the args, via the defining recursion.
Infinitesimal symmetric_brace(const Infinitesimal &v,
                              const std::vector<Infinitesimal> &args);

// Commutative monomial of functionals, kept sorted for canonical equality.
struct FunctionalMonomial {
    std::vector<Infinitesimal> factors;

    FunctionalMonomial() = default;
    explicit FunctionalMonomial(std::vector<Infinitesimal> fs);

    bool operator==(const FunctionalMonomial &) const = default;
    bool operator<(const FunctionalMonomial &o) const;
};

using MonomialComb = LinComb<FunctionalMonomial>;

// Associative star product on the polynomial algebra over the preLie algebra:
// (a_1...a_l) * (b_1...b_m) sums over maps f : {1..m} -> {0..l}, braces
// grafting the fibers onto the a_i and fiber 0 passing through.
MonomialComb star_product(const FunctionalMonomial &m1, const FunctionalMonomial &m2);
MonomialComb star_product(const MonomialComb &c1, const MonomialComb &c2);
MonomialComb star_power(const Infinitesimal &v, unsigned n);

// v{m} for a monomial m = b_1...b_k is the symmetric brace v{b_1,...,b_k};
// extended linearly over a combination of monomials.
Infinitesimal brace_with_monomials(const Infinitesimal &v, const MonomialComb &c);

// Bernoulli numbers, convention B_1 = -1/2, by the defining recurrence.
Rat bernoulli_number(unsigned n);

// Magnus operator: Omega(v) = v + sum_{n>0} B_n/n! v{Omega^{*n}}, computed
// degree by degree (the fixed point closes since braces raise degree).
Infinitesimal magnus(const Infinitesimal &v, unsigned max_degree);

// Checks h = Omega(r) and h = -Omega(-b) against the direct monotone
// transform of phi, exactly, on all nonempty words up to max_degree.
bool magnus_inverse_check(const MomentFunctional &phi, unsigned max_degree);

} // namespace ncprob
