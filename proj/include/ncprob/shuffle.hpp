#pragma once

#include "ncprob/lincomb.hpp"
#include "ncprob/rational.hpp"
#include "ncprob/word.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace ncprob {

// Shuffle product with multiplicities (repeated letters allowed).
LinComb<Word> shuffle_product(const Word &a, const Word &b);

// Deconcatenation coproduct: sum of prefix (x) suffix over all n+1 splits.
LinComb<std::pair<Word, Word>> deconcat(const Word &w);

// Exact matrices live on the n! permutation basis; chains, idempotents and
// spectra stop at 6, plain convolution powers at 7.
inline constexpr unsigned kShuffleDegreeBound = 6;
inline constexpr unsigned kPsiDegreeBound = 7;

// Endomorphism of the degree-n component, matrix over the basis of
// repetition-free words on n letters (lex order). Rows index inputs, so
// distributions are row vectors acting on the left.
struct GradedEndo {
    unsigned n = 0;
    std::vector<std::vector<Rat>> mat;

    static GradedEndo zero(unsigned n);
    static GradedEndo identity(unsigned n);

    std::size_t dim() const { return mat.size(); }

    GradedEndo &operator+=(const GradedEndo &o);
    GradedEndo &operator*=(const Rat &s);
    friend GradedEndo operator+(GradedEndo a, const GradedEndo &b)
    {
        return a += b;
    }
    friend GradedEndo operator*(const Rat &s, GradedEndo a) { return a *= s; }
    // composition: apply the left factor first (row convention)
    friend GradedEndo operator*(const GradedEndo &a, const GradedEndo &b);

    bool operator==(const GradedEndo &) const = default;
};

// Permutations of {0..n-1} as words, lex order (cached).
const std::vector<Word> &perm_basis(unsigned n);

// Word-level linear endomorphisms and their convolution
// (f*g)(w) = sum over w = u.v of shuffle(f(u), g(v)).
using WordEndo = std::function<LinComb<Word>(const Word &)>;

WordEndo identity_endo();
WordEndo graded_projection(unsigned k);
WordEndo unit_counit(); // nu, the convolution unit
WordEndo convolve(WordEndo f, WordEndo g);

// Matrix of a word-level endo on the degree-n permutation basis.
GradedEndo endo_matrix(unsigned n, const WordEndo &f);

// Psi^k = Id^{*k}; Psi^0 = nu.
GradedEndo psi_k(unsigned k, unsigned n);

// e^0..e^n with e^i = sum_{j>=i} s(j,i) J^{*j}/j!, J = Id - nu.
// Complete orthogonal system of projectors; e^i is the spectral projector
// of Psi^k for the eigenvalue k^i.
std::vector<GradedEndo> eulerian_idempotents(unsigned n);

unsigned matrix_rank(const GradedEndo &m);

enum class ChainKind { riffle, top_to_random };

ChainKind chain_kind_from_name(const std::string &name);

// Row-stochastic transition matrix over deck configurations:
// riffle = Psi^2/2^n, top_to_random = (p_1 * p_{n-1})/n.
struct ShuffleChain {
    ChainKind kind;
    unsigned n;
    GradedEndo transition;
};

ShuffleChain build_chain(ChainKind kind, unsigned n);

// start . M^k, exact. start indexed like perm_basis(n).
std::vector<Rat> iterate_distribution(const ShuffleChain &chain,
                                      std::vector<Rat> start, unsigned k);

// Exact eigenvalue multiset, descending. Riffle via the Eulerian idempotent
// ranks; top_to_random via kernel ranks at the candidate values j/n (n <= 5).
std::vector<Rat> spectrum(const ShuffleChain &chain);

Rat tvd_to_uniform(const ShuffleChain &chain, const std::vector<Rat> &start,
                   unsigned k);

} // namespace ncprob
