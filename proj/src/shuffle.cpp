#include "ncprob/shuffle.hpp"

#include "ncprob/partitions.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ncprob {

LinComb<Word> shuffle_product(const Word &a, const Word &b)
{
    LinComb<Word> out;
    if (a.empty()) {
        out.add(b, 1);
        return out;
    }
    if (b.empty()) {
        out.add(a, 1);
        return out;
    }
    Word ta = a.slice(1, a.size());
    Word tb = b.slice(1, b.size());
    for (const auto &[w, c] : shuffle_product(ta, b))
        out.add(concat(Word::single(a[0]), w), c);
    for (const auto &[w, c] : shuffle_product(a, tb))
        out.add(concat(Word::single(b[0]), w), c);
    return out;
}

LinComb<std::pair<Word, Word>> deconcat(const Word &w)
{
    LinComb<std::pair<Word, Word>> out;
    for (std::size_t i = 0; i <= w.size(); ++i)
        out.add({w.slice(0, i), w.slice(i, w.size())}, 1);
    return out;
}

GradedEndo GradedEndo::zero(unsigned n)
{
    GradedEndo e;
    e.n = n;
    std::size_t d = perm_basis(n).size();
    e.mat.assign(d, std::vector<Rat>(d, Rat(0)));
    return e;
}

GradedEndo GradedEndo::identity(unsigned n)
{
    GradedEndo e = zero(n);
    for (std::size_t i = 0; i < e.dim(); ++i)
        e.mat[i][i] = 1;
    return e;
}

GradedEndo &GradedEndo::operator+=(const GradedEndo &o)
{
    if (n != o.n)
        throw std::invalid_argument("degree mismatch");
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            mat[i][j] += o.mat[i][j];
    return *this;
}

GradedEndo &GradedEndo::operator*=(const Rat &s)
{
    for (auto &row : mat)
        for (auto &x : row)
            x *= s;
    return *this;
}

GradedEndo operator*(const GradedEndo &a, const GradedEndo &b)
{
    if (a.n != b.n)
        throw std::invalid_argument("degree mismatch");
    GradedEndo out = GradedEndo::zero(a.n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) {
            if (a.mat[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < a.dim(); ++j)
                out.mat[i][j] += a.mat[i][k] * b.mat[k][j];
        }
    return out;
}

const std::vector<Word> &perm_basis(unsigned n)
{
    static std::map<unsigned, std::vector<Word>> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<int> letters(n);
    std::iota(letters.begin(), letters.end(), 0);
    std::vector<Word> basis;
    do {
        basis.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return cache.emplace(n, std::move(basis)).first->second;
}

WordEndo identity_endo()
{
    return [](const Word &w) {
        LinComb<Word> out;
        out.add(w, 1);
        return out;
    };
}

WordEndo graded_projection(unsigned k)
{
    return [k](const Word &w) {
        LinComb<Word> out;
        if (w.size() == k)
            out.add(w, 1);
        return out;
    };
}

WordEndo unit_counit()
{
    return graded_projection(0);
}

WordEndo convolve(WordEndo f, WordEndo g)
{
    auto cache = std::make_shared<std::map<Word, LinComb<Word>>>();
    return [f = std::move(f), g = std::move(g), cache](const Word &w) {
        auto it = cache->find(w);
        if (it != cache->end())
            return it->second;
        LinComb<Word> out;
        for (std::size_t i = 0; i <= w.size(); ++i) {
            LinComb<Word> left = f(w.slice(0, i));
            if (left.terms().empty())
                continue;
            LinComb<Word> right = g(w.slice(i, w.size()));
            for (const auto &[u, cu] : left.terms())
                for (const auto &[v, cv] : right.terms())
                    out += shuffle_product(u, v) * (cu * cv);
        }
        cache->emplace(w, out);
        return out;
    };
}

GradedEndo endo_matrix(unsigned n, const WordEndo &f)
{
    const auto &basis = perm_basis(n);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index.emplace(basis[i], i);
    GradedEndo out = GradedEndo::zero(n);
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (const auto &[w, c] : f(basis[r]))
            out.mat[r][index.at(w)] += c;
    return out;
}

GradedEndo psi_k(unsigned k, unsigned n)
{
    if (n > kPsiDegreeBound)
        throw std::out_of_range("degree beyond psi bound");
    if (k == 0)
        return endo_matrix(n, unit_counit());
    WordEndo f = identity_endo();
    for (unsigned i = 1; i < k; ++i)
        f = convolve(f, identity_endo());
    return endo_matrix(n, f);
}

std::vector<GradedEndo> eulerian_idempotents(unsigned n)
{
    if (n > kShuffleDegreeBound)
        throw std::out_of_range("degree beyond shuffle bound");
    if (n == 0)
        return {GradedEndo::identity(0)};

    // J = Id - nu kills the empty word and fixes the others
    WordEndo j_endo = [](const Word &w) {
        LinComb<Word> out;
        if (!w.empty())
            out.add(w, 1);
        return out;
    };
    std::vector<GradedEndo> j_pow; // J^{*1}..J^{*n} in degree n
    WordEndo f = j_endo;
    for (unsigned j = 1; j <= n; ++j) {
        j_pow.push_back(endo_matrix(n, f));
        f = convolve(f, j_endo);
    }

    std::vector<GradedEndo> e(n + 1, GradedEndo::zero(n));
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j)
            e[i] += (stirling_first(j, i) / Rat(factorial(j))) * j_pow[j - 1];
    return e;
}

unsigned matrix_rank(const GradedEndo &m)
{
    auto a = m.mat;
    unsigned rank = 0;
    std::size_t d = a.size();
    for (std::size_t col = 0; col < d && rank < d; ++col) {
        std::size_t pivot = rank;
        while (pivot < d && a[pivot][col] == 0)
            ++pivot;
        if (pivot == d)
            continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = rank + 1; r < d; ++r) {
            if (a[r][col] == 0)
                continue;
            Rat factor = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < d; ++c)
                a[r][c] -= factor * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

ChainKind chain_kind_from_name(const std::string &name)
{
    if (name == "riffle")
        return ChainKind::riffle;
    if (name == "top_to_random" || name == "top-to-random")
        return ChainKind::top_to_random;
    throw std::invalid_argument("unknown chain kind: '" + name + "'");
}

ShuffleChain build_chain(ChainKind kind, unsigned n)
{
    if (n == 0 || n > kShuffleDegreeBound)
        throw std::out_of_range("deck size out of range");
    GradedEndo t;
    if (kind == ChainKind::riffle) {
        t = psi_k(2, n);
        t *= Rat(1) / Rat(Int(1) << n);
    } else {
        t = endo_matrix(n, convolve(graded_projection(1), graded_projection(n - 1)));
        t *= Rat(1, n);
    }
    return {kind, n, std::move(t)};
}

std::vector<Rat> iterate_distribution(const ShuffleChain &chain,
                                      std::vector<Rat> start, unsigned k)
{
    std::size_t d = chain.transition.dim();
    if (start.size() != d)
        throw std::invalid_argument("distribution has wrong dimension");
    Rat total = 0;
    for (const auto &p : start) {
        if (p < 0)
            throw std::invalid_argument("negative probability");
        total += p;
    }
    if (total != 1)
        throw std::invalid_argument("probabilities do not sum to 1");
    for (unsigned step = 0; step < k; ++step) {
        std::vector<Rat> next(d, Rat(0));
        for (std::size_t r = 0; r < d; ++r) {
            if (start[r] == 0)
                continue;
            for (std::size_t c = 0; c < d; ++c)
                next[c] += start[r] * chain.transition.mat[r][c];
        }
        start = std::move(next);
    }
    return start;
}

std::vector<Rat> spectrum(const ShuffleChain &chain)
{
    std::vector<Rat> eigen;
    if (chain.kind == ChainKind::riffle) {
        auto e = eulerian_idempotents(chain.n);
        for (unsigned i = chain.n; i >= 1; --i) {
            // rank of a projector equals its trace, and the trace is cheap
            Rat trace = 0;
            for (std::size_t r = 0; r < e[i].dim(); ++r)
                trace += e[i].mat[r][r];
            if (rat_den(trace) != 1 || trace < 0)
                throw std::logic_error("projector trace is not a "
                                       "nonnegative integer");
            unsigned mult = static_cast<unsigned>(rat_num(trace));
            Rat value = Rat(Int(1) << i) / Rat(Int(1) << chain.n);
            eigen.insert(eigen.end(), mult, value);
        }
    } else {
        if (chain.n > 5)
            throw std::out_of_range("top_to_random spectrum limited to n <= 5");
        // n * transition is an integer 0/1 matrix; its eigenvalues are
        // integers in 0..n, located by kernel ranks
        std::size_t d = chain.transition.dim();
        for (int k = static_cast<int>(chain.n); k >= 0; --k) {
            GradedEndo shifted = chain.transition;
            shifted *= Rat(chain.n);
            for (std::size_t i = 0; i < d; ++i)
                shifted.mat[i][i] -= k;
            unsigned mult = static_cast<unsigned>(d) - matrix_rank(shifted);
            eigen.insert(eigen.end(), mult, Rat(k, static_cast<int>(chain.n)));
        }
        if (eigen.size() != d)
            throw std::logic_error("top_to_random matrix not diagonalizable "
                                   "over the expected eigenvalues");
    }
    return eigen;
}

Rat tvd_to_uniform(const ShuffleChain &chain, const std::vector<Rat> &start,
                   unsigned k)
{
    std::vector<Rat> p = iterate_distribution(chain, start, k);
    Rat u = Rat(1) / Rat(Int(factorial(chain.n)));
    Rat sum = 0;
    for (const auto &x : p)
        sum += abs(x - u);
    return sum / 2;
}

} // namespace ncprob
