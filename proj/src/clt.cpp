#include "ncprob/clt.hpp"

#include "ncprob/partitions.hpp"

#include <stdexcept>

namespace ncprob {

namespace {

// C(n, k) for arbitrary-precision n
Rat binomial_big(const Int &n, unsigned k)
{
    Int num = 1;
    for (unsigned j = 0; j < k; ++j)
        num *= n - j;
    return Rat(num, factorial(k));
}

Rat state_on_sentence(const MomentFunctional &phi, const Sentence &s)
{
    Rat prod = 1;
    for (const auto &w : s.words) {
        prod *= phi(w);
        if (prod == 0)
            return 0;
    }
    return prod;
}

void require_vanishing(const GradedCoalgebra &C, const MomentFunctional &phi,
                       unsigned below_degree)
{
    for (unsigned d = 1; d < below_degree; ++d)
        for (const auto &b : C.basis(d))
            if (phi(b) != 0)
                throw std::invalid_argument(
                    "state does not vanish below the scaling degree");
}

} // namespace

GradedCoalgebra unshuffle_coalgebra(unsigned alphabet_size)
{
    GradedCoalgebra C;
    C.name = "unshuffle";
    C.alphabet_size = alphabet_size;
    C.reduced_coproduct = [](const Word &w) {
        LinComb<std::pair<Word, Word>> out;
        std::size_t n = w.size();
        for (unsigned long mask = 1; mask + 1 < (1ul << n); ++mask) {
            std::vector<int> left, right;
            for (std::size_t i = 0; i < n; ++i)
                ((mask >> i) & 1 ? left : right).push_back(w[i]);
            out.add({Word(std::move(left)), Word(std::move(right))}, 1);
        }
        return out;
    };
    C.basis = [alphabet_size](unsigned d) {
        return words_of_length(alphabet_size, d);
    };
    return C;
}

GradedCoalgebra binomial_coalgebra()
{
    GradedCoalgebra C;
    C.name = "binomial";
    C.alphabet_size = 1;
    C.reduced_coproduct = [](const Word &w) {
        LinComb<std::pair<Word, Word>> out;
        unsigned n = static_cast<unsigned>(w.size());
        for (unsigned k = 1; k < n; ++k)
            out.add({Word(std::vector<int>(k, 0)),
                     Word(std::vector<int>(n - k, 0))},
                    Rat(binomial(n, k)));
        return out;
    };
    C.basis = [](unsigned d) {
        return std::vector<Word>{Word(std::vector<int>(d, 0))};
    };
    return C;
}

LinComb<Sentence> iterated_reduced_coproduct(const GradedCoalgebra &C,
                                             const Word &x, unsigned i)
{
    if (i == 0)
        throw std::invalid_argument("iterated coproduct needs i >= 1");
    LinComb<Sentence> out;
    if (i == 1) {
        if (!x.empty())
            out.add(Sentence({x}), 1);
        return out;
    }
    for (const auto &[s, c] : iterated_reduced_coproduct(C, x, i - 1)) {
        for (const auto &[legs, c2] : C.reduced_coproduct(s.words.front())) {
            std::vector<Word> words{legs.first, legs.second};
            words.insert(words.end(), s.words.begin() + 1, s.words.end());
            out.add(Sentence(std::move(words)), c * c2);
        }
    }
    return out;
}

Rat convolution_power(const GradedCoalgebra &C, const MomentFunctional &phi,
                      const Int &n, const Word &x)
{
    if (x.empty())
        return 1;
    Rat sum = 0;
    for (unsigned i = 1; i <= x.size(); ++i) {
        Rat a = 0;
        for (const auto &[s, c] : iterated_reduced_coproduct(C, x, i))
            a += c * state_on_sentence(phi, s);
        sum += binomial_big(n, i) * a;
    }
    return sum;
}

Rat clt_limit(const GradedCoalgebra &C, const MomentFunctional &phi,
              const Word &x, unsigned vanish_degree)
{
    if (vanish_degree < 1)
        throw std::invalid_argument("vanish_degree must be positive");
    require_vanishing(C, phi, vanish_degree);
    unsigned k = static_cast<unsigned>(x.size());
    if (k == 0)
        return 1;
    if (k % vanish_degree != 0)
        return 0;
    unsigned target = k / vanish_degree;
    // coefficient of n^target in C(n,i) is s(i,target)/i!
    Rat sum = 0;
    for (unsigned i = target; i <= k; ++i) {
        Rat a = 0;
        for (const auto &[s, c] : iterated_reduced_coproduct(C, x, i))
            a += c * state_on_sentence(phi, s);
        if (a == 0)
            continue;
        sum += a * stirling_first(i, target) / Rat(factorial(i));
    }
    return sum;
}

Rat free_clt_limit(unsigned k, const Rat &variance)
{
    if (k % 2 != 0)
        return 0;
    Rat v = 1;
    for (unsigned i = 0; i < k / 2; ++i)
        v *= variance;
    return v * Rat(catalan(k / 2));
}

std::vector<CltTableRow> clt_convergence_table(const GradedCoalgebra &C,
                                               const MomentFunctional &phi,
                                               const Word &x,
                                               const std::vector<Int> &n_list)
{
    unsigned k = static_cast<unsigned>(x.size());
    if (k % 2 != 0)
        throw std::invalid_argument(
            "convergence table needs even degree for exact sqrt(n) scaling");
    Rat limit = clt_limit(C, phi, x);
    std::vector<CltTableRow> rows;
    rows.reserve(n_list.size());
    for (const auto &n : n_list) {
        if (n <= 0)
            throw std::invalid_argument("n must be positive");
        Int scale = 1;
        for (unsigned i = 0; i < k / 2; ++i)
            scale *= n;
        Rat scaled = convolution_power(C, phi, n, x) / Rat(scale);
        rows.push_back({n, scaled, scaled - limit});
    }
    return rows;
}

} // namespace ncprob
