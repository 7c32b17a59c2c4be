#include "ncprob/prelie.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncprob {

namespace {

void require_compatible(const Infinitesimal &a, const Infinitesimal &b)
{
    if (a.alphabet_size() != b.alphabet_size())
        throw std::invalid_argument("alphabet mismatch");
}

} // namespace

Infinitesimal::Infinitesimal(unsigned alphabet_size, unsigned max_degree,
                             std::map<Word, Rat> values)
    : alphabet_size_(alphabet_size), max_degree_(max_degree)
{
    for (auto &[w, v] : values) {
        if (w.empty())
            throw std::invalid_argument("infinitesimal functional on empty word");
        if (w.size() > max_degree)
            throw std::invalid_argument("word beyond degree bound");
        if (v != 0)
            values_.emplace(w, v);
    }
}

Infinitesimal Infinitesimal::from_cumulants(const CumulantFunctional &c)
{
    std::map<Word, Rat> vals;
    for (unsigned d = 1; d <= c.max_degree(); ++d)
        for (const auto &w : words_of_length(c.alphabet_size(), d)) {
            Rat v = c(w);
            if (v != 0)
                vals.emplace(w, v);
        }
    return Infinitesimal(c.alphabet_size(), c.max_degree(), std::move(vals));
}

Rat Infinitesimal::operator()(const Word &w) const
{
    if (w.empty())
        return 0;
    if (w.size() > max_degree_)
        throw std::out_of_range("word beyond degree bound");
    auto it = values_.find(w);
    return it == values_.end() ? Rat(0) : it->second;
}

void Infinitesimal::set(const Word &w, const Rat &v)
{
    if (w.empty() || w.size() > max_degree_)
        throw std::invalid_argument("bad word for set()");
    if (v == 0)
        values_.erase(w);
    else
        values_[w] = v;
}

Infinitesimal &Infinitesimal::operator+=(const Infinitesimal &o)
{
    require_compatible(*this, o);
    for (const auto &[w, v] : o.values_) {
        if (w.size() > max_degree_)
            continue; // truncated sum
        auto it = values_.find(w);
        if (it == values_.end()) {
            values_.emplace(w, v);
        } else {
            it->second += v;
            if (it->second == 0)
                values_.erase(it);
        }
    }
    return *this;
}

Infinitesimal &Infinitesimal::operator*=(const Rat &s)
{
    if (s == 0) {
        values_.clear();
        return *this;
    }
    for (auto &[w, v] : values_)
        v *= s;
    return *this;
}

bool Infinitesimal::operator<(const Infinitesimal &o) const
{
    if (alphabet_size_ != o.alphabet_size_)
        return alphabet_size_ < o.alphabet_size_;
    if (max_degree_ != o.max_degree_)
        return max_degree_ < o.max_degree_;
    return values_ < o.values_;
}

Infinitesimal prelie_product(const Infinitesimal &beta, const Infinitesimal &alpha)
{
    require_compatible(beta, alpha);
    unsigned D = std::min(beta.max_degree(), alpha.max_degree());
    Infinitesimal out(beta.alphabet_size(), D);
    for (unsigned d = 3; d <= D; ++d) {
        // degree < 3 vanishes: w1, w2, w3 must all be nonempty
        for (const auto &w : words_of_length(beta.alphabet_size(), d)) {
            Rat acc = 0;
            for (std::size_t i = 1; i + 1 < d; ++i)
                for (std::size_t j = i + 1; j + 1 <= d; ++j) {
                    Rat a = alpha(w.slice(i, j));
                    if (a == 0)
                        continue;
                    acc -= beta(concat(w.slice(0, i), w.slice(j, d))) * a;
                }
            if (acc != 0)
                out.set(w, acc);
        }
    }
    return out;
}

Infinitesimal symmetric_brace(const Infinitesimal &v,
                              const std::vector<Infinitesimal> &args)
{
    if (args.empty())
        throw std::invalid_argument("symmetric_brace needs at least one argument");
    if (args.size() == 1)
        return prelie_product(v, args.front());
    std::vector<Infinitesimal> head(args.begin(), args.end() - 1);
    const Infinitesimal &last = args.back();
    Infinitesimal out = prelie_product(symmetric_brace(v, head), last);
    for (std::size_t i = 0; i < head.size(); ++i) {
        std::vector<Infinitesimal> grafted = head;
        grafted[i] = prelie_product(head[i], last);
        out += Rat(-1) * symmetric_brace(v, grafted);
    }
    return out;
}

FunctionalMonomial::FunctionalMonomial(std::vector<Infinitesimal> fs)
    : factors(std::move(fs))
{
    std::sort(factors.begin(), factors.end(),
              [](const Infinitesimal &a, const Infinitesimal &b) { return a < b; });
}

bool FunctionalMonomial::operator<(const FunctionalMonomial &o) const
{
    return std::lexicographical_compare(
        factors.begin(), factors.end(), o.factors.begin(), o.factors.end(),
        [](const Infinitesimal &a, const Infinitesimal &b) { return a < b; });
}

MonomialComb star_product(const FunctionalMonomial &m1, const FunctionalMonomial &m2)
{
    const std::size_t l = m1.factors.size();
    const std::size_t m = m2.factors.size();
    MonomialComb out;
    // enumerate maps f : {1..m} -> {0..l}
    std::vector<std::size_t> f(m, 0);
    while (true) {
        std::vector<Infinitesimal> factors;
        for (std::size_t j = 0; j < m; ++j)
            if (f[j] == 0)
                factors.push_back(m2.factors[j]);
        for (std::size_t i = 0; i < l; ++i) {
            std::vector<Infinitesimal> args;
            for (std::size_t j = 0; j < m; ++j)
                if (f[j] == i + 1)
                    args.push_back(m2.factors[j]);
            factors.push_back(args.empty() ? m1.factors[i]
                                           : symmetric_brace(m1.factors[i], args));
        }
        out.add(FunctionalMonomial(std::move(factors)), 1);

        std::size_t j = 0;
        for (; j < m; ++j) {
            if (++f[j] <= l)
                break;
            f[j] = 0;
        }
        if (j == m)
            break;
    }
    return out;
}

MonomialComb star_product(const MonomialComb &c1, const MonomialComb &c2)
{
    MonomialComb out;
    for (const auto &[m1, a] : c1.terms())
        for (const auto &[m2, b] : c2.terms())
            out += star_product(m1, m2) * (a * b);
    return out;
}

MonomialComb star_power(const Infinitesimal &v, unsigned n)
{
    MonomialComb acc(FunctionalMonomial({v}));
    for (unsigned i = 1; i < n; ++i)
        acc = star_product(acc, MonomialComb(FunctionalMonomial({v})));
    return acc;
}

Infinitesimal brace_with_monomials(const Infinitesimal &v, const MonomialComb &c)
{
    Infinitesimal out(v.alphabet_size(), v.max_degree());
    for (const auto &[m, coeff] : c.terms()) {
        Infinitesimal term =
            m.factors.empty() ? v : symmetric_brace(v, m.factors);
        out += coeff * term;
    }
    return out;
}

Rat bernoulli_number(unsigned n)
{
    static std::vector<Rat> table{1};
    for (unsigned k = static_cast<unsigned>(table.size()); k <= n; ++k) {
        Rat s = 0;
        for (unsigned j = 0; j < k; ++j)
            s += Rat(binomial(k + 1, j)) * table[j];
        table.push_back(-s / Rat(binomial(k + 1, k)));
    }
    return table[n];
}

Infinitesimal magnus(const Infinitesimal &v, unsigned max_degree)
{
    Infinitesimal truncated(v.alphabet_size(), max_degree);
    for (const auto &[w, val] : v.values())
        if (w.size() <= max_degree)
            truncated.set(w, val);

    Infinitesimal omega = truncated;
    for (unsigned d = 2; d <= max_degree; ++d) {
        Infinitesimal rhs = truncated;
        for (unsigned n = 1; n < d; ++n) {
            Rat bn = bernoulli_number(n);
            if (bn == 0)
                continue;
            rhs += (bn / Rat(factorial(n))) *
                   brace_with_monomials(truncated, star_power(omega, n));
        }
        for (const auto &w : words_of_length(v.alphabet_size(), d))
            omega.set(w, rhs(w));
    }
    return omega;
}

bool magnus_inverse_check(const MomentFunctional &phi, unsigned max_degree)
{
    auto r = Infinitesimal::from_cumulants(
        moments_to_cumulants(CumulantKind::free, phi, max_degree));
    auto b = Infinitesimal::from_cumulants(
        moments_to_cumulants(CumulantKind::boolean_, phi, max_degree));
    auto h = Infinitesimal::from_cumulants(
        moments_to_cumulants(CumulantKind::monotone, phi, max_degree));
    if (magnus(r, max_degree) != h)
        return false;
    return Rat(-1) * magnus(Rat(-1) * b, max_degree) == h;
}

} // namespace ncprob
