#include "ncprob/wick.hpp"

#include "ncprob/cumulants.hpp"

#include <stdexcept>

namespace ncprob {

Polynomial::Polynomial(std::map<unsigned, Rat> cs)
{
    for (auto &[n, c] : cs)
        if (c != 0)
            coeffs.emplace(n, c);
}

Polynomial Polynomial::monomial(unsigned n, const Rat &c)
{
    Polynomial p;
    if (c != 0)
        p.coeffs.emplace(n, c);
    return p;
}

Rat Polynomial::coeff(unsigned n) const
{
    auto it = coeffs.find(n);
    return it == coeffs.end() ? Rat(0) : it->second;
}

unsigned Polynomial::degree() const
{
    return coeffs.empty() ? 0 : coeffs.rbegin()->first;
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
    for (const auto &[n, c] : o.coeffs) {
        auto it = coeffs.find(n);
        if (it == coeffs.end()) {
            coeffs.emplace(n, c);
        } else {
            it->second += c;
            if (it->second == 0)
                coeffs.erase(it);
        }
    }
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial &o) const
{
    Polynomial out;
    for (const auto &[n, c] : coeffs)
        for (const auto &[m, d] : o.coeffs)
            out += monomial(n + m, c * d);
    return out;
}

Polynomial Polynomial::operator*(const Rat &s) const
{
    Polynomial out;
    if (s != 0)
        for (const auto &[n, c] : coeffs)
            out.coeffs.emplace(n, c * s);
    return out;
}

Polynomial Polynomial::derivative() const
{
    Polynomial out;
    for (const auto &[n, c] : coeffs)
        if (n > 0)
            out.coeffs.emplace(n - 1, c * Rat(n));
    return out;
}

std::string polynomial_to_string(const Polynomial &p)
{
    if (p.coeffs.empty())
        return "0";
    std::string s;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        Rat c = it->second;
        bool neg = c < 0;
        if (s.empty()) {
            if (neg)
                s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        Rat a = neg ? -c : c;
        unsigned n = it->first;
        if (n == 0) {
            s += rat_to_string(a);
        } else {
            if (a != 1)
                s += rat_to_string(a) + "*";
            s += n == 1 ? "x" : "x^" + std::to_string(n);
        }
    }
    return s;
}

namespace {

Word xword(unsigned n) { return Word(std::vector<int>(n, 0)); }

} // namespace

Rat classical_phi_inverse(const MomentFunctional &phi, unsigned n)
{
    // psi = phi - nu vanishes in degree 0, so psi^{*j}(x^n) = 0 for j > n
    // and the geometric series sum_j (-1)^j psi^{*j} terminates.
    std::vector<std::vector<Rat>> psi_pow(n + 1, std::vector<Rat>(n + 1, 0));
    psi_pow[0][0] = 1;
    for (unsigned j = 1; j <= n; ++j)
        for (unsigned d = j; d <= n; ++d) {
            Rat s = 0;
            for (unsigned k = 1; k + (j - 1) <= d; ++k)
                s += Rat(binomial(d, k)) * phi(xword(k)) * psi_pow[j - 1][d - k];
            psi_pow[j][d] = s;
        }
    Rat out = 0;
    for (unsigned j = 0; j <= n; ++j)
        out += (j % 2 == 0 ? 1 : -1) * psi_pow[j][n];
    return out;
}

Polynomial classical_wick(const MomentFunctional &phi, unsigned n)
{
    Polynomial out;
    for (unsigned k = 0; k <= n; ++k)
        out += Polynomial::monomial(n - k, Rat(binomial(n, k)) *
                                               classical_phi_inverse(phi, k));
    return out;
}

Polynomial classical_wick_inverse_map(const MomentFunctional &phi,
                                      const Polynomial &p)
{
    // W^{-1} = phi * Id, since (phi * Id) o (phi^{*-1} * Id) = Id
    Polynomial out;
    for (const auto &[n, c] : p.coeffs)
        for (unsigned k = 0; k <= n; ++k)
            out += Polynomial::monomial(n - k,
                                        c * Rat(binomial(n, k)) * phi(xword(k)));
    return out;
}

Polynomial wick_product(const MomentFunctional &phi, const Polynomial &p,
                        const Polynomial &q)
{
    Polynomial prod =
        classical_wick_inverse_map(phi, p) * classical_wick_inverse_map(phi, q);
    Polynomial out;
    for (const auto &[n, c] : prod.coeffs)
        out += classical_wick(phi, n) * c;
    return out;
}

Rat SentenceState::operator()(const Sentence &s) const
{
    Rat prod = 1;
    for (const auto &w : s.words) {
        prod *= base(w);
        if (prod == 0)
            return 0;
    }
    return prod;
}

std::vector<std::vector<int>> complement_components(unsigned n,
                                                    unsigned long mask)
{
    std::vector<std::vector<int>> comps;
    for (unsigned i = 0; i < n; ++i) {
        if ((mask >> i) & 1)
            continue;
        if (comps.empty() || comps.back().back() != static_cast<int>(i) - 1)
            comps.emplace_back();
        comps.back().push_back(static_cast<int>(i));
    }
    return comps;
}

namespace {

void require_wick_degree(const Word &w)
{
    if (w.size() > kWickWordBound)
        throw std::out_of_range("word beyond Wick degree bound");
}

std::vector<int> mask_positions(unsigned n, unsigned long mask)
{
    std::vector<int> idx;
    for (unsigned i = 0; i < n; ++i)
        if ((mask >> i) & 1)
            idx.push_back(static_cast<int>(i));
    return idx;
}

Sentence component_sentence(const Word &w, unsigned long mask)
{
    std::vector<Word> ws;
    for (const auto &comp :
         complement_components(static_cast<unsigned>(w.size()), mask))
        ws.push_back(w.subword(comp));
    return Sentence(std::move(ws));
}

// Phi^{*-1} on a single word, by the triangular relation Phi^{*-1} * Phi = nu
// through the double coproduct: the S = [n] term isolates the value.
Rat word_inverse(const SentenceState &state, const Word &w,
                 std::map<Word, Rat> &memo)
{
    if (w.empty())
        return 1;
    auto it = memo.find(w);
    if (it != memo.end())
        return it->second;
    unsigned n = static_cast<unsigned>(w.size());
    Rat acc = 0;
    for (unsigned long mask = 0; mask + 1 < (1ul << n); ++mask) {
        Rat right = state(component_sentence(w, mask));
        if (right == 0)
            continue;
        acc += word_inverse(state, w.subword(mask_positions(n, mask)), memo) *
               right;
    }
    Rat out = -acc;
    memo.emplace(w, out);
    return out;
}

} // namespace

LinComb<std::pair<Word, Sentence>> double_coproduct(const Word &w)
{
    if (w.empty())
        throw std::invalid_argument("double coproduct of the empty word");
    require_wick_degree(w);
    unsigned n = static_cast<unsigned>(w.size());
    LinComb<std::pair<Word, Sentence>> out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask)
        out.add({w.subword(mask_positions(n, mask)), component_sentence(w, mask)},
                1);
    return out;
}

Rat phi_inverse(const SentenceState &state, const Sentence &s)
{
    std::map<Word, Rat> memo;
    Rat prod = 1;
    for (const auto &w : s.words) {
        require_wick_degree(w);
        prod *= word_inverse(state, w, memo);
        if (prod == 0)
            return 0;
    }
    return prod;
}

WickExpansion free_wick(const SentenceState &state, const Word &w)
{
    require_wick_degree(w);
    unsigned n = static_cast<unsigned>(w.size());
    std::map<Word, Rat> memo;
    WickExpansion out;
    out.input = w;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        Rat c = 1;
        for (const auto &comp : complement_components(n, mask)) {
            c *= word_inverse(state, w.subword(comp), memo);
            if (c == 0)
                break;
        }
        if (c != 0)
            out.terms.add(w.subword(mask_positions(n, mask)), c);
    }
    return out;
}

bool wick_inversion(const SentenceState &state, const Word &w)
{
    require_wick_degree(w);
    unsigned n = static_cast<unsigned>(w.size());
    LinComb<Word> rhs;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        Rat c = state(component_sentence(w, mask));
        if (c == 0)
            continue;
        rhs += free_wick(state, w.subword(mask_positions(n, mask))).terms * c;
    }
    LinComb<Word> lhs;
    lhs.add(w, 1);
    return lhs == rhs;
}

namespace {

// sum over interval partitions of the run (compositions into consecutive
// blocks) of (-1)^{blocks} times the product of free cumulants
Rat signed_interval_cumulants(const CumulantFunctional &kappa, const Word &run)
{
    if (run.empty())
        return 1;
    Rat acc = 0;
    for (std::size_t l = 1; l <= run.size(); ++l)
        acc -= kappa(run.slice(0, l)) *
               signed_interval_cumulants(kappa, run.slice(l, run.size()));
    return acc;
}

} // namespace

WickExpansion free_wick_via_cumulants(const SentenceState &state, const Word &w)
{
    require_wick_degree(w);
    unsigned n = static_cast<unsigned>(w.size());
    CumulantFunctional kappa =
        moments_to_cumulants(CumulantKind::free, state.base, std::max(n, 1u));
    WickExpansion out;
    out.input = w;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        // blocks of pi are integer intervals inside the complement runs, so
        // adjoining S as a block never creates a crossing
        Rat c = 1;
        for (const auto &comp : complement_components(n, mask)) {
            c *= signed_interval_cumulants(kappa, w.subword(comp));
            if (c == 0)
                break;
        }
        if (c != 0)
            out.terms.add(w.subword(mask_positions(n, mask)), c);
    }
    return out;
}

} // namespace ncprob
