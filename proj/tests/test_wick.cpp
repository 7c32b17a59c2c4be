#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncprob/wick.hpp"

#include <array>
#include <random>

using namespace ncprob;

namespace {

Word xw(unsigned n) { return Word(std::vector<int>(n, 0)); }

std::vector<Word> all_words(unsigned alphabet, unsigned max_degree)
{
    std::vector<Word> out;
    for (unsigned d = 1; d <= max_degree; ++d) {
        auto level = words_of_length(alphabet, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

MomentFunctional random_functional(std::mt19937 &rng, unsigned alphabet,
                                   unsigned max_degree, bool centered = false)
{
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::map<Word, Rat> vals;
    for (const auto &w : all_words(alphabet, max_degree))
        vals[w] = (centered && w.size() == 1) ? Rat(0) : Rat(num(rng), den(rng));
    return MomentFunctional(alphabet, max_degree, std::move(vals));
}

// He_{n+1} = x He_n - n He_{n-1}
Polynomial hermite(unsigned n)
{
    Polynomial prev = Polynomial::monomial(0);
    if (n == 0)
        return prev;
    Polynomial cur = Polynomial::monomial(1);
    for (unsigned k = 1; k < n; ++k) {
        Polynomial next = Polynomial::monomial(1) * cur;
        next += prev * Rat(-static_cast<int>(k));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Appell recursion with the centering condition as an independent oracle:
// W_0 = 1, W_n' = n W_{n-1}, constant term fixed by sum_k c_k m_k = 0.
Polynomial appell_oracle(const MomentFunctional &phi, unsigned n)
{
    Polynomial w = Polynomial::monomial(0);
    for (unsigned k = 1; k <= n; ++k) {
        Polynomial next;
        for (const auto &[e, c] : w.coeffs)
            next += Polynomial::monomial(e + 1, c * Rat(k) / Rat(e + 1));
        Rat mean = 0;
        for (const auto &[e, c] : next.coeffs)
            mean += c * phi(xw(e));
        next += Polynomial::monomial(0, -mean);
        w = std::move(next);
    }
    return w;
}

// sentence coproduct by the multiplicative extension, each word's left
// subword kept whole and the legs concatenated across the bars
LinComb<std::pair<Sentence, Sentence>> sentence_coproduct(const Sentence &s)
{
    LinComb<std::pair<Sentence, Sentence>> acc(
        {Sentence(), Sentence()});
    for (const auto &w : s.words) {
        LinComb<std::pair<Sentence, Sentence>> next;
        for (const auto &[legs, c] : acc)
            for (const auto &[split, d] : double_coproduct(w)) {
                Sentence left = legs.first;
                if (!split.first.empty())
                    left = concat(left, Sentence({split.first}));
                next.add({left, concat(legs.second, split.second)}, c * d);
            }
        acc = std::move(next);
    }
    return acc;
}

using Triple = std::array<Sentence, 3>;

} // namespace

TEST_CASE("polynomial basics")
{
    Polynomial p({{0, Rat(-1)}, {2, Rat(1)}});
    CHECK(polynomial_to_string(p) == "x^2 - 1");
    CHECK(polynomial_to_string(hermite(3)) == "x^3 - 3*x");
    CHECK(polynomial_to_string(Polynomial()) == "0");
    CHECK(p.derivative() == Polynomial::monomial(1, 2));
    CHECK((p * p).coeff(4) == 1);
    CHECK((p * p).coeff(2) == -2);
    CHECK((p * p).coeff(0) == 1);
}

TEST_CASE("classical wick recovers Hermite polynomials")
{
    MomentFunctional g(MomentModel::gaussian);
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(classical_wick(g, n) == hermite(n));
    CHECK(classical_wick(g, 0) == Polynomial::monomial(0));
    CHECK(classical_wick(g, 2) == Polynomial({{2, Rat(1)}, {0, Rat(-1)}}));
    CHECK(classical_wick(g, 3) == Polynomial({{3, Rat(1)}, {1, Rat(-3)}}));
}

TEST_CASE("classical wick for arbitrary moments")
{
    std::mt19937 rng(41);
    for (int rep = 0; rep < 5; ++rep) {
        MomentFunctional phi = random_functional(rng, 1, 8);
        // the geometric series really inverts phi
        for (unsigned n = 0; n <= 8; ++n) {
            Rat conv = 0;
            for (unsigned k = 0; k <= n; ++k)
                conv += Rat(binomial(n, k)) * classical_phi_inverse(phi, k) *
                        phi(xw(n - k));
            CHECK(conv == (n == 0 ? 1 : 0));
        }
        for (unsigned n = 0; n <= 8; ++n) {
            Polynomial w = classical_wick(phi, n);
            CHECK(w == appell_oracle(phi, n));
            CHECK(w.coeff(n) == 1);
            if (n > 0) {
                CHECK(w.derivative() == classical_wick(phi, n - 1) * Rat(n));
                Rat mean = 0;
                for (const auto &[e, c] : w.coeffs)
                    mean += c * phi(xw(e));
                CHECK(mean == 0);
            }
        }
    }
    MomentFunctional shallow = random_functional(rng, 1, 3);
    CHECK_THROWS_AS(classical_wick(shallow, 5), std::out_of_range);
}

TEST_CASE("wick product")
{
    MomentFunctional g(MomentModel::gaussian);
    Polynomial x = Polynomial::monomial(1);
    CHECK(wick_product(g, x, x) == hermite(2));
    CHECK(wick_product(g, hermite(2), x) == hermite(3));
    CHECK(wick_product(g, hermite(3), hermite(2)) ==
          wick_product(g, hermite(2), hermite(3)));

    std::mt19937 rng(42);
    MomentFunctional phi = random_functional(rng, 1, 12);
    Polynomial p({{2, Rat(1)}, {1, Rat(-2)}});
    Polynomial q({{3, Rat(1, 2)}, {0, Rat(5)}});
    Polynomial r({{1, Rat(7)}});
    CHECK(wick_product(phi, Polynomial::monomial(0), q) == q);
    CHECK(wick_product(phi, p, q) == wick_product(phi, q, p));
    CHECK(wick_product(phi, wick_product(phi, p, q), r) ==
          wick_product(phi, p, wick_product(phi, q, r)));
}

TEST_CASE("double coproduct")
{
    Word ab({0, 1});
    auto d = double_coproduct(ab);
    CHECK(d.term_count() == 4);
    CHECK(d.coeff({ab, Sentence()}) == 1);
    CHECK(d.coeff({Word(), Sentence({ab})}) == 1);
    CHECK(d.coeff({Word({0}), Sentence({Word({1})})}) == 1);
    CHECK(d.coeff({Word({1}), Sentence({Word({0})})}) == 1);

    // S = {2} inside abc: complement splits into two components
    Word abc({0, 1, 2});
    CHECK(double_coproduct(abc).coeff(
              {Word({1}), Sentence({Word({0}), Word({2})})}) == 1);

    // counit property: the S = [n] and S = empty terms reproduce w
    for (const auto &w : all_words(2, 4)) {
        auto dd = double_coproduct(w);
        // repeated letters can merge basis elements; the mass is 2^n
        Rat mass = 0;
        for (const auto &[t, c] : dd)
            mass += c;
        CHECK(mass == Rat(Int(1) << w.size()));
        CHECK(dd.coeff({w, Sentence()}) == 1);
        CHECK(dd.coeff({Word(), Sentence({w})}) == 1);
    }

    CHECK_THROWS_AS(double_coproduct(Word()), std::invalid_argument);
}

TEST_CASE("double coproduct is coassociative")
{
    for (const auto &w : all_words(2, 4)) {
        LinComb<Triple> way1, way2;
        auto d = sentence_coproduct(Sentence({w}));
        for (const auto &[legs, c] : d) {
            for (const auto &[inner, e] : sentence_coproduct(legs.first))
                way1.add({inner.first, inner.second, legs.second}, c * e);
            for (const auto &[inner, e] : sentence_coproduct(legs.second))
                way2.add({legs.first, inner.first, inner.second}, c * e);
        }
        CHECK(way1 == way2);
    }
}

TEST_CASE("phi inverse on sentences")
{
    std::mt19937 rng(43);
    MomentFunctional phi = random_functional(rng, 2, 5);
    SentenceState state(phi);

    Word a({0}), b({1});
    CHECK(phi_inverse(state, Sentence()) == 1);
    CHECK(phi_inverse(state, Sentence({a})) == -phi(a));
    Word ab({0, 1});
    CHECK(phi_inverse(state, Sentence({ab})) ==
          -phi(ab) + 2 * phi(a) * phi(b));
    // multiplicative over the bars
    CHECK(phi_inverse(state, Sentence({ab, a})) ==
          phi_inverse(state, Sentence({ab})) * phi_inverse(state, Sentence({a})));

    // convolution inverse: sum inv(s_1) Phi(s_2) over the coproduct vanishes
    for (const auto &w : all_words(2, 5)) {
        Rat conv = 0;
        for (const auto &[legs, c] : sentence_coproduct(Sentence({w})))
            conv += c * phi_inverse(state, legs.first) * state(legs.second);
        CHECK(conv == 0);
    }
}

TEST_CASE("free wick matches the printed low-degree expansions")
{
    std::mt19937 rng(44);
    MomentFunctional phi = random_functional(rng, 3, 3);
    SentenceState state(phi);
    auto m = [&](std::initializer_list<int> ls) { return phi(Word(ls)); };

    auto w1 = free_wick(state, Word({0}));
    CHECK(w1.terms.coeff(Word({0})) == 1);
    CHECK(w1.terms.coeff(Word()) == -m({0}));
    CHECK(w1.terms.term_count() == 2);

    auto w2 = free_wick(state, Word({0, 1}));
    CHECK(w2.terms.coeff(Word({0, 1})) == 1);
    CHECK(w2.terms.coeff(Word({0})) == -m({1}));
    CHECK(w2.terms.coeff(Word({1})) == -m({0}));
    CHECK(w2.terms.coeff(Word()) == -(m({0, 1}) - 2 * m({0}) * m({1})));

    auto w3 = free_wick(state, Word({0, 1, 2}));
    CHECK(w3.terms.coeff(Word({0, 1, 2})) == 1);
    CHECK(w3.terms.coeff(Word({0, 1})) == -m({2}));
    CHECK(w3.terms.coeff(Word({0, 2})) == -m({1}));
    CHECK(w3.terms.coeff(Word({1, 2})) == -m({0}));
    CHECK(w3.terms.coeff(Word({0})) == -(m({1, 2}) - 2 * m({1}) * m({2})));
    CHECK(w3.terms.coeff(Word({1})) == m({0}) * m({2}));
    CHECK(w3.terms.coeff(Word({2})) == -(m({0, 1}) - 2 * m({0}) * m({1})));
    CHECK(w3.terms.coeff(Word()) ==
          -(m({0, 1, 2}) - 2 * m({0}) * m({1, 2}) - 2 * m({2}) * m({0, 1}) -
            m({1}) * m({0, 2}) + 5 * m({0}) * m({1}) * m({2})));
}

TEST_CASE("centering and inversion")
{
    std::mt19937 rng(45);
    for (int rep = 0; rep < 10; ++rep) {
        MomentFunctional phi = random_functional(rng, 2, 5);
        SentenceState state(phi);
        for (const auto &w : all_words(2, 5)) {
            // Phi(W(w)) = 0
            CHECK(evaluate(phi, free_wick(state, w).terms) == 0);
            if (w.size() <= 4)
                CHECK(wick_inversion(state, w));
        }
    }

    // degree-1 and centered degree-2 rearrangements
    std::mt19937 rng2(46);
    MomentFunctional phi = random_functional(rng2, 2, 2);
    SentenceState state(phi);
    Word a({0});
    auto w1 = free_wick(state, a).terms;
    LinComb<Word> lhs(a);
    CHECK(lhs == w1 + LinComb<Word>(Word(), phi(a)));

    MomentFunctional cphi = random_functional(rng2, 2, 2, true);
    SentenceState cstate(cphi);
    Word ab({0, 1});
    auto w2 = free_wick(cstate, ab).terms;
    LinComb<Word> lhs2(ab);
    CHECK(lhs2 == w2 + LinComb<Word>(Word(), cphi(ab)));
}

TEST_CASE("free wick via cumulants")
{
    std::mt19937 rng(47);
    for (int rep = 0; rep < 5; ++rep) {
        MomentFunctional phi = random_functional(rng, 2, 4);
        SentenceState state(phi);
        for (const auto &w : all_words(2, 4))
            CHECK(free_wick_via_cumulants(state, w).terms ==
                  free_wick(state, w).terms);
    }

    // |w| = 1: a - kappa_1(a) with kappa_1 = phi
    MomentFunctional phi = random_functional(rng, 2, 2);
    SentenceState state(phi);
    Word a({0});
    auto v1 = free_wick_via_cumulants(state, a).terms;
    CHECK(v1.coeff(a) == 1);
    CHECK(v1.coeff(Word()) == -phi(a));

    // centered |w| = 2: constant term -kappa_2 = -phi(a_1 a_2)
    MomentFunctional cphi = random_functional(rng, 2, 2, true);
    SentenceState cstate(cphi);
    Word ab({0, 1});
    auto v2 = free_wick_via_cumulants(cstate, ab).terms;
    CHECK(v2.coeff(Word()) == -cphi(ab));
    CHECK(v2.coeff(Word({0})) == 0);
    CHECK(v2.coeff(Word({1})) == 0);
}
