#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncprob/prelie.hpp"

#include <random>

using namespace ncprob;

namespace {

Word parse_word(const std::string &s)
{
    std::vector<int> ls;
    for (char c : s)
        ls.push_back(c - 'a');
    return Word(ls);
}

Word xn(unsigned n) { return Word(std::vector<int>(n, 0)); }

std::vector<Word> all_words(unsigned alphabet, unsigned max_degree)
{
    std::vector<Word> out;
    for (unsigned d = 1; d <= max_degree; ++d) {
        std::vector<Word> level{Word()};
        for (unsigned i = 0; i < d; ++i) {
            std::vector<Word> next;
            for (const auto &w : level)
                for (unsigned g = 0; g < alphabet; ++g)
                    next.push_back(concat(w, Word::single(static_cast<int>(g))));
            level = std::move(next);
        }
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Infinitesimal random_infinitesimal(std::mt19937 &rng, unsigned alphabet,
                                   unsigned max_degree)
{
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::map<Word, Rat> vals;
    for (const auto &w : all_words(alphabet, max_degree))
        vals[w] = Rat(num(rng), den(rng));
    return Infinitesimal(alphabet, max_degree, std::move(vals));
}

MomentFunctional random_functional(std::mt19937 &rng, unsigned alphabet,
                                   unsigned max_degree)
{
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::map<Word, Rat> vals;
    for (const auto &w : all_words(alphabet, max_degree))
        vals[w] = Rat(num(rng), den(rng));
    return MomentFunctional(alphabet, max_degree, std::move(vals));
}

// delta functional: 1 on the given word, 0 elsewhere
Infinitesimal delta(unsigned alphabet, unsigned max_degree, const Word &w)
{
    std::map<Word, Rat> vals;
    vals[w] = 1;
    return Infinitesimal(alphabet, max_degree, std::move(vals));
}

} // namespace

TEST_CASE("prelie_product on delta functionals")
{
    // only strict insertions count: w1, w2, w3 all nonempty
    Infinitesimal dab = delta(2, 3, parse_word("ab"));
    Infinitesimal db = delta(2, 3, parse_word("b"));
    Infinitesimal p = prelie_product(dab, db);
    CHECK(p(parse_word("abb")) == -1); // one strict insertion, between a and b
    CHECK(p(parse_word("bab")) == 0);  // the b's touch the boundary
    CHECK(p(parse_word("ab")) == 0);
    CHECK(p(parse_word("aab")) == 0);
    CHECK(p(Word()) == 0);
}

TEST_CASE("prelie_product low-degree values with one letter")
{
    // v(x) = p, v(xx) = q, v(xxx) = s
    Rat p(3), q(1, 2), s(-2);
    std::map<Word, Rat> vals;
    vals[xn(1)] = p;
    vals[xn(2)] = q;
    vals[xn(3)] = s;
    Infinitesimal v(1, 4, vals);
    Infinitesimal vv = prelie_product(v, v);
    CHECK(vv(xn(2)) == 0);
    CHECK(vv(xn(3)) == -p * q);
    CHECK(vv(xn(4)) == -(2 * s * p + q * q));
}

TEST_CASE("prelie identity: associator symmetric in the last two arguments")
{
    std::mt19937 rng(11);
    for (int rep = 0; rep < 5; ++rep) {
        Infinitesimal a = random_infinitesimal(rng, 2, 4);
        Infinitesimal b = random_infinitesimal(rng, 2, 4);
        Infinitesimal c = random_infinitesimal(rng, 2, 4);
        auto assoc = [](const Infinitesimal &x, const Infinitesimal &y,
                        const Infinitesimal &z) {
            return prelie_product(prelie_product(x, y), z) +
                   -prelie_product(x, prelie_product(y, z));
        };
        CHECK(assoc(a, b, c) == assoc(a, c, b));
    }
}

TEST_CASE("commutator bracket satisfies Jacobi")
{
    std::mt19937 rng(12);
    auto br = [](const Infinitesimal &x, const Infinitesimal &y) {
        return prelie_product(x, y) + -prelie_product(y, x);
    };
    for (int rep = 0; rep < 3; ++rep) {
        Infinitesimal a = random_infinitesimal(rng, 1, 4);
        Infinitesimal b = random_infinitesimal(rng, 1, 4);
        Infinitesimal c = random_infinitesimal(rng, 1, 4);
        Infinitesimal sum = br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b));
        CHECK(sum == Infinitesimal(1, 4));
    }
}

TEST_CASE("symmetric braces: base case, n=2 expansion, symmetry")
{
    std::mt19937 rng(13);
    Infinitesimal v = random_infinitesimal(rng, 1, 4);
    Infinitesimal w1 = random_infinitesimal(rng, 1, 4);
    Infinitesimal w2 = random_infinitesimal(rng, 1, 4);
    Infinitesimal w3 = random_infinitesimal(rng, 1, 4);

    CHECK(symmetric_brace(v, {w1}) == prelie_product(v, w1));

    Infinitesimal lhs = symmetric_brace(v, {w1, w2});
    Infinitesimal rhs = prelie_product(prelie_product(v, w1), w2) +
                        -prelie_product(v, prelie_product(w1, w2));
    CHECK(lhs == rhs);
    CHECK(lhs == symmetric_brace(v, {w2, w1}));

    Infinitesimal b123 = symmetric_brace(v, {w1, w2, w3});
    CHECK(b123 == symmetric_brace(v, {w3, w1, w2}));
    CHECK(b123 == symmetric_brace(v, {w2, w3, w1}));

    CHECK_THROWS_AS(symmetric_brace(v, {}), std::invalid_argument);
}

TEST_CASE("star product structure in low arity")
{
    std::mt19937 rng(14);
    Infinitesimal a = random_infinitesimal(rng, 1, 4);
    Infinitesimal b = random_infinitesimal(rng, 1, 4);

    // a * b = ab + a{b}
    MonomialComb prod =
        star_product(FunctionalMonomial({a}), FunctionalMonomial({b}));
    CHECK(prod.terms().size() == 2);
    CHECK(prod.coeff(FunctionalMonomial({a, b})) == 1);
    CHECK(prod.coeff(FunctionalMonomial({prelie_product(a, b)})) == 1);
}

TEST_CASE("star product: two right factors expand as in the product formula")
{
    std::mt19937 rng(18);
    Infinitesimal a = random_infinitesimal(rng, 1, 4);
    Infinitesimal b1 = random_infinitesimal(rng, 1, 4);
    Infinitesimal b2 = random_infinitesimal(rng, 1, 4);

    MonomialComb prod =
        star_product(FunctionalMonomial({a}), FunctionalMonomial({b1, b2}));
    MonomialComb expected;
    expected.add(FunctionalMonomial({a, b1, b2}), 1);
    expected.add(FunctionalMonomial({prelie_product(a, b1), b2}), 1);
    expected.add(FunctionalMonomial({prelie_product(a, b2), b1}), 1);
    expected.add(FunctionalMonomial({symmetric_brace(a, {b1, b2})}), 1);
    CHECK(prod == expected);
}

TEST_CASE("star product is associative under brace evaluation")
{
    // monomial representatives are not canonical across regroupings, so
    // associativity is checked through the linear map v{.}
    std::mt19937 rng(15);
    for (int rep = 0; rep < 3; ++rep) {
        Infinitesimal v = random_infinitesimal(rng, 1, 5);
        MonomialComb x(FunctionalMonomial({random_infinitesimal(rng, 1, 5)}));
        MonomialComb y(FunctionalMonomial({random_infinitesimal(rng, 1, 5)}));
        MonomialComb z(FunctionalMonomial({random_infinitesimal(rng, 1, 5)}));
        CHECK(brace_with_monomials(v, star_product(star_product(x, y), z)) ==
              brace_with_monomials(v, star_product(x, star_product(y, z))));
    }
}

TEST_CASE("bernoulli numbers")
{
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == Rat(-1, 2));
    CHECK(bernoulli_number(2) == Rat(1, 6));
    CHECK(bernoulli_number(3) == 0);
    CHECK(bernoulli_number(4) == Rat(-1, 30));
    CHECK(bernoulli_number(5) == 0);
    CHECK(bernoulli_number(6) == Rat(1, 42));
}

TEST_CASE("magnus expansion coefficients -1/2, 1/4, 1/12")
{
    std::mt19937 rng(16);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (int rep = 0; rep < 5; ++rep) {
        Rat p(num(rng), den(rng)), q(num(rng), den(rng)), s(num(rng), den(rng)),
            u(num(rng), den(rng));
        std::map<Word, Rat> vals;
        vals[xn(1)] = p;
        vals[xn(2)] = q;
        vals[xn(3)] = s;
        vals[xn(4)] = u;
        Infinitesimal v(1, 4, vals);

        Infinitesimal vv = prelie_product(v, v);
        Infinitesimal l = prelie_product(v, vv);  // v{v{v}}, degree >= 5 here
        Infinitesimal r = prelie_product(vv, v);  // (v{v}){v}
        CHECK(l(xn(4)) == 0);
        CHECK(r(xn(4)) == 2 * p * p * q);

        Infinitesimal omega = magnus(v, 4);
        CHECK(omega(xn(1)) == p);
        CHECK(omega(xn(2)) == q);
        CHECK(omega(xn(3)) == s + Rat(-1, 2) * vv(xn(3)));
        CHECK(omega(xn(3)) == s + p * q / 2);
        CHECK(omega(xn(4)) == u + Rat(-1, 2) * vv(xn(4)) + Rat(1, 4) * l(xn(4)) +
                                  Rat(1, 12) * r(xn(4)));
        CHECK(omega(xn(4)) == u + s * p + q * q / 2 + p * p * q / 6);
    }
}

TEST_CASE("magnus expansion over two letters, word by word")
{
    std::mt19937 rng(19);
    Infinitesimal v = random_infinitesimal(rng, 2, 4);
    Infinitesimal vv = prelie_product(v, v);
    Infinitesimal l = prelie_product(v, vv);
    Infinitesimal r = prelie_product(vv, v);
    Infinitesimal omega = magnus(v, 4);
    // monomials with four or more factors of v only reach degree 5
    for (const auto &w : all_words(2, 4))
        CHECK(omega(w) == v(w) + Rat(-1, 2) * vv(w) + Rat(1, 4) * l(w) +
                              Rat(1, 12) * r(w));
}

TEST_CASE("magnus satisfies its fixed point equation")
{
    std::mt19937 rng(20);
    Infinitesimal v = random_infinitesimal(rng, 2, 4);
    Infinitesimal omega = magnus(v, 4);
    Infinitesimal rhs = v;
    for (unsigned n = 1; n <= 3; ++n)
        rhs += (bernoulli_number(n) / Rat(factorial(n))) *
               brace_with_monomials(v, star_power(omega, n));
    CHECK(rhs == omega);
}

TEST_CASE("magnus fixed points")
{
    // zero input
    CHECK(magnus(Infinitesimal(2, 4), 4) == Infinitesimal(2, 4));

    // v supported in top degree: all brace terms are truncated away
    Infinitesimal top = delta(1, 4, xn(3));
    Infinitesimal omega = magnus(top, 4);
    CHECK(omega(xn(3)) == 1);
    CHECK(omega(xn(1)) == 0);
    CHECK(omega(xn(2)) == 0);
    CHECK(omega(xn(4)) == 0);
}

TEST_CASE("magnus links free, boolean and monotone cumulants: models")
{
    for (auto model : {MomentModel::gaussian, MomentModel::semicircle,
                       MomentModel::bernoulli, MomentModel::arcsine}) {
        MomentFunctional phi(model);
        CHECK(magnus_inverse_check(phi, 5));
    }
}

TEST_CASE("magnus links free, boolean and monotone cumulants: random states")
{
    std::mt19937 rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        unsigned alphabet = (rep % 2) + 1;
        MomentFunctional phi = random_functional(rng, alphabet, 5);
        CHECK(magnus_inverse_check(phi, 5));
    }
}
