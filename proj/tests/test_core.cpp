#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncprob/moments.hpp"
#include "ncprob/partitions.hpp"
#include "ncprob/rational.hpp"
#include "ncprob/word.hpp"

#include <random>

using namespace ncprob;

namespace {

Rat random_rat(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    return Rat(num(rng), den(rng));
}

Word parse_word(const std::string &s)
{
    std::vector<int> ls;
    for (char c : s)
        ls.push_back(c - 'a');
    return Word(ls);
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(rat_to_string(Rat(3, 6)) == "1/2");
    CHECK(rat_to_string(Rat(-4, 2)) == "-2");
    CHECK(rat_from_string("7/21") == Rat(1, 3));
    CHECK(rat_from_string("-5") == Rat(-5));
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("rational field laws on random triples")
{
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        Rat a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);
        CHECK((a + b) * c == a * c + b * c);
        if (a != 0)
            CHECK(a * (Rat(1) / a) == 1);
    }
}

TEST_CASE("concat basics and unit laws")
{
    CHECK(concat(parse_word("ab"), parse_word("c")) == parse_word("abc"));
    CHECK(concat(Word(), parse_word("xy")) == parse_word("xy"));
    CHECK(concat(parse_word("x"), parse_word("x")) == parse_word("xx"));
}

TEST_CASE("concat associativity on random triples")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> len(0, 5);
    std::uniform_int_distribution<int> letter(0, 2);
    for (int i = 0; i < 100; ++i) {
        auto rand_word = [&] {
            std::vector<int> ls;
            int n = len(rng);
            for (int j = 0; j < n; ++j)
                ls.push_back(letter(rng));
            return Word(ls);
        };
        Word a = rand_word(), b = rand_word(), c = rand_word();
        CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
        CHECK(concat(a, Word()) == a);
        CHECK(concat(Word(), a) == a);
    }
}

TEST_CASE("model moments")
{
    CHECK(model_moments(MomentModel::semicircle, 4) == 2);
    CHECK(model_moments(MomentModel::bernoulli, 6) == 1);
    CHECK(model_moments(MomentModel::arcsine, 4) == Rat(3, 2));
    CHECK(model_moments(MomentModel::gaussian, 4) == 3);
    for (auto m : {MomentModel::gaussian, MomentModel::semicircle,
                   MomentModel::bernoulli, MomentModel::arcsine}) {
        CHECK(model_moments(m, 0) == 1);
        CHECK(model_moments(m, 3) == 0);
        CHECK(model_moments(m, 5) == 0);
    }
    CHECK_THROWS_AS(moment_model_from_name("cauchy"), std::invalid_argument);
}

TEST_CASE("semicircle moments equal noncrossing pair-partition counts")
{
    for (int n = 0; n <= 10; ++n) {
        Rat m = model_moments(MomentModel::semicircle, static_cast<unsigned>(n));
        auto ncp = enumerate_partitions(PartitionKind::nc_pair, n);
        CHECK(m == Rat(static_cast<int>(ncp.size())));
    }
}

TEST_CASE("gaussian moments equal pair-partition counts")
{
    for (int n = 0; n <= 8; ++n) {
        Rat m = model_moments(MomentModel::gaussian, static_cast<unsigned>(n));
        auto pp = enumerate_partitions(PartitionKind::pair, n);
        CHECK(m == Rat(static_cast<int>(pp.size())));
    }
}

TEST_CASE("evaluate is unital and linear")
{
    MomentFunctional phi(MomentModel::gaussian);
    CHECK(evaluate(phi, LinComb<Word>(parse_word("aa"))) == 1);
    CHECK(evaluate(phi, LinComb<Word>(parse_word("aaaa"))) == 3);
    CHECK(evaluate(phi, LinComb<Word>()) == 0);
    CHECK(phi(Word()) == 1);

    std::mt19937 rng(7);
    for (int i = 0; i < 30; ++i) {
        LinComb<Word> c1, c2;
        std::uniform_int_distribution<int> len(0, 6);
        for (int t = 0; t < 4; ++t) {
            c1.add(Word(std::vector<int>(static_cast<std::size_t>(len(rng)), 0)),
                   random_rat(rng));
            c2.add(Word(std::vector<int>(static_cast<std::size_t>(len(rng)), 0)),
                   random_rat(rng));
        }
        Rat alpha = random_rat(rng), beta = random_rat(rng);
        CHECK(evaluate(phi, alpha * c1 + beta * c2) ==
              alpha * evaluate(phi, c1) + beta * evaluate(phi, c2));
    }
}

TEST_CASE("tabulated functional enforces degree bound and unitality")
{
    std::map<Word, Rat> vals;
    vals[parse_word("a")] = Rat(1, 2);
    vals[parse_word("ab")] = Rat(3);
    MomentFunctional phi(2, 2, vals);
    CHECK(phi(parse_word("a")) == Rat(1, 2));
    CHECK(phi(parse_word("ba")) == 0);
    CHECK(phi(Word()) == 1);
    CHECK_THROWS_AS(phi(parse_word("aaa")), std::out_of_range);

    std::map<Word, Rat> bad;
    bad[Word()] = Rat(2);
    CHECK_THROWS_AS(MomentFunctional(1, 2, bad), std::invalid_argument);
}
