#include "ncprob/moments.hpp"

namespace ncprob {

MomentModel moment_model_from_name(const std::string &name)
{
    if (name == "gaussian")
        return MomentModel::gaussian;
    if (name == "semicircle")
        return MomentModel::semicircle;
    if (name == "bernoulli")
        return MomentModel::bernoulli;
    if (name == "arcsine")
        return MomentModel::arcsine;
    throw std::invalid_argument("unknown model name: '" + name + "'");
}

std::string moment_model_name(MomentModel m)
{
    switch (m) {
    case MomentModel::gaussian: return "gaussian";
    case MomentModel::semicircle: return "semicircle";
    case MomentModel::bernoulli: return "bernoulli";
    case MomentModel::arcsine: return "arcsine";
    }
    throw std::logic_error("bad model");
}

Rat model_moments(MomentModel model, unsigned n)
{
    if (n % 2 == 1)
        return 0;
    unsigned k = n / 2;
    switch (model) {
    case MomentModel::gaussian:
        return Rat(double_factorial_odd(n > 0 ? n - 1 : 0));
    case MomentModel::semicircle:
        return Rat(catalan(k));
    case MomentModel::bernoulli:
        return 1;
    case MomentModel::arcsine:
        return Rat(binomial(n, k), Int(1) << k);
    }
    throw std::logic_error("bad model");
}

MomentFunctional::MomentFunctional(unsigned alphabet_size, unsigned max_degree,
                                   std::map<Word, Rat> values)
    : alphabet_size_(alphabet_size), max_degree_(max_degree),
      values_(std::move(values))
{
    for (const auto &[w, v] : values_) {
        if (w.size() > max_degree)
            throw std::invalid_argument("tabulated word beyond max_degree");
        for (int g : w.letters)
            if (g < 0 || static_cast<unsigned>(g) >= alphabet_size)
                throw std::invalid_argument("word letter outside alphabet");
        if (w.empty() && v != 1)
            throw std::invalid_argument("empty word must have value 1");
    }
}

MomentFunctional::MomentFunctional(MomentModel model)
    : alphabet_size_(1), model_(model)
{
}

Rat MomentFunctional::operator()(const Word &w) const
{
    if (w.empty())
        return 1;
    if (model_) {
        for (int g : w.letters)
            if (g != 0)
                throw std::invalid_argument("model functional has one generator");
        return model_moments(*model_, static_cast<unsigned>(w.size()));
    }
    if (w.size() > *max_degree_)
        throw std::out_of_range("word '" + word_to_string(w) +
                                "' beyond declared degree bound " +
                                std::to_string(*max_degree_));
    auto it = values_.find(w);
    return it == values_.end() ? Rat(0) : it->second;
}

Rat evaluate(const MomentFunctional &phi, const LinComb<Word> &c)
{
    Rat s = 0;
    for (const auto &[w, coeff] : c.terms())
        s += coeff * phi(w);
    return s;
}

} // namespace ncprob
