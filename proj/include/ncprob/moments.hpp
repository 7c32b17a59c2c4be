#pragma once

#include "ncprob/lincomb.hpp"
#include "ncprob/rational.hpp"
#include "ncprob/word.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncprob {

enum class MomentModel { gaussian, semicircle, bernoulli, arcsine };

MomentModel moment_model_from_name(const std::string &name);
std::string moment_model_name(MomentModel m);

// n-th moment of the named single-variable law; odd moments vanish.
Rat model_moments(MomentModel model, unsigned n);

// Unital linear form on words, either tabulated up to a declared degree or
// backed by a named single-generator model.
class MomentFunctional {
  public:
    // Tabulated functional; the empty word defaults to 1.
    MomentFunctional(unsigned alphabet_size, unsigned max_degree,
                     std::map<Word, Rat> values);
    // Model functional on one generator, unbounded degree.
    explicit MomentFunctional(MomentModel model);

    unsigned alphabet_size() const { return alphabet_size_; }
    // Tabulated functionals reject words beyond this bound.
    std::optional<unsigned> max_degree() const { return max_degree_; }
    std::optional<MomentModel> model() const { return model_; }

    Rat operator()(const Word &w) const;

    std::vector<std::string> generator_names;

  private:
    unsigned alphabet_size_;
    std::optional<unsigned> max_degree_;
    std::optional<MomentModel> model_;
    std::map<Word, Rat> values_;
};

// Linear extension of phi to formal combinations of words.
Rat evaluate(const MomentFunctional &phi, const LinComb<Word> &c);

} // namespace ncprob
