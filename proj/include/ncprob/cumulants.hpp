#pragma once

#include "ncprob/moments.hpp"
#include "ncprob/partitions.hpp"
#include "ncprob/rational.hpp"
#include "ncprob/word.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncprob {

// Selects the partition family and weight of the defining moment-cumulant
// equation: all partitions / noncrossing / interval / noncrossing with
// 1/t(pi)! weights.
enum class CumulantKind { classical, free, boolean_, monotone };

CumulantKind cumulant_kind_from_name(const std::string &name);
std::string cumulant_kind_name(CumulantKind k);

// Multilinear cumulant family indexed by word length, tabulated up to a
// degree bound. No value on the empty word.
class CumulantFunctional {
  public:
    CumulantFunctional(CumulantKind kind, unsigned alphabet_size,
                       unsigned max_degree, std::map<Word, Rat> values);

    CumulantKind kind() const { return kind_; }
    unsigned alphabet_size() const { return alphabet_size_; }
    unsigned max_degree() const { return max_degree_; }

    Rat operator()(const Word &w) const;

  private:
    CumulantKind kind_;
    unsigned alphabet_size_;
    unsigned max_degree_;
    std::map<Word, Rat> values_;
};

// Product over the blocks of p of f on the subword indexed by each block.
Rat restrict_product(const CumulantFunctional &f, const Word &w,
                     const SetPartition &p);

// Weight of a partition in the defining equation of the given theory.
Rat partition_weight(CumulantKind kind, const SetPartition &p);

// Partition family of the given theory in degree n (cached).
const std::vector<SetPartition> &cumulant_partitions(CumulantKind kind, int n);

// Solves the defining equation degree by degree (triangular system).
CumulantFunctional moments_to_cumulants(CumulantKind kind,
                                        const MomentFunctional &phi,
                                        unsigned max_degree);

// Forward direction of the defining equation.
Rat cumulants_to_moments(const CumulantFunctional &f, const Word &w);

// Boolean cumulant from free cumulants: sum of r_pi over irreducible
// noncrossing partitions.
Rat boolean_from_free(const CumulantFunctional &r, const Word &w);

// Monotone cumulant from free cumulants: omega-weighted alternating sum over
// irreducible noncrossing partitions.
Rat monotone_from_free(const CumulantFunctional &r, const Word &w);

// True iff every cumulant on a word mixing the two generator groups vanishes
// up to max_degree. group_a lists the generator ids of one side.
bool mixed_cumulant_check(CumulantKind kind, const MomentFunctional &phi,
                          const std::vector<int> &group_a, unsigned max_degree);

} // namespace ncprob
