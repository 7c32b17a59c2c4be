#include "ncprob/cumulants.hpp"

#include <mutex>
#include <stdexcept>

namespace ncprob {

CumulantKind cumulant_kind_from_name(const std::string &name)
{
    if (name == "classical" || name == "tensor")
        return CumulantKind::classical;
    if (name == "free")
        return CumulantKind::free;
    if (name == "boolean")
        return CumulantKind::boolean_;
    if (name == "monotone")
        return CumulantKind::monotone;
    throw std::invalid_argument("unknown cumulant kind: '" + name + "'");
}

std::string cumulant_kind_name(CumulantKind k)
{
    switch (k) {
    case CumulantKind::classical: return "classical";
    case CumulantKind::free: return "free";
    case CumulantKind::boolean_: return "boolean";
    case CumulantKind::monotone: return "monotone";
    }
    throw std::logic_error("bad kind");
}

CumulantFunctional::CumulantFunctional(CumulantKind kind, unsigned alphabet_size,
                                       unsigned max_degree,
                                       std::map<Word, Rat> values)
    : kind_(kind), alphabet_size_(alphabet_size), max_degree_(max_degree),
      values_(std::move(values))
{
    for (const auto &[w, v] : values_)
        if (w.empty() || w.size() > max_degree)
            throw std::invalid_argument("cumulant word empty or beyond bound");
}

Rat CumulantFunctional::operator()(const Word &w) const
{
    if (w.empty())
        throw std::invalid_argument("cumulants are not defined on the empty word");
    if (w.size() > max_degree_)
        throw std::out_of_range("word beyond cumulant degree bound");
    auto it = values_.find(w);
    return it == values_.end() ? Rat(0) : it->second;
}

namespace {

Rat restrict_product_impl(const std::map<Word, Rat> &values, const Word &w,
                          const SetPartition &p)
{
    Rat prod = 1;
    for (const auto &block : p.blocks) {
        std::vector<int> idx;
        idx.reserve(block.size());
        for (int e : block)
            idx.push_back(e - 1);
        Word sub = w.subword(idx);
        auto it = values.find(sub);
        if (it == values.end())
            return 0;
        prod *= it->second;
        if (prod == 0)
            return 0;
    }
    return prod;
}

} // namespace

Rat restrict_product(const CumulantFunctional &f, const Word &w,
                     const SetPartition &p)
{
    if (static_cast<int>(w.size()) != p.n)
        throw std::invalid_argument("word length does not match partition size");
    Rat prod = 1;
    for (const auto &block : p.blocks) {
        std::vector<int> idx;
        idx.reserve(block.size());
        for (int e : block)
            idx.push_back(e - 1);
        prod *= f(w.subword(idx));
    }
    return prod;
}

Rat partition_weight(CumulantKind kind, const SetPartition &p)
{
    if (kind != CumulantKind::monotone)
        return 1;
    return Rat(1) / tree_factorial(nesting_forest(p));
}

const std::vector<SetPartition> &cumulant_partitions(CumulantKind kind, int n)
{
    static std::map<std::pair<int, int>, std::vector<SetPartition>> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(static_cast<int>(kind), n);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    PartitionKind pk;
    switch (kind) {
    case CumulantKind::classical: pk = PartitionKind::all; break;
    case CumulantKind::free: pk = PartitionKind::noncrossing; break;
    case CumulantKind::boolean_: pk = PartitionKind::interval; break;
    case CumulantKind::monotone: pk = PartitionKind::noncrossing; break;
    }
    return cache.emplace(key, enumerate_partitions(pk, n)).first->second;
}

CumulantFunctional moments_to_cumulants(CumulantKind kind,
                                        const MomentFunctional &phi,
                                        unsigned max_degree)
{
    std::map<Word, Rat> values;
    for (unsigned d = 1; d <= max_degree; ++d) {
        for (const Word &w : words_of_length(phi.alphabet_size(), d)) {
            // isolate the full-block term; every other term uses lower degrees
            Rat rest = 0;
            for (const auto &p : cumulant_partitions(kind, static_cast<int>(d))) {
                if (p.block_count() == 1)
                    continue;
                rest += partition_weight(kind, p) *
                        restrict_product_impl(values, w, p);
            }
            values[w] = phi(w) - rest;
        }
    }
    return CumulantFunctional(kind, phi.alphabet_size(), max_degree,
                              std::move(values));
}

Rat cumulants_to_moments(const CumulantFunctional &f, const Word &w)
{
    if (w.empty())
        return 1;
    if (w.size() > f.max_degree())
        throw std::out_of_range("word beyond cumulant degree bound");
    Rat sum = 0;
    for (const auto &p :
         cumulant_partitions(f.kind(), static_cast<int>(w.size())))
        sum += partition_weight(f.kind(), p) * restrict_product(f, w, p);
    return sum;
}

Rat boolean_from_free(const CumulantFunctional &r, const Word &w)
{
    Rat sum = 0;
    for (const auto &p :
         enumerate_partitions(PartitionKind::nc_irreducible,
                              static_cast<int>(w.size())))
        sum += restrict_product(r, w, p);
    return sum;
}

Rat monotone_from_free(const CumulantFunctional &r, const Word &w)
{
    Rat sum = 0;
    for (const auto &p :
         enumerate_partitions(PartitionKind::nc_irreducible,
                              static_cast<int>(w.size()))) {
        Forest f = nesting_forest(p);
        Rat sign = (p.block_count() % 2 == 1) ? 1 : -1;
        sum += sign * omega_weight(f.front()) * restrict_product(r, w, p);
    }
    return sum;
}

bool mixed_cumulant_check(CumulantKind kind, const MomentFunctional &phi,
                          const std::vector<int> &group_a, unsigned max_degree)
{
    CumulantFunctional c = moments_to_cumulants(kind, phi, max_degree);
    auto in_a = [&](int g) {
        return std::find(group_a.begin(), group_a.end(), g) != group_a.end();
    };
    for (unsigned d = 2; d <= max_degree; ++d) {
        for (const Word &w : words_of_length(phi.alphabet_size(), d)) {
            bool has_a = false, has_b = false;
            for (int g : w.letters)
                (in_a(g) ? has_a : has_b) = true;
            if (has_a && has_b && c(w) != 0)
                return false;
        }
    }
    return true;
}

} // namespace ncprob
