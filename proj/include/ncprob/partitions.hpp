#pragma once

#include "ncprob/rational.hpp"

#include <string>
#include <vector>

namespace ncprob {

// Partition of [n] = {1,...,n}. Blocks hold sorted 1-based elements and are
// ordered by minimal element.
struct SetPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    SetPartition() = default;
    SetPartition(int n_, std::vector<std::vector<int>> blocks_);

    int block_count() const { return static_cast<int>(blocks.size()); }
    auto operator<=>(const SetPartition &) const = default;
};

enum class PartitionKind { all, noncrossing, interval, nc_irreducible, pair, nc_pair };

PartitionKind partition_kind_from_name(const std::string &name);

// Rooted tree with unordered children; node payload is a block index.
struct RootedTree {
    int block = -1;
    std::vector<RootedTree> children;

    int node_count() const
    {
        int c = 1;
        for (const auto &ch : children)
            c += ch.node_count();
        return c;
    }
};

using Forest = std::vector<RootedTree>;

constexpr int kDefaultEnumerationBound = 12;

// Complete duplicate-free list in canonical order.
std::vector<SetPartition> enumerate_partitions(PartitionKind kind, int n,
                                               int bound = kDefaultEnumerationBound);

bool is_noncrossing(const SetPartition &p);
// 1 and n share a block; requires p noncrossing.
bool is_irreducible(const SetPartition &p);

// Hasse forest of the nesting (surrounds) order on blocks of a noncrossing
// partition; a single tree iff the partition is irreducible.
Forest nesting_forest(const SetPartition &p);

Rat tree_factorial(const RootedTree &t);
Rat tree_factorial(const Forest &f);

// Alternating weighted count of strictly order-preserving surjections of the
// tree poset onto [k], summed over k.
Rat omega_weight(const RootedTree &t);

// Signed Stirling number of the first kind: coefficient of x^i in the falling
// factorial x(x-1)...(x-j+1).
Rat stirling_first(unsigned j, unsigned i);

Int bell_number(unsigned n);

// Text form "1,4|2,3"; the empty partition of [0] prints as "".
std::string partition_to_string(const SetPartition &p);
SetPartition partition_from_string(int n, const std::string &s);

} // namespace ncprob
