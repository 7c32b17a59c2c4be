#include "ncprob/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ncprob {

SetPartition::SetPartition(int n_, std::vector<std::vector<int>> blocks_)
    : n(n_), blocks(std::move(blocks_))
{
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    int total = 0;
    for (auto &b : blocks) {
        if (b.empty())
            throw std::invalid_argument("empty block");
        std::sort(b.begin(), b.end());
        for (int e : b) {
            if (e < 1 || e > n || seen[static_cast<std::size_t>(e)])
                throw std::invalid_argument("blocks must partition [n]");
            seen[static_cast<std::size_t>(e)] = 1;
            ++total;
        }
    }
    if (total != n)
        throw std::invalid_argument("blocks must cover [n]");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto &a, const auto &b) { return a.front() < b.front(); });
}

PartitionKind partition_kind_from_name(const std::string &name)
{
    if (name == "all")
        return PartitionKind::all;
    if (name == "noncrossing")
        return PartitionKind::noncrossing;
    if (name == "interval")
        return PartitionKind::interval;
    if (name == "nc_irreducible")
        return PartitionKind::nc_irreducible;
    if (name == "pair")
        return PartitionKind::pair;
    if (name == "nc_pair")
        return PartitionKind::nc_pair;
    throw std::invalid_argument("unknown partition kind: '" + name + "'");
}

namespace {

// All partitions of [n] via restricted-growth strings.
std::vector<SetPartition> enumerate_all(int n)
{
    std::vector<SetPartition> out;
    if (n == 0) {
        out.emplace_back(0, std::vector<std::vector<int>>{});
        return out;
    }
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto emit = [&] {
        int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
        for (int i = 0; i < n; ++i)
            blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])]
                .push_back(i + 1);
        out.emplace_back(n, std::move(blocks));
    };
    // iterate RGS in lex order: rgs[0]=0, rgs[i] <= 1+max(rgs[0..i-1])
    while (true) {
        emit();
        int i = n - 1;
        for (; i > 0; --i) {
            int mx = 0;
            for (int j = 0; j < i; ++j)
                mx = std::max(mx, rgs[static_cast<std::size_t>(j)]);
            if (rgs[static_cast<std::size_t>(i)] <= mx) {
                ++rgs[static_cast<std::size_t>(i)];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
        }
        if (i == 0)
            break;
    }
    return out;
}

using Blocks = std::vector<std::vector<int>>;

// Noncrossing partitions of the interval [lo, hi]; direct generator via the
// block of the minimal element and independent gaps.
std::vector<Blocks> nc_range(int lo, int hi)
{
    std::vector<Blocks> out;
    if (lo > hi) {
        out.emplace_back();
        return out;
    }
    // block = current block of lo; gaps filled once the block is closed
    std::vector<int> block{lo};
    auto close = [&]() -> void {
        // partition each gap between consecutive block elements and the tail
        std::vector<std::pair<int, int>> gaps;
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
            gaps.emplace_back(block[i] + 1, block[i + 1] - 1);
        gaps.emplace_back(block.back() + 1, hi);
        std::vector<std::vector<Blocks>> per_gap;
        for (auto [a, b] : gaps)
            per_gap.push_back(nc_range(a, b));
        std::vector<std::size_t> idx(per_gap.size(), 0);
        while (true) {
            Blocks combined{block};
            for (std::size_t g = 0; g < per_gap.size(); ++g)
                for (const auto &sub : per_gap[g][idx[g]])
                    combined.push_back(sub);
            out.push_back(std::move(combined));
            std::size_t g = 0;
            for (; g < idx.size(); ++g) {
                if (++idx[g] < per_gap[g].size())
                    break;
                idx[g] = 0;
            }
            if (g == idx.size())
                break;
        }
    };
    auto extend = [&](auto &&extend_ref) -> void {
        close();
        for (int c = block.back() + 1; c <= hi; ++c) {
            block.push_back(c);
            extend_ref(extend_ref);
            block.pop_back();
        }
    };
    extend(extend);
    return out;
}

std::vector<SetPartition> enumerate_noncrossing(int n)
{
    std::vector<SetPartition> out;
    for (auto &blocks : nc_range(1, n))
        out.emplace_back(n, std::move(blocks));
    if (n == 0)
        out = {SetPartition(0, {})};
    return out;
}

std::vector<SetPartition> enumerate_interval(int n)
{
    std::vector<SetPartition> out;
    if (n == 0) {
        out.emplace_back(0, Blocks{});
        return out;
    }
    // compositions of n
    std::vector<int> parts;
    auto rec = [&](auto &&rec_ref, int rem) -> void {
        if (rem == 0) {
            Blocks blocks;
            int start = 1;
            for (int p : parts) {
                std::vector<int> b;
                for (int e = start; e < start + p; ++e)
                    b.push_back(e);
                blocks.push_back(std::move(b));
                start += p;
            }
            out.emplace_back(n, std::move(blocks));
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            parts.push_back(p);
            rec_ref(rec_ref, rem - p);
            parts.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

std::vector<SetPartition> enumerate_pair(int n)
{
    std::vector<SetPartition> out;
    if (n % 2 != 0)
        return out;
    if (n == 0) {
        out.emplace_back(0, Blocks{});
        return out;
    }
    Blocks blocks;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    auto rec = [&](auto &&rec_ref) -> void {
        int a = 0;
        for (int i = 1; i <= n; ++i)
            if (!used[static_cast<std::size_t>(i)]) {
                a = i;
                break;
            }
        if (a == 0) {
            out.emplace_back(n, blocks);
            return;
        }
        used[static_cast<std::size_t>(a)] = 1;
        for (int b = a + 1; b <= n; ++b) {
            if (used[static_cast<std::size_t>(b)])
                continue;
            used[static_cast<std::size_t>(b)] = 1;
            blocks.push_back({a, b});
            rec_ref(rec_ref);
            blocks.pop_back();
            used[static_cast<std::size_t>(b)] = 0;
        }
        used[static_cast<std::size_t>(a)] = 0;
    };
    rec(rec);
    return out;
}

} // namespace

std::vector<SetPartition> enumerate_partitions(PartitionKind kind, int n, int bound)
{
    if (n < 0)
        throw std::invalid_argument("n must be nonnegative");
    if (n > bound)
        throw std::out_of_range("n = " + std::to_string(n) +
                                " beyond enumeration bound " + std::to_string(bound));
    std::vector<SetPartition> out;
    switch (kind) {
    case PartitionKind::all:
        out = enumerate_all(n);
        break;
    case PartitionKind::noncrossing:
        out = enumerate_noncrossing(n);
        break;
    case PartitionKind::interval:
        out = enumerate_interval(n);
        break;
    case PartitionKind::nc_irreducible:
        for (auto &p : enumerate_noncrossing(n))
            if (n >= 1 && is_irreducible(p))
                out.push_back(std::move(p));
        break;
    case PartitionKind::pair:
        out = enumerate_pair(n);
        break;
    case PartitionKind::nc_pair:
        for (auto &p : enumerate_pair(n))
            if (is_noncrossing(p))
                out.push_back(std::move(p));
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_noncrossing(const SetPartition &p)
{
    // stack scan: an element of an already-open block must sit on top
    std::vector<int> block_of(static_cast<std::size_t>(p.n) + 1, -1);
    std::vector<int> last(p.blocks.size(), 0);
    for (std::size_t bi = 0; bi < p.blocks.size(); ++bi) {
        for (int e : p.blocks[bi])
            block_of[static_cast<std::size_t>(e)] = static_cast<int>(bi);
        last[bi] = p.blocks[bi].back();
    }
    std::vector<int> stack;
    std::vector<char> open(p.blocks.size(), 0);
    for (int i = 1; i <= p.n; ++i) {
        int b = block_of[static_cast<std::size_t>(i)];
        if (!open[static_cast<std::size_t>(b)]) {
            open[static_cast<std::size_t>(b)] = 1;
            stack.push_back(b);
        } else if (stack.back() != b) {
            return false;
        }
        if (last[static_cast<std::size_t>(b)] == i)
            stack.pop_back();
    }
    return true;
}

bool is_irreducible(const SetPartition &p)
{
    if (!is_noncrossing(p))
        throw std::invalid_argument("is_irreducible requires a noncrossing partition");
    if (p.n == 0)
        return false;
    const auto &first = p.blocks.front();
    return first.front() == 1 && first.back() == p.n;
}

Forest nesting_forest(const SetPartition &p)
{
    if (!is_noncrossing(p))
        throw std::invalid_argument("nesting_forest requires a noncrossing partition");
    const int k = p.block_count();
    std::vector<int> parent(static_cast<std::size_t>(k), -1);
    for (int i = 0; i < k; ++i) {
        int best = -1;
        for (int j = 0; j < k; ++j) {
            if (j == i)
                continue;
            // j surrounds i
            if (p.blocks[static_cast<std::size_t>(j)].front() <
                    p.blocks[static_cast<std::size_t>(i)].front() &&
                p.blocks[static_cast<std::size_t>(i)].back() <
                    p.blocks[static_cast<std::size_t>(j)].back()) {
                if (best == -1 ||
                    p.blocks[static_cast<std::size_t>(j)].front() >
                        p.blocks[static_cast<std::size_t>(best)].front())
                    best = j;
            }
        }
        parent[static_cast<std::size_t>(i)] = best;
    }
    auto build = [&](auto &&build_ref, int i) -> RootedTree {
        RootedTree t;
        t.block = i;
        for (int j = 0; j < k; ++j)
            if (parent[static_cast<std::size_t>(j)] == i)
                t.children.push_back(build_ref(build_ref, j));
        return t;
    };
    Forest f;
    for (int i = 0; i < k; ++i)
        if (parent[static_cast<std::size_t>(i)] == -1)
            f.push_back(build(build, i));
    return f;
}

Rat tree_factorial(const RootedTree &t)
{
    Rat r = t.node_count();
    for (const auto &c : t.children)
        r *= tree_factorial(c);
    return r;
}

Rat tree_factorial(const Forest &f)
{
    Rat r = 1;
    for (const auto &t : f)
        r *= tree_factorial(t);
    return r;
}

namespace {

// number of strictly order-preserving maps of the forest into the chain [k]
Int chain_maps(const Forest &f, int k);

Int chain_maps(const RootedTree &t, int k)
{
    // root goes to level l, subtrees map strictly above
    Int total = 0;
    for (int l = 1; l <= k; ++l)
        total += chain_maps(t.children, k - l);
    return total;
}

Int chain_maps(const Forest &f, int k)
{
    Int prod = 1;
    for (const auto &t : f)
        prod *= chain_maps(t, k);
    return prod;
}

} // namespace

Rat omega_weight(const RootedTree &t)
{
    const int p = t.node_count();
    Rat omega = 0;
    for (int k = 1; k <= p; ++k) {
        // surjections onto [k] by inclusion-exclusion over chain maps
        Int surj = 0;
        for (int j = 0; j <= k; ++j) {
            Int term = binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) *
                       chain_maps(t, j);
            if ((k - j) % 2 == 0)
                surj += term;
            else
                surj -= term;
        }
        Rat sign = (k % 2 == 1) ? 1 : -1;
        omega += sign * Rat(surj, k);
    }
    return omega;
}

Rat stirling_first(unsigned j, unsigned i)
{
    if (i > j)
        throw std::invalid_argument("stirling_first requires i <= j");
    // s(j+1,i) = s(j,i-1) - j*s(j,i)
    std::vector<std::vector<Int>> s(j + 1);
    s[0] = {1};
    for (unsigned r = 1; r <= j; ++r) {
        s[r].assign(r + 1, 0);
        for (unsigned c = 0; c <= r; ++c) {
            Int v = 0;
            if (c >= 1)
                v += s[r - 1][c - 1];
            if (c <= r - 1)
                v -= Int(r - 1) * s[r - 1][c];
            s[r][c] = v;
        }
    }
    return Rat(s[j][i]);
}

Int bell_number(unsigned n)
{
    // Bell triangle
    std::vector<Int> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<Int> next;
        next.reserve(i + 1);
        next.push_back(row.back());
        for (unsigned j = 0; j < row.size(); ++j)
            next.push_back(next.back() + row[j]);
        row = std::move(next);
    }
    return row.front();
}

std::string partition_to_string(const SetPartition &p)
{
    std::string s;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        if (b)
            s += '|';
        for (std::size_t i = 0; i < p.blocks[b].size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(p.blocks[b][i]);
        }
    }
    return s;
}

SetPartition partition_from_string(int n, const std::string &s)
{
    std::vector<std::vector<int>> blocks;
    std::stringstream ss(s);
    std::string blk;
    while (std::getline(ss, blk, '|')) {
        std::vector<int> b;
        std::stringstream bs(blk);
        std::string e;
        while (std::getline(bs, e, ','))
            b.push_back(std::stoi(e));
        if (!b.empty())
            blocks.push_back(std::move(b));
    }
    return SetPartition(n, std::move(blocks));
}

} // namespace ncprob
