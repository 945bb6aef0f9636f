#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "idim/metric.hpp"
#include "idim/range_search.hpp"

namespace idim {

// One level of the hierarchy. Nodes are nested: the first
// nodes.size() of the previous level reappear here at the same positions
// (each is its own child), followed by the nodes added at this radius.
struct NetLevel {
    double radius;
    std::vector<std::size_t> nodes;                  // dataset indices
    std::vector<std::size_t> parent;                 // position in the previous level; empty at level 0
    std::vector<std::vector<std::size_t>> children;  // positions in the next level; empty at the bottom
};

class NetTree {
public:
    const std::vector<NetLevel>& levels() const { return levels_; }
    const NetLevel& bottom() const { return levels_.back(); }
    // Points that are not bottom nodes (duplicates, or points closer than the
    // radius floor), filed under their nearest bottom node.
    const std::vector<std::vector<std::size_t>>& members() const { return members_; }
    std::size_t point_count() const { return point_count_; }

private:
    friend struct NetTreeBuilder;
    std::vector<NetLevel> levels_;
    std::vector<std::vector<std::size_t>> members_;
    std::size_t point_count_ = 0;
};

struct TreeStats {
    std::size_t max_degree;  // largest child count, at least 1
    std::size_t depth;       // number of levels below the root
    std::size_t node_count;  // sum of level sizes
};

struct BuiltNetTree {
    NetTree tree;
    TreeStats stats;
};

// Radius ladder r_0 = diameter_upper_bound, r_{i+1} = r_i / 2, stopping at
// the first level where every distinct point is a node, or before r drops
// below r_0 * 2^-40. Level 0 is the single root (point 0). Each deeper level
// extends the previous one greedily in ascending index with every point at
// distance >= r from all current nodes, so each level is a maximal
// r-separated set. A new node's parent is its nearest node of the previous
// level (lowest index on ties), which is always within that level's radius.
BuiltNetTree build_net_tree(const Dataset& ds);

inline constexpr int kRadiusFloorExponent = 40;

// Exact range query {y : d(q, y) < eps} by level-wise descent. A subtree
// rooted at a level-i node lies within 2 r_i of it (the parent chain sums
// r_i + r_{i+1} + ...), so a node is kept when d(q, node) <= eps + 2 r_i.
RangeResult net_range_query(const NetTree& tree, const Dataset& ds, const Point& q, double eps,
                            CountingOracle& oracle);

// Brute-force check of root, covering, separation, parent and leaf
// invariants. Returns human-readable violations; empty when all hold.
std::vector<std::string> verify_net_tree(const NetTree& tree, const Dataset& ds);

}  // namespace idim
