#include "idim/net_tree.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "idim/error.hpp"

namespace idim {

struct NetTreeBuilder {
    static BuiltNetTree build(const Dataset& ds);
};

BuiltNetTree NetTreeBuilder::build(const Dataset& ds) {
    const std::size_t n = ds.size();
    NetTree tree;
    tree.point_count_ = n;
    const double r0 = n >= 2 ? diameter_upper_bound(ds).value : 0.0;
    tree.levels_.push_back({r0, {0}, {}, {}});

    std::vector<char> is_node(n, 0);
    is_node[0] = 1;
    // Distance to, and index of, the nearest node so far (lowest index on ties).
    std::vector<double> nearest_dist(n, 0.0);
    std::vector<std::size_t> nearest_node(n, 0);
    for (std::size_t p = 1; p < n; ++p) nearest_dist[p] = ds.distance(0, p);

    auto unresolved = [&] {
        for (std::size_t p = 0; p < n; ++p) {
            if (!is_node[p] && nearest_dist[p] > 0.0) return true;
        }
        return false;
    };

    const double floor = std::ldexp(r0, -kRadiusFloorExponent);
    while (r0 > 0.0 && unresolved()) {
        const NetLevel& prev = tree.levels_.back();
        const double r = prev.radius / 2.0;
        if (r < floor) break;

        NetLevel level{r, prev.nodes, {}, {}};
        level.parent.resize(prev.nodes.size());
        for (std::size_t pos = 0; pos < prev.nodes.size(); ++pos) level.parent[pos] = pos;

        for (std::size_t p = 0; p < n; ++p) {
            if (is_node[p] || nearest_dist[p] < r) continue;
            is_node[p] = 1;
            level.nodes.push_back(p);
            // Nearest previous-level node; lowest point index on ties.
            std::size_t parent = prev.nodes.size();
            double parent_dist = 0.0;
            for (std::size_t pos = 0; pos < prev.nodes.size(); ++pos) {
                const double d = ds.distance(prev.nodes[pos], p);
                if (parent == prev.nodes.size() || d < parent_dist ||
                    (d == parent_dist && prev.nodes[pos] < prev.nodes[parent])) {
                    parent = pos;
                    parent_dist = d;
                }
            }
            if (parent_dist > prev.radius) throw InvariantViolation("net tree: new node without parent");
            level.parent.push_back(parent);
            for (std::size_t q = 0; q < n; ++q) {
                if (is_node[q]) continue;
                const double d = ds.distance(p, q);
                if (d < nearest_dist[q] || (d == nearest_dist[q] && p < nearest_node[q])) {
                    nearest_dist[q] = d;
                    nearest_node[q] = p;
                }
            }
        }
        tree.levels_.push_back(std::move(level));
    }

    for (std::size_t i = 0; i + 1 < tree.levels_.size(); ++i) {
        NetLevel& upper = tree.levels_[i];
        const NetLevel& lower = tree.levels_[i + 1];
        upper.children.assign(upper.nodes.size(), {});
        for (std::size_t pos = 0; pos < lower.nodes.size(); ++pos) upper.children[lower.parent[pos]].push_back(pos);
    }

    const NetLevel& bottom = tree.levels_.back();
    std::vector<std::size_t> position_of(n, 0);
    for (std::size_t pos = 0; pos < bottom.nodes.size(); ++pos) position_of[bottom.nodes[pos]] = pos;
    tree.members_.assign(bottom.nodes.size(), {});
    for (std::size_t p = 0; p < n; ++p) {
        if (!is_node[p]) tree.members_[position_of[nearest_node[p]]].push_back(p);
    }

    TreeStats stats{1, tree.levels_.size() - 1, 0};
    for (const NetLevel& level : tree.levels_) {
        stats.node_count += level.nodes.size();
        for (const auto& c : level.children) stats.max_degree = std::max(stats.max_degree, c.size());
    }
    return {std::move(tree), stats};
}

BuiltNetTree build_net_tree(const Dataset& ds) { return NetTreeBuilder::build(ds); }

RangeResult net_range_query(const NetTree& tree, const Dataset& ds, const Point& q, double eps,
                            CountingOracle& oracle) {
    if (!(eps > 0.0)) throw InvalidInput("range must be positive");
    check_oracle(oracle, ds);
    ds.check_compatible(q);
    if (tree.point_count() != ds.size()) throw InvalidInput("net tree was built on a different dataset");

    const auto& levels = tree.levels();
    std::uint64_t computed = 0;
    auto measure = [&](std::size_t point) {
        ++computed;
        return oracle.distance(q, ds[point]);
    };

    struct Candidate {
        std::size_t position;
        double dist;
    };
    std::vector<Candidate> current;
    const double root_dist = measure(levels[0].nodes[0]);
    if (root_dist <= eps + 2.0 * levels[0].radius + kPruningSlack) current.push_back({0, root_dist});

    std::vector<Candidate> next;
    for (std::size_t i = 0; i + 1 < levels.size() && !current.empty(); ++i) {
        const NetLevel& lower = levels[i + 1];
        const double keep_within = eps + 2.0 * lower.radius + kPruningSlack;
        next.clear();
        for (const Candidate& c : current) {
            for (std::size_t child : levels[i].children[c.position]) {
                // Persisting nodes keep their position, and their distance.
                const double d = child == c.position ? c.dist : measure(lower.nodes[child]);
                if (d <= keep_within) next.push_back({child, d});
            }
        }
        std::swap(current, next);
    }

    RangeResult out;
    std::size_t inspected = 0;
    for (const Candidate& c : current) {
        ++inspected;
        if (c.dist < eps) out.indices.push_back(levels.back().nodes[c.position]);
        for (std::size_t m : tree.members()[c.position]) {
            ++inspected;
            if (measure(m) < eps) out.indices.push_back(m);
        }
    }
    std::sort(out.indices.begin(), out.indices.end());
    const std::size_t n = ds.size();
    out.stats.distance_computations = computed;
    out.stats.candidates_after_pruning = inspected;
    out.stats.discarded_fraction = static_cast<double>(n - inspected) / static_cast<double>(n);
    out.stats.result_size = out.indices.size();
    return out;
}

std::vector<std::string> verify_net_tree(const NetTree& tree, const Dataset& ds) {
    std::vector<std::string> problems;
    const auto& levels = tree.levels();
    const std::size_t n = ds.size();
    if (levels.empty() || levels[0].nodes.size() != 1) {
        problems.push_back("root level must hold exactly one node");
        return problems;
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const NetLevel& level = levels[i];
        const double r = level.radius;
        if (i > 0 && level.radius != levels[i - 1].radius / 2.0) {
            problems.push_back(fmt::format("level {}: radius does not halve", i));
        }
        for (std::size_t p = 0; p < n; ++p) {
            bool covered = false;
            for (std::size_t node : level.nodes) {
                if (ds.distance(node, p) <= r) {
                    covered = true;
                    break;
                }
            }
            if (!covered) problems.push_back(fmt::format("level {}: point {} not covered", i, p));
        }
        for (std::size_t a = 0; a < level.nodes.size(); ++a) {
            for (std::size_t b = a + 1; b < level.nodes.size(); ++b) {
                if (ds.distance(level.nodes[a], level.nodes[b]) < r) {
                    problems.push_back(fmt::format("level {}: nodes {} and {} closer than {}", i,
                                                   level.nodes[a], level.nodes[b], r));
                }
            }
        }
        if (i > 0) {
            const NetLevel& up = levels[i - 1];
            for (std::size_t pos = 0; pos < level.nodes.size(); ++pos) {
                const std::size_t parent = up.nodes[level.parent[pos]];
                if (ds.distance(parent, level.nodes[pos]) > up.radius) {
                    problems.push_back(fmt::format("level {}: node {} farther than {} from parent {}", i,
                                                   level.nodes[pos], up.radius, parent));
                }
            }
        }
    }
    const NetLevel& bottom = levels.back();
    std::vector<char> seen(n, 0);
    for (std::size_t pos = 0; pos < bottom.nodes.size(); ++pos) {
        seen[bottom.nodes[pos]] = 1;
        for (std::size_t m : tree.members()[pos]) {
            seen[m] = 1;
            if (ds.distance(m, bottom.nodes[pos]) > bottom.radius) {
                problems.push_back(fmt::format("member {} outside its leaf radius", m));
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (!seen[p]) problems.push_back(fmt::format("point {} missing from the leaves", p));
    }
    return problems;
}

}  // namespace idim
