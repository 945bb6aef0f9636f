#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "idim/metric.hpp"
#include "idim/range_search.hpp"

namespace idim {

// k distinct indices from a seeded partial shuffle.
struct RandomPivots {
    std::uint64_t seed = 42;
};

// First pivot seeded-random (or `first` when set); each next pivot maximizes
// the minimum distance to the chosen ones, lowest index on ties.
struct FarthestFirst {
    std::uint64_t seed = 42;
    std::optional<std::size_t> first;
};

using PivotPolicy = std::variant<RandomPivots, FarthestFirst>;

// Pivot table: the distance functions f_j = d(pivot_j, .) tabulated on the
// dataset, row-major n x k.
class PivotIndex {
public:
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::size_t pivot_count() const { return pivots_.size(); }
    std::size_t size() const { return n_; }
    double entry(std::size_t point, std::size_t pivot) const { return table_[point * pivots_.size() + pivot]; }
    std::span<const double> row(std::size_t point) const {
        return {table_.data() + point * pivots_.size(), pivots_.size()};
    }
    const PivotPolicy& policy() const { return policy_; }

    // Index restricted to its first k pivots.
    PivotIndex prefix(std::size_t k) const;

private:
    friend PivotIndex build_pivot_index(const Dataset&, std::size_t, const PivotPolicy&, CountingOracle&);
    std::vector<std::size_t> pivots_;
    std::vector<double> table_;
    std::size_t n_ = 0;
    PivotPolicy policy_;
};

// Costs exactly n * k counted distances for both policies (FarthestFirst
// reuses its selection distances as table columns).
PivotIndex build_pivot_index(const Dataset& ds, std::size_t k, const PivotPolicy& policy,
                             CountingOracle& oracle);

// Points surviving every pivot test |table[y][j] - d(q, pivot_j)| <= eps, in
// ascending order. `query_to_pivot` holds d(q, pivot_j).
std::vector<std::size_t> pivot_candidates(const PivotIndex& ix, std::span<const double> query_to_pivot,
                                          double eps);

// Exact range query {y : d(q, y) < eps}: k query-to-pivot distances, then one
// verification distance per surviving candidate.
RangeResult range_query(const PivotIndex& ix, const Dataset& ds, const Point& q, double eps,
                        CountingOracle& oracle);

}  // namespace idim
