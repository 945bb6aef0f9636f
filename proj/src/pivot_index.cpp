#include "idim/pivot_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "idim/error.hpp"
#include "idim/random.hpp"

namespace idim {

PivotIndex PivotIndex::prefix(std::size_t k) const {
    if (k == 0 || k > pivots_.size()) throw InvalidInput("prefix size out of range");
    PivotIndex out;
    out.pivots_.assign(pivots_.begin(), pivots_.begin() + static_cast<std::ptrdiff_t>(k));
    out.n_ = n_;
    out.policy_ = policy_;
    out.table_.resize(n_ * k);
    for (std::size_t i = 0; i < n_; ++i) {
        std::copy_n(table_.begin() + static_cast<std::ptrdiff_t>(i * pivots_.size()), k,
                    out.table_.begin() + static_cast<std::ptrdiff_t>(i * k));
    }
    return out;
}

PivotIndex build_pivot_index(const Dataset& ds, std::size_t k, const PivotPolicy& policy,
                             CountingOracle& oracle) {
    check_oracle(oracle, ds);
    const std::size_t n = ds.size();
    if (k == 0 || k > n) throw InvalidInput(fmt::format("pivot count must be in [1, {}], got {}", n, k));

    PivotIndex ix;
    ix.n_ = n;
    ix.policy_ = policy;
    ix.table_.assign(n * k, 0.0);

    auto fill_column = [&](std::size_t j) {
        const Point& p = ds[ix.pivots_[j]];
        for (std::size_t i = 0; i < n; ++i) ix.table_[i * k + j] = oracle.distance(ds[i], p);
    };

    if (const auto* random = std::get_if<RandomPivots>(&policy)) {
        Rng rng(random->seed);
        ix.pivots_ = sample_without_replacement(n, k, rng);
        for (std::size_t j = 0; j < k; ++j) fill_column(j);
        return ix;
    }

    const auto& ff = std::get<FarthestFirst>(policy);
    std::size_t first;
    if (ff.first) {
        if (*ff.first >= n) throw InvalidInput("first pivot outside the dataset");
        first = *ff.first;
    } else {
        Rng rng(ff.seed);
        first = static_cast<std::size_t>(rng.below(n));
    }
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    std::vector<char> chosen(n, 0);
    ix.pivots_.push_back(first);
    chosen[first] = 1;
    for (std::size_t j = 0;; ++j) {
        fill_column(j);
        if (j + 1 == k) break;
        for (std::size_t i = 0; i < n; ++i) nearest[i] = std::min(nearest[i], ix.table_[i * k + j]);
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (chosen[i]) continue;
            if (best == n || nearest[i] > nearest[best]) best = i;
        }
        ix.pivots_.push_back(best);
        chosen[best] = 1;
    }
    return ix;
}

std::vector<std::size_t> pivot_candidates(const PivotIndex& ix, std::span<const double> query_to_pivot,
                                          double eps) {
    const std::size_t k = ix.pivot_count();
    if (query_to_pivot.size() != k) throw InvalidInput("one query distance per pivot required");
    const double threshold = eps + kPruningSlack;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ix.size(); ++i) {
        const auto row = ix.row(i);
        bool keep = true;
        for (std::size_t j = 0; j < k; ++j) {
            if (std::abs(row[j] - query_to_pivot[j]) > threshold) {
                keep = false;
                break;
            }
        }
        if (keep) out.push_back(i);
    }
    return out;
}

RangeResult range_query(const PivotIndex& ix, const Dataset& ds, const Point& q, double eps,
                        CountingOracle& oracle) {
    if (!(eps > 0.0)) throw InvalidInput("range must be positive");
    check_oracle(oracle, ds);
    ds.check_compatible(q);
    if (ix.size() != ds.size()) throw InvalidInput("pivot index was built on a different dataset");

    const std::size_t k = ix.pivot_count();
    std::vector<double> to_pivot(k);
    for (std::size_t j = 0; j < k; ++j) to_pivot[j] = oracle.distance(q, ds[ix.pivots()[j]]);

    RangeResult out;
    const std::vector<std::size_t> candidates = pivot_candidates(ix, to_pivot, eps);
    for (std::size_t i : candidates) {
        if (oracle.distance(q, ds[i]) < eps) out.indices.push_back(i);
    }
    const std::size_t n = ds.size();
    out.stats.distance_computations = k + candidates.size();
    out.stats.candidates_after_pruning = candidates.size();
    out.stats.discarded_fraction = static_cast<double>(n - candidates.size()) / static_cast<double>(n);
    out.stats.result_size = out.indices.size();
    return out;
}

}  // namespace idim
