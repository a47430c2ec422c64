#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "wmn/model.hpp"

namespace wmn {

// Whether interference is modeled on channel overlap alone, or additionally
// between any two links meeting at a node (radio co-location).
enum class ConflictMode { conventional, colocation_aware };

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

// Minimum hop distance in g between any endpoint of a and any endpoint of b.
// 0 iff the links share a node; kInfiniteDistance when their components are
// disconnected.
int link_distance(const WmnGraph& g, const Link& a, const Link& b);

// Links as vertices, potential mutual interference as edges. Immutable after
// construction.
class ConflictGraph {
public:
    ConflictGraph(std::vector<Link> vertices,
                  std::vector<std::pair<std::size_t, std::size_t>> conflict_pairs,
                  ConflictMode mode, int impact_factor);

    const std::vector<Link>& vertices() const { return vertices_; }
    ConflictMode mode() const { return mode_; }
    int impact_factor() const { return impact_factor_; }

    // Unordered vertex-index pairs (i < j), sorted.
    const std::vector<std::pair<std::size_t, std::size_t>>& conflict_pairs() const {
        return pairs_;
    }
    std::size_t conflict_count() const { return pairs_.size(); }
    bool conflicts(std::size_t i, std::size_t j) const;

    std::size_t index_of(const Link& l) const;
    int degree(std::size_t idx) const;
    const std::vector<std::size_t>& neighbors(std::size_t idx) const { return adj_[idx]; }

private:
    std::vector<Link> vertices_; // sorted
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::vector<std::size_t>> adj_;
    ConflictMode mode_;
    int impact_factor_;
};

// Conventional rule: two links conflict iff their common-channel sets
// intersect and they lie within x-1 hops of each other (x = impact factor, a
// traffic-to-interference ratio of 1:x). Colocation-aware mode additionally
// makes any two links sharing an endpoint conflict regardless of channels.
// Dead links are kept as isolated vertices under the conventional rule.
ConflictGraph build_conflict_graph(const WmnGraph& g, const LinkChannelMap& lcm, int x,
                                   ConflictMode mode = ConflictMode::conventional);

// Number of links that can potentially interfere with a.
int interference_degree(const ConflictGraph& cg, const Link& a);

// Half the sum of all interference degrees = the conflict-edge count.
double total_interference_degree(const ConflictGraph& cg);

} // namespace wmn
