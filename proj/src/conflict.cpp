#include "wmn/conflict.hpp"

#include <algorithm>
#include <queue>

namespace wmn {

namespace {

// Hop distances from a single source over the whole graph.
std::vector<int> bfs_distances(const WmnGraph& g, NodeId src) {
    std::vector<int> dist(static_cast<std::size_t>(g.node_count()), kInfiniteDistance);
    dist[static_cast<std::size_t>(src)] = 0;
    std::queue<NodeId> q;
    q.push(src);
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        for (NodeId v : g.adjacency(u)) {
            if (dist[static_cast<std::size_t>(v)] == kInfiniteDistance) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

bool channels_intersect(const std::vector<ChannelId>& a, const std::vector<ChannelId>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i;
        else ++j;
    }
    return false;
}

} // namespace

int link_distance(const WmnGraph& g, const Link& a, const Link& b) {
    if (!g.has_edge(a.a, a.b) || !g.has_edge(b.a, b.b)) {
        throw ValidationError("link_distance: argument is not a link of the graph");
    }
    auto da = bfs_distances(g, a.a);
    auto db = bfs_distances(g, a.b);
    int best = kInfiniteDistance;
    for (NodeId n : {b.a, b.b}) {
        best = std::min({best, da[static_cast<std::size_t>(n)], db[static_cast<std::size_t>(n)]});
    }
    return best;
}

ConflictGraph::ConflictGraph(std::vector<Link> vertices,
                             std::vector<std::pair<std::size_t, std::size_t>> conflict_pairs,
                             ConflictMode mode, int impact_factor)
    : vertices_(std::move(vertices)),
      pairs_(std::move(conflict_pairs)),
      mode_(mode),
      impact_factor_(impact_factor) {
    if (impact_factor_ < 1) throw ValidationError("impact factor must be at least 1");
    if (!std::is_sorted(vertices_.begin(), vertices_.end())) {
        throw ValidationError("conflict graph vertices must be sorted");
    }
    adj_.resize(vertices_.size());
    for (auto& [i, j] : pairs_) {
        if (i >= vertices_.size() || j >= vertices_.size()) {
            throw ValidationError("conflict pair index out of range");
        }
        if (i == j) throw ValidationError("a link cannot conflict with itself");
        if (i > j) std::swap(i, j);
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
}

bool ConflictGraph::conflicts(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(i, j));
}

std::size_t ConflictGraph::index_of(const Link& l) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), l);
    if (it == vertices_.end() || *it != l) {
        throw ValidationError("link is not a vertex of the conflict graph");
    }
    return static_cast<std::size_t>(it - vertices_.begin());
}

int ConflictGraph::degree(std::size_t idx) const {
    if (idx >= adj_.size()) throw ValidationError("conflict graph vertex index out of range");
    return static_cast<int>(adj_[idx].size());
}

ConflictGraph build_conflict_graph(const WmnGraph& g, const LinkChannelMap& lcm, int x,
                                   ConflictMode mode) {
    if (x < 1) throw ValidationError("impact factor must be at least 1");
    if (lcm.links() != g.links()) {
        throw ValidationError("link-channel map does not match the graph's links");
    }

    const auto& links = lcm.links();
    const std::size_t m = links.size();

    // All-pairs link distances via one BFS per node.
    std::vector<std::vector<int>> node_dist;
    node_dist.reserve(static_cast<std::size_t>(g.node_count()));
    for (NodeId n = 0; n < g.node_count(); ++n) node_dist.push_back(bfs_distances(g, n));

    auto pair_distance = [&](const Link& a, const Link& b) {
        int best = kInfiniteDistance;
        for (NodeId u : {a.a, a.b}) {
            const auto& d = node_dist[static_cast<std::size_t>(u)];
            best = std::min({best, d[static_cast<std::size_t>(b.a)], d[static_cast<std::size_t>(b.b)]});
        }
        return best;
    };

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            bool colocated = links[i].shares_node(links[j]);
            bool conflict = false;
            if (channels_intersect(lcm.common_channels(i), lcm.common_channels(j))) {
                int d = pair_distance(links[i], links[j]);
                conflict = d != kInfiniteDistance && d <= x - 1;
            }
            if (mode == ConflictMode::colocation_aware && colocated) conflict = true;
            if (conflict) pairs.emplace_back(i, j);
        }
    }
    return ConflictGraph(links, std::move(pairs), mode, x);
}

int interference_degree(const ConflictGraph& cg, const Link& a) {
    return cg.degree(cg.index_of(a));
}

double total_interference_degree(const ConflictGraph& cg) {
    return static_cast<double>(cg.conflict_count());
}

} // namespace wmn
