#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wmn/errors.hpp"

namespace wmn {

using NodeId = std::int32_t;
using ChannelId = std::int32_t;

// Undirected wireless link between two adjacent nodes. Endpoints are stored
// low-high so each unordered pair has one representation.
struct Link {
    NodeId a = 0;
    NodeId b = 0;

    Link() = default;
    Link(NodeId x, NodeId y) : a(std::min(x, y)), b(std::max(x, y)) {}

    bool touches(NodeId n) const { return a == n || b == n; }
    bool shares_node(const Link& o) const { return touches(o.a) || touches(o.b); }

    friend auto operator<=>(const Link&, const Link&) = default;
};

// Global set of mutually orthogonal channels.
class ChannelSet {
public:
    ChannelSet() = default;
    explicit ChannelSet(std::vector<ChannelId> ids);

    const std::vector<ChannelId>& ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool contains(ChannelId c) const {
        return std::binary_search(ids_.begin(), ids_.end(), c);
    }

    friend bool operator==(const ChannelSet&, const ChannelSet&) = default;

private:
    std::vector<ChannelId> ids_; // sorted, unique, positive
};

// Mesh topology: dense node ids 0..n-1, undirected edges, per-node radio
// counts. Immutable after construction and safe to share across threads.
class WmnGraph {
public:
    WmnGraph(int node_count,
             const std::vector<std::pair<NodeId, NodeId>>& edges,
             std::vector<int> radios,
             std::vector<std::string> names = {});

    int node_count() const { return static_cast<int>(adj_.size()); }
    const std::vector<Link>& links() const { return links_; }

    // Neighbors of i, sorted ascending.
    const std::vector<NodeId>& adjacency(NodeId i) const;

    int radios(NodeId i) const;
    bool has_node(NodeId i) const { return i >= 0 && i < node_count(); }
    bool has_edge(NodeId i, NodeId j) const;

    const std::string& name(NodeId i) const;
    NodeId node_by_name(const std::string& name) const;
    std::string link_label(const Link& l) const;

    friend bool operator==(const WmnGraph& x, const WmnGraph& y) {
        return x.links_ == y.links_ && x.radios_ == y.radios_ && x.names_ == y.names_;
    }

private:
    void check_node(NodeId i) const;

    std::vector<Link> links_;               // sorted, unique
    std::vector<std::vector<NodeId>> adj_;  // sorted neighbor lists
    std::vector<int> radios_;
    std::vector<std::string> names_;
    std::map<std::string, NodeId> by_name_;
};

// rows x cols lattice with 4-neighbor edges; node (r, c) has id r*cols + c.
WmnGraph make_grid_graph(int rows, int cols, int radios_per_node);

// Per-node allocated channel sets (one entry per node). Construction sorts
// and deduplicates each set; validity against a graph and channel set is
// checked by validate_assignment.
class ChannelAssignment {
public:
    ChannelAssignment() = default;
    explicit ChannelAssignment(std::vector<std::vector<ChannelId>> per_node);

    int node_count() const { return static_cast<int>(per_node_.size()); }
    const std::vector<ChannelId>& channels(NodeId i) const;
    const std::vector<std::vector<ChannelId>>& per_node() const { return per_node_; }

    friend auto operator<=>(const ChannelAssignment&, const ChannelAssignment&) = default;

private:
    std::vector<std::vector<ChannelId>> per_node_;
};

// Throws ValidationError unless: one non-empty set per node, every channel in
// cs, and |set| <= radios at that node.
void validate_assignment(const WmnGraph& g, const ChannelSet& cs, const ChannelAssignment& ca);

// Link -> common channels of its endpoints. Every topology edge has an entry;
// an empty entry marks a dead link (the assignment left it no channel), kept
// and flagged rather than dropped so estimators can decide its treatment.
class LinkChannelMap {
public:
    // One entry per edge of g; channels = intersection of the endpoint sets.
    static LinkChannelMap from_assignment(const WmnGraph& g, const ChannelAssignment& ca);

    // Direct per-link channels. Edges absent from link_channels get an empty
    // (dead) entry. Used for fixtures and link-level CA documents, which can
    // express channel patterns no per-node allocation realizes.
    static LinkChannelMap from_link_channels(
        const WmnGraph& g,
        const std::vector<std::pair<Link, std::vector<ChannelId>>>& link_channels);

    std::size_t size() const { return links_.size(); }
    const std::vector<Link>& links() const { return links_; }
    const std::vector<ChannelId>& common_channels(std::size_t idx) const { return channels_[idx]; }
    const std::vector<ChannelId>& common_channels(const Link& l) const;
    std::size_t index_of(const Link& l) const;
    bool is_dead(std::size_t idx) const { return channels_[idx].empty(); }
    std::vector<Link> dead_links() const;

    friend bool operator==(const LinkChannelMap&, const LinkChannelMap&) = default;

private:
    std::vector<Link> links_;                      // sorted; parallel to channels_
    std::vector<std::vector<ChannelId>> channels_; // each sorted
};

inline LinkChannelMap build_link_channel_map(const WmnGraph& g, const ChannelAssignment& ca) {
    return LinkChannelMap::from_assignment(g, ca);
}

} // namespace wmn
