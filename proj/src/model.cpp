#include "wmn/model.hpp"

#include <set>

namespace wmn {

namespace {

void sort_unique(std::vector<ChannelId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

ChannelSet::ChannelSet(std::vector<ChannelId> ids) : ids_(std::move(ids)) {
    if (ids_.empty()) throw ValidationError("channel set must not be empty");
    for (ChannelId c : ids_) {
        if (c <= 0) throw ValidationError("channel ids must be positive, got " + std::to_string(c));
    }
    sort_unique(ids_);
}

WmnGraph::WmnGraph(int node_count,
                   const std::vector<std::pair<NodeId, NodeId>>& edges,
                   std::vector<int> radios,
                   std::vector<std::string> names)
    : radios_(std::move(radios)), names_(std::move(names)) {
    if (node_count <= 0) throw ValidationError("node count must be positive");
    adj_.resize(static_cast<std::size_t>(node_count));

    if (radios_.size() != static_cast<std::size_t>(node_count)) {
        throw ValidationError("radio list length " + std::to_string(radios_.size()) +
                              " does not match node count " + std::to_string(node_count));
    }
    for (std::size_t i = 0; i < radios_.size(); ++i) {
        if (radios_[i] < 1) {
            throw ValidationError("node " + std::to_string(i) + " must have at least one radio");
        }
    }

    if (names_.empty()) {
        names_.reserve(static_cast<std::size_t>(node_count));
        for (int i = 0; i < node_count; ++i) names_.push_back(std::to_string(i));
    } else if (names_.size() != static_cast<std::size_t>(node_count)) {
        throw ValidationError("name list length does not match node count");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw ValidationError("node names must not be empty");
        auto [it, fresh] = by_name_.emplace(names_[i], static_cast<NodeId>(i));
        if (!fresh) throw ValidationError("duplicate node name \"" + names_[i] + "\"");
    }

    std::set<Link> seen;
    for (const auto& [x, y] : edges) {
        if (x == y) {
            throw ValidationError("self loop at node " + std::to_string(x));
        }
        if (!has_node(x) || !has_node(y)) {
            throw ValidationError("edge (" + std::to_string(x) + ", " + std::to_string(y) +
                                  ") references an unknown node");
        }
        Link l(x, y);
        if (!seen.insert(l).second) {
            throw ValidationError("duplicate edge " + link_label(l));
        }
    }
    links_.assign(seen.begin(), seen.end());
    for (const Link& l : links_) {
        adj_[static_cast<std::size_t>(l.a)].push_back(l.b);
        adj_[static_cast<std::size_t>(l.b)].push_back(l.a);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

const std::vector<NodeId>& WmnGraph::adjacency(NodeId i) const {
    check_node(i);
    return adj_[static_cast<std::size_t>(i)];
}

int WmnGraph::radios(NodeId i) const {
    check_node(i);
    return radios_[static_cast<std::size_t>(i)];
}

bool WmnGraph::has_edge(NodeId i, NodeId j) const {
    if (!has_node(i) || !has_node(j) || i == j) return false;
    const auto& nbrs = adj_[static_cast<std::size_t>(i)];
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

const std::string& WmnGraph::name(NodeId i) const {
    check_node(i);
    return names_[static_cast<std::size_t>(i)];
}

NodeId WmnGraph::node_by_name(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw ValidationError("unknown node name \"" + name + "\"");
    return it->second;
}

std::string WmnGraph::link_label(const Link& l) const {
    return "(" + name(l.a) + ", " + name(l.b) + ")";
}

void WmnGraph::check_node(NodeId i) const {
    if (!has_node(i)) {
        throw ValidationError("node id " + std::to_string(i) + " out of range [0, " +
                              std::to_string(node_count()) + ")");
    }
}

WmnGraph make_grid_graph(int rows, int cols, int radios_per_node) {
    if (rows <= 0 || cols <= 0) throw ValidationError("grid dimensions must be positive");
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto id = [cols](int r, int c) { return static_cast<NodeId>(r * cols + c); };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return WmnGraph(rows * cols, edges, std::vector<int>(static_cast<std::size_t>(rows * cols), radios_per_node));
}

ChannelAssignment::ChannelAssignment(std::vector<std::vector<ChannelId>> per_node)
    : per_node_(std::move(per_node)) {
    for (auto& chs : per_node_) sort_unique(chs);
}

const std::vector<ChannelId>& ChannelAssignment::channels(NodeId i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= per_node_.size()) {
        throw ValidationError("assignment has no node " + std::to_string(i));
    }
    return per_node_[static_cast<std::size_t>(i)];
}

void validate_assignment(const WmnGraph& g, const ChannelSet& cs, const ChannelAssignment& ca) {
    if (ca.node_count() != g.node_count()) {
        throw ValidationError("assignment covers " + std::to_string(ca.node_count()) +
                              " nodes, graph has " + std::to_string(g.node_count()));
    }
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const auto& chs = ca.channels(i);
        if (chs.empty()) {
            throw ValidationError("node " + g.name(i) + " has no channel");
        }
        if (static_cast<int>(chs.size()) > g.radios(i)) {
            throw ValidationError("node " + g.name(i) + " uses " + std::to_string(chs.size()) +
                                  " channels but has " + std::to_string(g.radios(i)) + " radios");
        }
        for (ChannelId c : chs) {
            if (!cs.contains(c)) {
                throw ValidationError("node " + g.name(i) + " uses channel " + std::to_string(c) +
                                      " outside the channel set");
            }
        }
    }
}

LinkChannelMap LinkChannelMap::from_assignment(const WmnGraph& g, const ChannelAssignment& ca) {
    if (ca.node_count() != g.node_count()) {
        throw ValidationError("assignment covers " + std::to_string(ca.node_count()) +
                              " nodes, graph has " + std::to_string(g.node_count()));
    }
    LinkChannelMap m;
    m.links_ = g.links();
    m.channels_.reserve(m.links_.size());
    for (const Link& l : m.links_) {
        const auto& sa = ca.channels(l.a);
        const auto& sb = ca.channels(l.b);
        std::vector<ChannelId> common;
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
        m.channels_.push_back(std::move(common));
    }
    return m;
}

LinkChannelMap LinkChannelMap::from_link_channels(
    const WmnGraph& g, const std::vector<std::pair<Link, std::vector<ChannelId>>>& link_channels) {
    LinkChannelMap m;
    m.links_ = g.links();
    m.channels_.assign(m.links_.size(), {});
    std::vector<bool> set(m.links_.size(), false);
    for (const auto& [l, chs] : link_channels) {
        if (!g.has_edge(l.a, l.b)) {
            throw ValidationError("link " + std::to_string(l.a) + "-" + std::to_string(l.b) +
                                  " is not an edge of the graph");
        }
        std::size_t idx = m.index_of(l);
        if (set[idx]) throw ValidationError("duplicate channels for link " + g.link_label(l));
        set[idx] = true;
        auto sorted = chs;
        sort_unique(sorted);
        m.channels_[idx] = std::move(sorted);
    }
    return m;
}

const std::vector<ChannelId>& LinkChannelMap::common_channels(const Link& l) const {
    return channels_[index_of(l)];
}

std::size_t LinkChannelMap::index_of(const Link& l) const {
    auto it = std::lower_bound(links_.begin(), links_.end(), l);
    if (it == links_.end() || *it != l) {
        throw ValidationError("no such link in map");
    }
    return static_cast<std::size_t>(it - links_.begin());
}

std::vector<Link> LinkChannelMap::dead_links() const {
    std::vector<Link> out;
    for (std::size_t i = 0; i < links_.size(); ++i) {
        if (channels_[i].empty()) out.push_back(links_[i]);
    }
    return out;
}

} // namespace wmn
