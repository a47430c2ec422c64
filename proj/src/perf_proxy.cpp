#include "wmn/perf_proxy.hpp"

#include <algorithm>
#include <future>
#include <queue>

#include "wmn/rng.hpp"

namespace wmn {

namespace {

struct Packet {
    int flow = 0;
    std::size_t hop = 0;     // index into the flow's link sequence
    int ready_slot = 0;      // earliest slot this packet may move
    int arrival_order = 0;   // FIFO tie-break within a link queue
};

void validate_route(const WmnGraph& g, const FlowSpec& f, int index) {
    const std::string label = "flow " + std::to_string(index);
    if (f.demand <= 0) throw ValidationError(label + ": demand must be positive");
    if (f.route.size() < 2) throw ValidationError(label + ": route needs at least two nodes");
    if (f.route.front() != f.source || f.route.back() != f.destination) {
        throw ValidationError(label + ": route endpoints do not match source/destination");
    }
    std::vector<NodeId> sorted = f.route;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError(label + ": route revisits a node");
    }
    for (std::size_t i = 0; i + 1 < f.route.size(); ++i) {
        if (!g.has_edge(f.route[i], f.route[i + 1])) {
            throw ValidationError(label + ": route step " + g.name(f.route[i]) + " -> " +
                                  g.name(f.route[i + 1]) + " is not an edge");
        }
    }
}

} // namespace

ProxyResult run_proxy(const WmnGraph& g, const LinkChannelMap& lcm,
                      const std::vector<FlowSpec>& flows, int x, int slots, std::uint64_t seed,
                      const ProxyOptions& opts) {
    if (slots < 1) throw ValidationError("episode length must be at least one slot");
    if (flows.empty()) throw ValidationError("at least one flow is required");
    for (std::size_t i = 0; i < flows.size(); ++i) {
        validate_route(g, flows[i], static_cast<int>(i));
    }

    const ConflictGraph cg = build_conflict_graph(g, lcm, x, opts.mode);
    const std::size_t m = cg.vertices().size();

    // Link indices per flow hop; a flow crossing a dead link is stalled and
    // its demand counted lost up front.
    ProxyResult r;
    std::vector<std::vector<std::size_t>> hops(flows.size());
    std::vector<bool> stalled(flows.size(), false);
    for (std::size_t i = 0; i < flows.size(); ++i) {
        const auto& route = flows[i].route;
        for (std::size_t h = 0; h + 1 < route.size(); ++h) {
            std::size_t li = cg.index_of(Link(route[h], route[h + 1]));
            hops[i].push_back(li);
            if (lcm.is_dead(li)) stalled[i] = true;
        }
        r.injected += flows[i].demand;
        if (stalled[i]) {
            r.lost_stalled += flows[i].demand;
            r.stalled_flows.push_back(static_cast<int>(i));
        }
    }

    // Per-link FIFO queues of in-flight packets.
    std::vector<std::vector<Packet>> queue(m);
    int order = 0;
    for (std::size_t i = 0; i < flows.size(); ++i) {
        if (stalled[i]) continue;
        for (int p = 0; p < flows[i].demand; ++p) {
            queue[hops[i][0]].push_back(Packet{static_cast<int>(i), 0, 1, order++});
        }
    }

    Rng rng(seed);
    std::int64_t delay_sum = 0;

    for (int slot = 1; slot <= slots; ++slot) {
        if (opts.ttl > 0 && slot > opts.ttl) break;

        // Candidate links, greedily activated in (queue length desc, rotated
        // index asc) order; rotation varies per slot so equal queues take
        // turns.
        const std::uint64_t rot = m > 0 ? rng.below(m) : 0;
        std::vector<std::pair<std::size_t, std::size_t>> ready; // (link, ready count)
        for (std::size_t li = 0; li < m; ++li) {
            std::size_t cnt = 0;
            for (const Packet& p : queue[li]) {
                if (p.ready_slot <= slot) ++cnt;
            }
            if (cnt > 0) ready.emplace_back(li, cnt);
        }
        std::sort(ready.begin(), ready.end(), [&](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return (a.first + m - rot) % m < (b.first + m - rot) % m;
        });

        std::vector<std::size_t> active;
        std::vector<bool> blocked(m, false);
        for (const auto& cand : ready) {
            const std::size_t li = cand.first;
            if (blocked[li]) continue;
            active.push_back(li);
            for (std::size_t nb : cg.neighbors(li)) blocked[nb] = true;
        }

        if (opts.record_schedule) r.schedule.push_back(active);

        for (std::size_t li : active) {
            // Forward the oldest ready packet on this link.
            auto& q = queue[li];
            std::size_t pick = q.size();
            for (std::size_t k = 0; k < q.size(); ++k) {
                if (q[k].ready_slot > slot) continue;
                if (pick == q.size() || q[k].arrival_order < q[pick].arrival_order) pick = k;
            }
            Packet p = q[pick];
            q.erase(q.begin() + static_cast<std::ptrdiff_t>(pick));
            ++p.hop;
            if (p.hop == hops[static_cast<std::size_t>(p.flow)].size()) {
                ++r.delivered;
                delay_sum += slot;
            } else {
                p.ready_slot = slot + 1;
                queue[hops[static_cast<std::size_t>(p.flow)][p.hop]].push_back(p);
            }
        }
    }

    for (const auto& q : queue) {
        if (opts.ttl > 0 && opts.ttl < slots) {
            r.lost_expired += static_cast<std::int64_t>(q.size());
        } else {
            r.residual_queued += static_cast<std::int64_t>(q.size());
        }
    }

    r.throughput_proxy = static_cast<double>(r.delivered) / static_cast<double>(slots);
    r.plr_proxy = r.injected > 0 ? static_cast<double>(r.lost_expired + r.lost_stalled) /
                                       static_cast<double>(r.injected)
                                 : 0.0;
    r.delay_proxy = r.delivered > 0 ? static_cast<double>(delay_sum) /
                                          static_cast<double>(r.delivered)
                                    : 0.0;
    return r;
}

ProxyResult run_proxy(const WmnGraph& g, const ChannelAssignment& ca,
                      const std::vector<FlowSpec>& flows, int x, int slots, std::uint64_t seed,
                      const ProxyOptions& opts) {
    return run_proxy(g, LinkChannelMap::from_assignment(g, ca), flows, x, slots, seed, opts);
}

ProxyResult run_proxy_episodes(const WmnGraph& g, const LinkChannelMap& lcm,
                               const std::vector<FlowSpec>& flows, int x, int slots,
                               std::uint64_t seed, int episodes, const ProxyOptions& opts) {
    if (episodes < 1) throw ValidationError("episode count must be at least 1");
    std::vector<std::future<ProxyResult>> futs;
    futs.reserve(static_cast<std::size_t>(episodes));
    for (int e = 0; e < episodes; ++e) {
        futs.push_back(std::async(std::launch::async, [&, e] {
            return run_proxy(g, lcm, flows, x, slots, seed + static_cast<std::uint64_t>(e), opts);
        }));
    }
    ProxyResult agg;
    for (auto& f : futs) {
        ProxyResult r = f.get();
        agg.throughput_proxy += r.throughput_proxy;
        agg.plr_proxy += r.plr_proxy;
        agg.delay_proxy += r.delay_proxy;
        agg.injected += r.injected;
        agg.delivered += r.delivered;
        agg.lost_expired += r.lost_expired;
        agg.lost_stalled += r.lost_stalled;
        agg.residual_queued += r.residual_queued;
        agg.stalled_flows = std::move(r.stalled_flows); // identical across episodes
    }
    const auto k = static_cast<double>(episodes);
    agg.throughput_proxy /= k;
    agg.plr_proxy /= k;
    agg.delay_proxy /= k;
    return agg;
}

std::vector<NodeId> shortest_route(const WmnGraph& g, NodeId src, NodeId dst) {
    if (!g.has_node(src) || !g.has_node(dst)) throw ValidationError("route endpoints unknown");
    if (src == dst) throw ValidationError("route endpoints must differ");
    std::vector<NodeId> parent(static_cast<std::size_t>(g.node_count()), -1);
    std::queue<NodeId> q;
    parent[static_cast<std::size_t>(src)] = src;
    q.push(src);
    while (!q.empty() && parent[static_cast<std::size_t>(dst)] == -1) {
        NodeId u = q.front();
        q.pop();
        for (NodeId v : g.adjacency(u)) { // ascending ids: deterministic parents
            if (parent[static_cast<std::size_t>(v)] == -1) {
                parent[static_cast<std::size_t>(v)] = u;
                q.push(v);
            }
        }
    }
    if (parent[static_cast<std::size_t>(dst)] == -1) {
        throw ValidationError("no route between " + g.name(src) + " and " + g.name(dst));
    }
    std::vector<NodeId> route;
    for (NodeId n = dst; n != src; n = parent[static_cast<std::size_t>(n)]) route.push_back(n);
    route.push_back(src);
    std::reverse(route.begin(), route.end());
    return route;
}

std::vector<FlowSpec> grid_scenario_flows(const WmnGraph& g, int concurrent_flows, int demand) {
    if (demand < 1) throw ValidationError("scenario demand must be positive");
    // The presets assume the 5x5 lattice (ids r*5+c).
    if (g.node_count() != 25 || g.links().size() != 40 || !g.has_edge(0, 1) ||
        !g.has_edge(0, 5) || !g.has_edge(19, 24)) {
        throw ValidationError("scenario presets require a 5x5 grid network");
    }
    auto id = [](int r, int c) { return static_cast<NodeId>(r * 5 + c); };
    auto row_flow = [&](int r) {
        FlowSpec f;
        f.source = id(r, 0);
        f.destination = id(r, 4);
        for (int c = 0; c <= 4; ++c) f.route.push_back(id(r, c));
        f.demand = demand;
        return f;
    };
    auto col_flow = [&](int c) {
        FlowSpec f;
        f.source = id(0, c);
        f.destination = id(4, c);
        for (int r = 0; r <= 4; ++r) f.route.push_back(id(r, c));
        f.demand = demand;
        return f;
    };
    // 8-hop staircase between opposite corners.
    auto diag_flow = [&](bool anti) {
        FlowSpec f;
        int c = anti ? 4 : 0;
        int step = anti ? -1 : 1;
        f.route.push_back(id(0, c));
        for (int r = 0; r <= 4; ++r) {
            if (r > 0) f.route.push_back(id(r, c));
            if (r < 4) {
                c += step;
                f.route.push_back(id(r, c));
            }
        }
        f.source = f.route.front();
        f.destination = f.route.back();
        f.demand = demand;
        return f;
    };

    std::vector<FlowSpec> flows;
    switch (concurrent_flows) {
    case 5:
        flows = {row_flow(0), row_flow(4), col_flow(0), col_flow(4), diag_flow(false)};
        break;
    case 8:
        flows = {row_flow(0), row_flow(2), row_flow(4), col_flow(0), col_flow(2), col_flow(4),
                 diag_flow(false), diag_flow(true)};
        break;
    case 10:
        flows = {row_flow(0), row_flow(1), row_flow(3), row_flow(4), col_flow(0), col_flow(1),
                 col_flow(3), col_flow(4), diag_flow(false), diag_flow(true)};
        break;
    case 12:
        flows = {row_flow(0), row_flow(1), row_flow(2), row_flow(3), row_flow(4), col_flow(0),
                 col_flow(1), col_flow(2), col_flow(3), col_flow(4), diag_flow(false),
                 diag_flow(true)};
        break;
    default:
        throw ValidationError("scenario must be one of 5, 8, 10, 12 concurrent flows");
    }
    return flows;
}

} // namespace wmn
