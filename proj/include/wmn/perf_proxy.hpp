#pragma once

#include <cstdint>
#include <vector>

#include "wmn/conflict.hpp"
#include "wmn/model.hpp"

namespace wmn {

// One traffic flow: demand packets injected at the source at time zero,
// forwarded hop by hop along an explicit route.
struct FlowSpec {
    NodeId source = 0;
    NodeId destination = 0;
    std::vector<NodeId> route; // node path, source first, destination last
    int demand = 0;            // packets per episode
};

struct ProxyOptions {
    int ttl = 0; // drop packets still in flight after this many slots; 0 disables
    ConflictMode mode = ConflictMode::conventional;
    bool record_schedule = false; // capture the per-slot active link sets
};

struct ProxyResult {
    double throughput_proxy = 0.0; // delivered packets per slot
    double plr_proxy = 0.0;        // lost (expired + stalled) / injected
    double delay_proxy = 0.0;      // mean slots from injection to delivery

    // Packet accounting; injected = delivered + lost_expired + lost_stalled
    // + residual_queued always holds.
    std::int64_t injected = 0;
    std::int64_t delivered = 0;
    std::int64_t lost_expired = 0;
    std::int64_t lost_stalled = 0;
    std::int64_t residual_queued = 0;

    std::vector<int> stalled_flows; // indices of flows with a dead hop

    // Active link indices per slot, filled only when record_schedule is set
    // (single-episode runs); indices refer to the conflict graph vertex order.
    std::vector<std::vector<std::size_t>> schedule;
};

// Slot-based conflict scheduler. Each slot activates a maximal independent
// set of the conflict graph among links with ready packets, greedily by
// longest queue with a seed-rotated index tie-break; an active link forwards
// one packet. A flow whose route crosses a link with no common channel is
// stalled: its whole demand is lost. Deterministic for a fixed seed.
ProxyResult run_proxy(const WmnGraph& g, const LinkChannelMap& lcm,
                      const std::vector<FlowSpec>& flows, int x, int slots, std::uint64_t seed,
                      const ProxyOptions& opts = {});
ProxyResult run_proxy(const WmnGraph& g, const ChannelAssignment& ca,
                      const std::vector<FlowSpec>& flows, int x, int slots, std::uint64_t seed,
                      const ProxyOptions& opts = {});

// Episodes for seeds seed..seed+episodes-1, metric fields averaged, packet
// counts summed. Episodes run concurrently; aggregation order is fixed, so
// results do not depend on thread scheduling.
ProxyResult run_proxy_episodes(const WmnGraph& g, const LinkChannelMap& lcm,
                               const std::vector<FlowSpec>& flows, int x, int slots,
                               std::uint64_t seed, int episodes,
                               const ProxyOptions& opts = {});

// Deterministic BFS shortest path (smallest-id parents win ties).
std::vector<NodeId> shortest_route(const WmnGraph& g, NodeId src, NodeId dst);

// Built-in traffic mixes for a 5x5 grid: 4-hop border/inner row and column
// flows plus 8-hop staircase diagonals, sized to 5, 8, 10 or 12 concurrent
// flows.
std::vector<FlowSpec> grid_scenario_flows(const WmnGraph& g, int concurrent_flows, int demand);

} // namespace wmn
