#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wmn/model.hpp"

namespace wmn {

// Parsed network document: topology plus the global channel set. When the
// document used the grid shorthand the dimensions are kept so serialization
// can round-trip the compact form.
struct NetworkDocument {
    WmnGraph graph;
    ChannelSet channels;
    std::optional<std::pair<int, int>> grid;
};

// Accepts either an explicit topology
//   {"nodes": 5 | ["A",...], "edges": [[0,1],...], "radios": 2 | [2,...],
//    "channels": [1,2,3]}
// or the grid shorthand
//   {"grid": [rows, cols], "radios": 2, "channels": [1,2,3]}.
// Edge endpoints may be ids or names. Throws ValidationError on malformed
// input.
NetworkDocument parse_network(const std::string& json_text);
NetworkDocument load_network(const std::string& path);
std::string serialize_network(const NetworkDocument& doc);

// Channel assignment document, either per node
//   {"assignment": {"A": [1,2], ...}}
// or directly per link (for patterns no per-node allocation can express)
//   {"link_assignment": [["A", "B", [1]], ...]}.
struct AssignmentDocument {
    std::optional<ChannelAssignment> per_node;
    std::optional<std::vector<std::pair<Link, std::vector<ChannelId>>>> per_link;

    LinkChannelMap to_link_map(const WmnGraph& g) const;
};

AssignmentDocument parse_assignment(const std::string& json_text, const WmnGraph& g);
AssignmentDocument load_assignment(const std::string& path, const WmnGraph& g);
std::string serialize_assignment(const WmnGraph& g, const ChannelAssignment& ca);
std::string serialize_link_assignment(const WmnGraph& g, const LinkChannelMap& m);

// One requested traffic flow. An empty route means the caller should fill in
// a shortest path.
struct FlowRequest {
    NodeId source = 0;
    NodeId destination = 0;
    int demand = 0;
    std::vector<NodeId> route;
};

// {"flows": [{"source": ..., "destination": ..., "demand": N,
//             "route": [ids or names]?}, ...]}
std::vector<FlowRequest> parse_flows(const std::string& json_text, const WmnGraph& g);
std::vector<FlowRequest> load_flows(const std::string& path, const WmnGraph& g);
std::string serialize_flows(const WmnGraph& g, const std::vector<FlowRequest>& flows);

// Metric table: metric/basis name -> (CA label -> value). Used by the
// evaluation subcommand for both observed and predicted documents:
//   {"observed": {"throughput": {"CA1": 3.25, ...}, ...}}
//   {"predicted": {"cxls": {"CA1": 41, ...}, ...}}
using MetricTable = std::map<std::string, std::map<std::string, double>>;

MetricTable parse_metrics(const std::string& json_text, const std::string& kind);
MetricTable load_metrics(const std::string& path, const std::string& kind);
std::string serialize_metrics(const MetricTable& table, const std::string& kind);

// Whole-file helpers. read_text_file throws ValidationError when the path is
// unreadable; write_text_file throws on I/O failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace wmn
