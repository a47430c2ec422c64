#include "wmn/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wmn {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError(what + ": not valid JSON");
    if (!j.is_object()) throw ValidationError(what + ": top level must be an object");
    return j;
}

NodeId node_ref(const json& v, const WmnGraph& g, const std::string& what) {
    if (v.is_number_integer()) {
        auto id = v.get<NodeId>();
        if (!g.has_node(id)) {
            throw ValidationError(what + ": node id " + std::to_string(id) + " out of range");
        }
        return id;
    }
    if (v.is_string()) return g.node_by_name(v.get<std::string>());
    throw ValidationError(what + ": node reference must be an id or a name");
}

std::vector<ChannelId> channel_list(const json& v, const std::string& what) {
    if (!v.is_array()) throw ValidationError(what + ": expected an array of channel ids");
    std::vector<ChannelId> out;
    for (const auto& c : v) {
        if (!c.is_number_integer()) throw ValidationError(what + ": channel ids must be integers");
        out.push_back(c.get<ChannelId>());
    }
    return out;
}

// Node references in documents may be ids or names; resolution of names needs
// the node list parsed first, so edges are handled in a second pass.
WmnGraph graph_from_json(const json& j) {
    int node_count = 0;
    std::vector<std::string> names;
    const auto& nodes = j.at("nodes");
    if (nodes.is_number_integer()) {
        node_count = nodes.get<int>();
    } else if (nodes.is_array()) {
        for (const auto& n : nodes) {
            if (!n.is_string()) throw ValidationError("network: node names must be strings");
            names.push_back(n.get<std::string>());
        }
        node_count = static_cast<int>(names.size());
    } else {
        throw ValidationError("network: \"nodes\" must be a count or a list of names");
    }
    if (node_count <= 0) throw ValidationError("network: node count must be positive");

    std::vector<int> radios;
    const auto& rj = j.at("radios");
    if (rj.is_number_integer()) {
        radios.assign(static_cast<std::size_t>(node_count), rj.get<int>());
    } else if (rj.is_array()) {
        for (const auto& r : rj) {
            if (!r.is_number_integer()) throw ValidationError("network: radio counts must be integers");
            radios.push_back(r.get<int>());
        }
    } else {
        throw ValidationError("network: \"radios\" must be an integer or a list");
    }

    // Pass 1: build a graph with no edges so name lookups work.
    WmnGraph skeleton(node_count, {}, radios, names);

    std::vector<std::pair<NodeId, NodeId>> edges;
    const auto& ej = j.at("edges");
    if (!ej.is_array()) throw ValidationError("network: \"edges\" must be an array");
    for (const auto& e : ej) {
        if (!e.is_array() || e.size() != 2) {
            throw ValidationError("network: each edge must be a 2-element array");
        }
        edges.emplace_back(node_ref(e[0], skeleton, "network edge"),
                           node_ref(e[1], skeleton, "network edge"));
    }
    return WmnGraph(node_count, edges, std::move(radios), std::move(names));
}

json network_to_json(const NetworkDocument& doc) {
    json j;
    if (doc.grid) {
        j["grid"] = {doc.grid->first, doc.grid->second};
    } else {
        bool default_names = true;
        for (NodeId i = 0; i < doc.graph.node_count(); ++i) {
            if (doc.graph.name(i) != std::to_string(i)) {
                default_names = false;
                break;
            }
        }
        if (default_names) {
            j["nodes"] = doc.graph.node_count();
        } else {
            auto names = json::array();
            for (NodeId i = 0; i < doc.graph.node_count(); ++i) names.push_back(doc.graph.name(i));
            j["nodes"] = names;
        }
        auto edges = json::array();
        for (const Link& l : doc.graph.links()) edges.push_back({l.a, l.b});
        j["edges"] = edges;
    }

    bool uniform = true;
    for (NodeId i = 1; i < doc.graph.node_count(); ++i) {
        if (doc.graph.radios(i) != doc.graph.radios(0)) {
            uniform = false;
            break;
        }
    }
    if (uniform) {
        j["radios"] = doc.graph.radios(0);
    } else {
        auto radios = json::array();
        for (NodeId i = 0; i < doc.graph.node_count(); ++i) radios.push_back(doc.graph.radios(i));
        j["radios"] = radios;
    }
    j["channels"] = doc.channels.ids();
    return j;
}

} // namespace

NetworkDocument parse_network(const std::string& json_text) {
    json j = parse_json(json_text, "network");
    try {
        ChannelSet cs(channel_list(j.at("channels"), "network channels"));
        if (j.contains("grid")) {
            const auto& gj = j.at("grid");
            if (!gj.is_array() || gj.size() != 2 || !gj[0].is_number_integer() ||
                !gj[1].is_number_integer()) {
                throw ValidationError("network: \"grid\" must be [rows, cols]");
            }
            int rows = gj[0].get<int>();
            int cols = gj[1].get<int>();
            const auto& rj = j.at("radios");
            if (!rj.is_number_integer()) {
                throw ValidationError("network: grid form requires a single radio count");
            }
            return NetworkDocument{make_grid_graph(rows, cols, rj.get<int>()), std::move(cs),
                                   std::make_pair(rows, cols)};
        }
        return NetworkDocument{graph_from_json(j), std::move(cs), std::nullopt};
    } catch (const json::exception& e) {
        throw ValidationError(std::string("network: ") + e.what());
    }
}

NetworkDocument load_network(const std::string& path) {
    return parse_network(read_text_file(path));
}

std::string serialize_network(const NetworkDocument& doc) {
    return network_to_json(doc).dump(2) + "\n";
}

LinkChannelMap AssignmentDocument::to_link_map(const WmnGraph& g) const {
    if (per_node) return LinkChannelMap::from_assignment(g, *per_node);
    if (per_link) return LinkChannelMap::from_link_channels(g, *per_link);
    throw ValidationError("assignment document is empty");
}

AssignmentDocument parse_assignment(const std::string& json_text, const WmnGraph& g) {
    json j = parse_json(json_text, "assignment");
    AssignmentDocument doc;
    if (j.contains("assignment") == j.contains("link_assignment")) {
        throw ValidationError(
            "assignment: exactly one of \"assignment\" and \"link_assignment\" is required");
    }
    try {
        if (j.contains("assignment")) {
            const auto& aj = j.at("assignment");
            if (!aj.is_object()) throw ValidationError("assignment: \"assignment\" must be an object");
            std::vector<std::vector<ChannelId>> per_node(
                static_cast<std::size_t>(g.node_count()));
            std::vector<bool> seen(per_node.size(), false);
            for (const auto& [key, val] : aj.items()) {
                // Keys are node names; all-digit keys are also accepted as ids.
                NodeId id;
                if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos &&
                    key.size() <= 9) {
                    id = static_cast<NodeId>(std::stol(key));
                    if (!g.has_node(id)) {
                        throw ValidationError("assignment: node id " + key + " out of range");
                    }
                } else {
                    id = g.node_by_name(key);
                }
                auto u = static_cast<std::size_t>(id);
                if (seen[u]) throw ValidationError("assignment: node " + key + " listed twice");
                seen[u] = true;
                per_node[u] = channel_list(val, "assignment for node " + key);
            }
            for (std::size_t i = 0; i < seen.size(); ++i) {
                if (!seen[i]) {
                    throw ValidationError("assignment: no channels for node " +
                                          g.name(static_cast<NodeId>(i)));
                }
            }
            doc.per_node = ChannelAssignment(std::move(per_node));
        } else {
            const auto& lj = j.at("link_assignment");
            if (!lj.is_array()) {
                throw ValidationError("assignment: \"link_assignment\" must be an array");
            }
            std::vector<std::pair<Link, std::vector<ChannelId>>> per_link;
            for (const auto& e : lj) {
                if (!e.is_array() || e.size() != 3) {
                    throw ValidationError(
                        "assignment: each link entry must be [a, b, [channels]]");
                }
                Link l(node_ref(e[0], g, "link assignment"), node_ref(e[1], g, "link assignment"));
                if (!g.has_edge(l.a, l.b)) {
                    throw ValidationError("assignment: " + g.link_label(l) +
                                          " is not a link of the network");
                }
                per_link.emplace_back(l, channel_list(e[2], "link assignment"));
            }
            doc.per_link = std::move(per_link);
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("assignment: ") + e.what());
    }
    return doc;
}

AssignmentDocument load_assignment(const std::string& path, const WmnGraph& g) {
    return parse_assignment(read_text_file(path), g);
}

std::string serialize_assignment(const WmnGraph& g, const ChannelAssignment& ca) {
    json aj = json::object();
    for (NodeId i = 0; i < g.node_count(); ++i) aj[g.name(i)] = ca.channels(i);
    json j;
    j["assignment"] = aj;
    return j.dump(2) + "\n";
}

std::string serialize_link_assignment(const WmnGraph& g, const LinkChannelMap& m) {
    auto lj = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Link& l = m.links()[i];
        lj.push_back({g.name(l.a), g.name(l.b), m.common_channels(i)});
    }
    json j;
    j["link_assignment"] = lj;
    return j.dump(2) + "\n";
}

std::vector<FlowRequest> parse_flows(const std::string& json_text, const WmnGraph& g) {
    json j = parse_json(json_text, "flows");
    if (!j.contains("flows") || !j.at("flows").is_array()) {
        throw ValidationError("flows: expected a \"flows\" array");
    }
    std::vector<FlowRequest> out;
    try {
        for (const auto& fj : j.at("flows")) {
            if (!fj.is_object()) throw ValidationError("flows: each flow must be an object");
            FlowRequest f;
            f.source = node_ref(fj.at("source"), g, "flow source");
            f.destination = node_ref(fj.at("destination"), g, "flow destination");
            if (!fj.at("demand").is_number_integer() || fj.at("demand").get<int>() <= 0) {
                throw ValidationError("flows: demand must be a positive integer");
            }
            f.demand = fj.at("demand").get<int>();
            if (fj.contains("route")) {
                const auto& rj = fj.at("route");
                if (!rj.is_array()) throw ValidationError("flows: route must be an array");
                for (const auto& n : rj) f.route.push_back(node_ref(n, g, "flow route"));
            }
            out.push_back(std::move(f));
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("flows: ") + e.what());
    }
    if (out.empty()) throw ValidationError("flows: at least one flow is required");
    return out;
}

std::vector<FlowRequest> load_flows(const std::string& path, const WmnGraph& g) {
    return parse_flows(read_text_file(path), g);
}

std::string serialize_flows(const WmnGraph& g, const std::vector<FlowRequest>& flows) {
    auto fj = json::array();
    for (const FlowRequest& f : flows) {
        json e;
        e["source"] = g.name(f.source);
        e["destination"] = g.name(f.destination);
        e["demand"] = f.demand;
        if (!f.route.empty()) {
            auto rj = json::array();
            for (NodeId n : f.route) rj.push_back(g.name(n));
            e["route"] = rj;
        }
        fj.push_back(std::move(e));
    }
    json j;
    j["flows"] = fj;
    return j.dump(2) + "\n";
}

MetricTable parse_metrics(const std::string& json_text, const std::string& kind) {
    json j = parse_json(json_text, kind + " metrics");
    if (!j.contains(kind) || !j.at(kind).is_object()) {
        throw ValidationError(kind + " metrics: expected a \"" + kind + "\" object");
    }
    MetricTable table;
    for (const auto& [metric, vals] : j.at(kind).items()) {
        if (!vals.is_object()) {
            throw ValidationError(kind + " metrics: \"" + metric + "\" must map labels to numbers");
        }
        auto& row = table[metric];
        for (const auto& [label, v] : vals.items()) {
            if (!v.is_number()) {
                throw ValidationError(kind + " metrics: value for \"" + label +
                                      "\" must be a number");
            }
            row[label] = v.get<double>();
        }
        if (row.size() < 2) {
            throw ValidationError(kind + " metrics: \"" + metric + "\" needs at least two entries");
        }
    }
    if (table.empty()) throw ValidationError(kind + " metrics: no metrics present");
    return table;
}

MetricTable load_metrics(const std::string& path, const std::string& kind) {
    return parse_metrics(read_text_file(path), kind);
}

std::string serialize_metrics(const MetricTable& table, const std::string& kind) {
    json inner = json::object();
    for (const auto& [metric, row] : table) {
        json rj = json::object();
        for (const auto& [label, v] : row) rj[label] = v;
        inner[metric] = std::move(rj);
    }
    json j;
    j[kind] = std::move(inner);
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open \"" + path + "\" for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open \"" + path + "\" for writing");
    out << content;
    if (!out) throw ValidationError("failed writing \"" + path + "\"");
}

} // namespace wmn
